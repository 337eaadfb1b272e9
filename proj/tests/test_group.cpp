#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "sct/group.hpp"

using namespace sct;

namespace {

GroupPtr family(const std::string& kind, int n) {
    return build_group(GroupSpec{GroupSpec::Family{kind, n}});
}

std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
    std::multiset<std::size_t> sizes;
    for (const auto& c : g.classes()) sizes.insert(c.size());
    return sizes;
}

void check_group_axioms(const FiniteGroup& g) {
    for (int a = 0; a < g.order(); ++a) {
        CHECK(g.mul(0, a) == a);
        CHECK(g.mul(a, 0) == a);
        CHECK(g.mul(a, g.inv(a)) == 0);
        for (int b = 0; b < g.order(); ++b) {
            for (int c = 0; c < g.order(); ++c) {
                REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            }
        }
    }
}

}  // namespace

TEST_CASE("named families have the expected orders and classes") {
    const auto trivial = family("cyclic", 1);
    CHECK(trivial->order() == 1);
    CHECK(trivial->num_classes() == 1);

    const auto s3 = family("symmetric", 3);
    CHECK(s3->order() == 6);
    CHECK(s3->num_classes() == 3);
    CHECK(class_sizes(*s3) == std::multiset<std::size_t>{1, 2, 3});

    const auto d4 = family("dihedral", 4);
    CHECK(d4->order() == 8);
    CHECK(d4->num_classes() == 5);

    const auto q8 = family("quaternion", 8);
    CHECK(q8->order() == 8);
    CHECK(q8->num_classes() == 5);
    CHECK(class_sizes(*q8) == std::multiset<std::size_t>{1, 1, 2, 2, 2});

    const auto s4 = family("symmetric", 4);
    CHECK(s4->order() == 24);
    CHECK(s4->num_classes() == 5);
    CHECK(s4->exponent() == 12);
}

TEST_CASE("group axioms hold on every built family") {
    for (const auto& g : {family("symmetric", 3), family("dihedral", 4), family("quaternion", 8),
                          family("cyclic", 6), family("dihedral", 5)}) {
        check_group_axioms(*g);
    }
}

TEST_CASE("conjugacy class layout is canonical") {
    const auto c4 = family("cyclic", 4);
    CHECK(c4->classes() == Partition{{0}, {1}, {2}, {3}});

    const auto s3 = family("symmetric", 3);
    const Partition classes = conjugacy_classes(*s3);
    CHECK(classes == s3->classes());
    CHECK(classes[0] == std::vector<int>{0});
    // Sizes partition the order and divide it.
    std::size_t total = 0;
    for (const auto& c : classes) {
        total += c.size();
        CHECK(s3->order() % c.size() == 0);
    }
    CHECK(total == static_cast<std::size_t>(s3->order()));
}

TEST_CASE("subgroup closure") {
    const auto c6 = family("cyclic", 6);
    CHECK(subgroup_closure(c6, {}).members == std::vector<int>{0});
    CHECK(subgroup_closure(c6, {2}).members == std::vector<int>{0, 2, 4});

    const auto s3 = family("symmetric", 3);
    // A 3-cycle generates the alternating subgroup of order 3.
    int three_cycle = -1;
    for (int x = 1; x < 6; ++x) {
        if (s3->element_order(x) == 3) {
            three_cycle = x;
            break;
        }
    }
    REQUIRE(three_cycle > 0);
    const Subgroup a3 = subgroup_closure(s3, {three_cycle});
    CHECK(a3.order() == 3);
    CHECK(is_normal(a3));
}

TEST_CASE("normality") {
    const auto s3 = family("symmetric", 3);
    CHECK(is_normal(subgroup_closure(s3, {})));
    int transposition = -1;
    for (int x = 1; x < 6; ++x) {
        if (s3->element_order(x) == 2) {
            transposition = x;
            break;
        }
    }
    REQUIRE(transposition > 0);
    CHECK(!is_normal(subgroup_closure(s3, {transposition})));
}

TEST_CASE("quotients") {
    const auto s3 = family("symmetric", 3);
    int three_cycle = 1;
    while (s3->element_order(three_cycle) != 3) ++three_cycle;
    const QuotientStructure q = make_quotient(subgroup_closure(s3, {three_cycle}));
    CHECK(q.quotient->order() == 2);
    // Projection is a homomorphism and commutes with inverses and identity.
    CHECK(q.projection[0] == 0);
    for (int a = 0; a < 6; ++a) {
        CHECK(q.projection[static_cast<std::size_t>(s3->inv(a))] ==
              q.quotient->inv(q.projection[static_cast<std::size_t>(a)]));
        for (int b = 0; b < 6; ++b) {
            CHECK(q.projection[static_cast<std::size_t>(s3->mul(a, b))] ==
                  q.quotient->mul(q.projection[static_cast<std::size_t>(a)],
                                  q.projection[static_cast<std::size_t>(b)]));
        }
    }

    const auto c8 = family("cyclic", 8);
    const QuotientStructure q8 = make_quotient(subgroup_closure(c8, {4}));
    CHECK(q8.quotient->order() == 4);
    CHECK(q8.quotient->exponent() == 4);  // cyclic of order 4

    const auto whole = make_quotient(full_subgroup(s3));
    CHECK(whole.quotient->order() == 1);

    int transposition = 1;
    while (s3->element_order(transposition) != 2) ++transposition;
    CHECK_THROWS_AS(make_quotient(subgroup_closure(s3, {transposition})), std::invalid_argument);
}

TEST_CASE("materialized subgroups multiply like their parents") {
    const auto d4 = family("dihedral", 4);
    const SubgroupGroup rotations = materialize_subgroup(subgroup_closure(d4, {1}));
    CHECK(rotations.group->order() == 4);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const int parent = d4->mul(rotations.to_parent[static_cast<std::size_t>(a)],
                                       rotations.to_parent[static_cast<std::size_t>(b)]);
            CHECK(rotations.to_parent[static_cast<std::size_t>(rotations.group->mul(a, b))] == parent);
        }
    }
}

TEST_CASE("explicit tables are validated") {
    CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}})->order() == 2);
    // Identity must be index 0.
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), std::invalid_argument);
    // Entry out of range.
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), std::invalid_argument);
    // Not associative: a Latin square with identity that fails (1,1,2).
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    std::invalid_argument);
}

TEST_CASE("permutation generators build deterministic groups") {
    const GroupSpec spec{GroupSpec::Generators{{{1, 0, 2}, {1, 2, 0}}}};
    const auto s3 = build_group(spec);
    CHECK(s3->order() == 6);
    CHECK(s3->num_classes() == 3);
    // Mismatched domains reported.
    CHECK_THROWS_AS(build_group(GroupSpec{GroupSpec::Generators{{{1, 0}, {1, 2, 0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_group(GroupSpec{GroupSpec::Generators{{{1, 1, 0}}}}),
                    std::invalid_argument);
}

TEST_CASE("direct products") {
    const auto v4 = build_group(GroupSpec{GroupSpec::Product{
        {GroupSpec{GroupSpec::Family{"cyclic", 2}}, GroupSpec{GroupSpec::Family{"cyclic", 2}}}}});
    CHECK(v4->order() == 4);
    CHECK(v4->num_classes() == 4);
    CHECK(v4->exponent() == 2);
}

TEST_CASE("order cap is enforced") {
    CHECK_THROWS_AS(build_group(GroupSpec{GroupSpec::Family{"cyclic", 3000}}),
                    std::invalid_argument);
    CHECK(build_group(GroupSpec{GroupSpec::Family{"cyclic", 3000}}, 4000)->order() == 3000);
}

TEST_CASE("shorthand parsing") {
    CHECK(build_group(parse_group_shorthand("cyclic:6"))->order() == 6);
    CHECK(build_group(parse_group_shorthand("quaternion"))->order() == 8);
    CHECK_THROWS_AS(parse_group_shorthand("sporadic:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_shorthand("cyclic"), std::invalid_argument);
}
