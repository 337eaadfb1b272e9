// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// exact arithmetic throughout. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "sct/lattice.hpp"
#include "sct/products.hpp"
#include "sct/superinduction.hpp"

using namespace sct;

namespace {

struct GroupData {
    std::string name;
    GroupPtr group;
    TablePtr table;
    SupLattice lattice;
    std::vector<Subgroup> subgroups;         // all subgroups, ascending order
    std::vector<Subgroup> normal_subgroups;  // including 1 and G
};

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    auto add = [&](const Subgroup& h) {
        if (seen.insert(h.members).second) out.push_back(h);
    };
    add(subgroup_closure(g, {}));
    for (int a = 0; a < g->order(); ++a) {
        add(subgroup_closure(g, {a}));
        for (int b = a; b < g->order(); ++b) {
            add(subgroup_closure(g, {a, b}));
            for (int c = b; c < g->order(); ++c) add(subgroup_closure(g, {a, b, c}));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
        return x.members < y.members;
    });
    return out;
}

class Fixture {
public:
    const GroupData& get(const std::string& name) {
        auto it = cache_.find(name);
        if (it != cache_.end()) return it->second;
        GroupData data;
        data.name = name;
        data.group = build(name);
        data.table = build_character_table(data.group);
        data.lattice = enumerate_sup(data.table, 14, 2);
        data.subgroups = all_subgroups(data.group);
        for (const auto& h : data.subgroups) {
            if (is_normal(h)) data.normal_subgroups.push_back(h);
        }
        return cache_.emplace(name, std::move(data)).first->second;
    }

    const StarContext& star_context(const GroupData& data, const Subgroup& n) {
        const auto key = std::make_pair(data.name, n.members);
        auto it = star_cache_.find(key);
        if (it != star_cache_.end()) return it->second;
        return star_cache_.emplace(key, make_star_context(data.group, data.table, n)).first->second;
    }

    static std::vector<std::string> test_set() {
        std::vector<std::string> names;
        for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
        names.insert(names.end(), {"S3", "S4", "D4", "D5", "Q8", "C2xC2xC2", "S3xC2"});
        return names;
    }

private:
    static GroupPtr build(const std::string& name) {
        const GroupSpec c2{GroupSpec::Family{"cyclic", 2}};
        if (name == "S3") return build_group(GroupSpec{GroupSpec::Family{"symmetric", 3}});
        if (name == "S4") return build_group(GroupSpec{GroupSpec::Family{"symmetric", 4}});
        if (name == "D4") return build_group(GroupSpec{GroupSpec::Family{"dihedral", 4}});
        if (name == "D5") return build_group(GroupSpec{GroupSpec::Family{"dihedral", 5}});
        if (name == "Q8") return build_group(GroupSpec{GroupSpec::Family{"quaternion", 8}});
        if (name == "C2xC2xC2") return build_group(GroupSpec{GroupSpec::Product{{c2, c2, c2}}});
        if (name == "S3xC2") {
            return build_group(GroupSpec{GroupSpec::Product{
                {GroupSpec{GroupSpec::Family{"symmetric", 3}}, c2}}});
        }
        return build_group(GroupSpec{GroupSpec::Family{"cyclic", std::stoi(name.substr(1))}});
    }

    std::map<std::string, GroupData> cache_;
    std::map<std::pair<std::string, std::vector<int>>, StarContext> star_cache_;
};

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

// ---------------------------------------------------------------------------

void criterion_1_bijection(Fixture& fx) {
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        require(!data.lattice.theories.empty(), name + ": empty lattice");
        for (const auto& theory : data.lattice.theories) {
            // Forward: the class partition is a central Schur partition
            // (validated element-wise, independent of the class-level search).
            const SchurPartition s = make_schur_partition(data.group, theory.class_part);
            require(s.central, name + ": enumerated partition not central");
            // Back: the bijection recovers exactly the same theory.
            const SupercharacterTheory back = sring_to_sct(s, data.table);
            require(back == theory, name + ": round-trip changed the theory");
            require(back.char_part == theory.char_part, name + ": character side changed");
            // And sct_to_sring inverts again.
            require(sct_to_sring(back).blocks == s.blocks, name + ": inverse changed the ring");
        }
    }
}

void criterion_2_counts(Fixture& fx) {
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        if (data.group->num_classes() > 6) continue;
        std::vector<Partition> enumerated;
        for (const auto& c : data.lattice.theories) enumerated.push_back(c.class_part);
        std::sort(enumerated.begin(), enumerated.end());
        const std::vector<Partition> expected =
            oracle::enumerate_theories_bruteforce(data.table, true);
        require(enumerated == expected, name + ": enumeration disagrees with the oracle");
    }
    require(fx.get("C4").lattice.size() == 3, "C4: expected 3 theories");
    require(fx.get("S3").lattice.size() == 2, "S3: expected 2 theories");
}

QMatrix indicator_basis(const Partition& blocks, int n) {
    QMatrix basis;
    for (const auto& block : blocks) {
        QVector v(static_cast<std::size_t>(n), Rational(0));
        for (int x : block) v[static_cast<std::size_t>(x)] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

void criterion_3_join(Fixture& fx) {
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        const int n = data.group->order();
        for (const auto& c : data.lattice.theories) {
            for (const auto& d : data.lattice.theories) {
                const SupercharacterTheory j = sct_join(c, d);  // validates
                require(data.lattice.index_of(j) >= 0, name + ": join left the lattice");
                const QMatrix inter = span_intersection(indicator_basis(c.class_part, n),
                                                        indicator_basis(d.class_part, n));
                require(same_span(inter, indicator_basis(j.class_part, n)),
                        name + ": span intersection mismatch");
            }
        }
    }
}

void criterion_4_order(Fixture& fx) {
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        const int n = data.group->order();
        const int r = data.table->num_irreducibles();
        for (const auto& c : data.lattice.theories) {
            for (const auto& d : data.lattice.theories) {
                const bool class_side = partition_refines(c.class_part, d.class_part, n);
                const bool char_side = partition_refines(c.char_part, d.char_part, r);
                require(class_side == char_side, name + ": order corollary failed");
                require(sct_leq(c, d) == class_side, name + ": sct_leq inconsistent");
            }
        }
    }
}

void criterion_5_star(Fixture& fx) {
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        for (const Subgroup& n : data.normal_subgroups) {
            const StarContext& ctx = fx.star_context(data, n);
            const SupLattice sup_n = enumerate_sup(ctx.table_n, 14, 2);
            const SupLattice sup_q = enumerate_sup(ctx.table_q, 14, 2);
            for (const auto& c : sup_n.theories) {
                if (!is_action_invariant(c, ctx.conj_action)) continue;
                for (const auto& d : sup_q.theories) {
                    const SupercharacterTheory e = star_product(ctx, c, d);
                    require(e.size() == c.size() + d.size() - 1, name + ": star size identity");
                    require(data.lattice.index_of(e) >= 0, name + ": star left Sup(G)");
                    require(restrict_to_normal(e, ctx.n_group, ctx.table_n) == c,
                            name + ": (C*D)_N differs from C");
                    require(deflate_to_quotient(e, ctx.quotient, ctx.table_q, ctx.lift) == d,
                            name + ": (C*D)^{G/N} differs from D");
                }
            }
        }
    }
}

void criterion_6_restriction(Fixture& fx) {
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        for (const Subgroup& n : data.normal_subgroups) {
            const StarContext& ctx = fx.star_context(data, n);
            const SupercharacterTheory mng = theory_m_NG_via_star(ctx);
            for (const auto& c : data.lattice.theories) {
                if (!is_sct_normal(c, n.members)) continue;
                const SupercharacterTheory lhs =
                    star_product(ctx, restrict_to_normal(c, ctx.n_group, ctx.table_n),
                                 deflate_to_quotient(c, ctx.quotient, ctx.table_q, ctx.lift));
                require(lhs == sct_join(c, mng), name + ": restriction identity failed");
            }
        }
    }
}

void criterion_7_wedge(Fixture& fx) {
    int composable_pairs = 0;
    for (const auto& name : {std::string("C8"), std::string("D4")}) {
        const GroupData& data = fx.get(name);
        // Strict chains 1 < N < M < G of normal subgroups.
        for (const Subgroup& n : data.normal_subgroups) {
            if (n.order() == 1 || n.order() == data.group->order()) continue;
            for (const Subgroup& m : data.normal_subgroups) {
                if (m.order() <= n.order() || m.order() == data.group->order()) continue;
                const bool contains_n = std::includes(m.members.begin(), m.members.end(),
                                                      n.members.begin(), n.members.end());
                if (!contains_n) continue;
                const WedgeContext ctx = make_wedge_context(data.group, data.table, n, m);
                const SupLattice sup_m = enumerate_sup(ctx.table_m);
                const SupLattice sup_q = enumerate_sup(ctx.n_ctx.table_q);
                for (const auto& c : sup_m.theories) {
                    if (!is_action_invariant(c, ctx.conj_action_m)) continue;
                    if (!is_sct_normal(c, ctx.n_in_m.members)) continue;
                    for (const auto& d : sup_q.theories) {
                        if (!is_sct_normal(d, ctx.s_group.parent_subgroup.members)) continue;
                        SupercharacterTheory e{nullptr, {}, {}};
                        try {
                            e = wedge_product(ctx, c, d);
                        } catch (const ValidationError& err) {
                            require(err.violation().condition == "overlap_mismatch",
                                    name + ": unexpected wedge rejection: " + err.violation().condition);
                            continue;
                        }
                        ++composable_pairs;
                        require(data.lattice.index_of(e) >= 0, name + ": wedge left Sup(G)");
                        const WedgeFactorization fact = wedge_recognize(ctx, e);
                        require(fact.is_wedge, name + ": wedge not recognized");
                        require(fact.restricted == c && fact.deflated == d,
                                name + ": refactorization mismatch");
                        // Uniqueness.
                        int matches = 0;
                        for (const auto& f : data.lattice.theories) {
                            if (!is_sct_normal(f, n.members) || !is_sct_normal(f, m.members)) {
                                continue;
                            }
                            const WedgeFactorization ff = wedge_recognize(ctx, f);
                            if (ff.is_wedge && ff.restricted == c && ff.deflated == d) ++matches;
                        }
                        require(matches == 1, name + ": wedge product not unique");
                    }
                }
            }
        }
    }
    require(composable_pairs > 0, "no composable wedge pairs found");
}

Cyclotomic random_value(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<int> root(1, 8);
    const int n = root(rng);
    std::uniform_int_distribution<int> exp(0, n - 1);
    return Cyclotomic(make_rational(coeff(rng), den(rng))) +
           Cyclotomic(coeff(rng)) * Cyclotomic::root_of_unity(n, exp(rng));
}

void criterion_8_superinduction(Fixture& fx) {
    std::mt19937 rng(20260811);
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        std::uniform_int_distribution<int> pick_theory(0, data.lattice.size() - 1);
        std::uniform_int_distribution<int> pick_elem(0, data.group->order() - 1);
        // Frobenius reciprocity on 100 randomized (H, phi, theta): phi a
        // random class function of H, theta a random superclass function.
        for (int trial = 0; trial < 100; ++trial) {
            const SupercharacterTheory& c =
                data.lattice.theories[static_cast<std::size_t>(pick_theory(rng))];
            const Subgroup h = subgroup_closure(data.group, {pick_elem(rng), pick_elem(rng)});
            const SubgroupGroup hg = materialize_subgroup(h);
            std::vector<Cyclotomic> class_values;
            for (int k = 0; k < hg.group->num_classes(); ++k) {
                class_values.push_back(random_value(rng));
            }
            std::vector<Cyclotomic> phi;
            for (int i = 0; i < h.order(); ++i) {
                phi.push_back(class_values[static_cast<std::size_t>(hg.group->class_of(i))]);
            }
            SuperclassFunction theta{c, {}};
            for (std::size_t k = 0; k < c.class_part.size(); ++k) {
                theta.values.push_back(random_value(rng));
            }
            require(check_reciprocity(c, h, phi, theta), name + ": reciprocity failed");
        }
        // Superinduce-then-restrict for every theory and C-normal subgroup;
        // superinduce_from_normal asserts the restriction identity itself.
        for (const auto& c : data.lattice.theories) {
            for (const Subgroup& n : data.normal_subgroups) {
                if (!is_sct_normal(c, n.members)) continue;
                std::vector<Cyclotomic> phi(static_cast<std::size_t>(n.order()));
                for (const auto& block : c.class_part) {
                    if (!n.contains(block[0])) continue;
                    const Cyclotomic value = random_value(rng);
                    for (int x : block) phi[static_cast<std::size_t>(n.index_of(x))] = value;
                }
                const SuperclassFunction induced = superinduce_from_normal(c, n, phi);
                const Rational index = make_rational(data.group->order(), n.order());
                for (std::size_t k = 0; k < c.class_part.size(); ++k) {
                    const int rep = c.class_part[k][0];
                    if (!n.contains(rep)) continue;
                    require(induced.values[k] ==
                                phi[static_cast<std::size_t>(n.index_of(rep))] * Cyclotomic(index),
                            name + ": restriction identity value mismatch");
                }
            }
        }
        // With C = m(G), superinduction is ordinary induction.
        const SupercharacterTheory m = theory_m(data.table);
        for (int trial = 0; trial < 10; ++trial) {
            const Subgroup h = subgroup_closure(data.group, {pick_elem(rng), pick_elem(rng)});
            const SubgroupGroup hg = materialize_subgroup(h);
            ClassFunction phi_class{hg.group, {}};
            for (int c = 0; c < hg.group->num_classes(); ++c) {
                phi_class.values.push_back(random_value(rng));
            }
            std::vector<Cyclotomic> phi;
            for (int i = 0; i < h.order(); ++i) phi.push_back(phi_class.at_element(i));
            const SuperclassFunction via_super = superinduce(m, h, phi);
            const ClassFunction via_ordinary = induce_class_function(phi_class, hg, data.group);
            for (std::size_t k = 0; k < m.class_part.size(); ++k) {
                require(via_super.values[k] == via_ordinary.at_element(m.class_part[k][0]),
                        name + ": superinduction differs from ordinary induction");
            }
        }
    }
}

void criterion_9_direct(Fixture& fx) {
    struct Case {
        std::string a, b;
    };
    for (const Case& cs : {Case{"S3", "C2"}, Case{"C4", "C2"}}) {
        const GroupData& da = fx.get(cs.a);
        const GroupData& db = fx.get(cs.b);
        const GroupPtr prod = product_group(da.group, db.group);
        const TablePtr tprod = build_character_table(prod);
        const int nb = db.group->order();
        // Independent pairing of irreducibles by exact value matching.
        const int ra = da.table->num_irreducibles();
        const int rb = db.table->num_irreducibles();
        std::vector<std::vector<int>> pair_irr(static_cast<std::size_t>(ra),
                                               std::vector<int>(static_cast<std::size_t>(rb), -1));
        for (int i = 0; i < ra; ++i) {
            for (int j = 0; j < rb; ++j) {
                std::vector<Cyclotomic> row(static_cast<std::size_t>(prod->num_classes()));
                for (int k = 0; k < prod->num_classes(); ++k) {
                    const int rep = prod->class_rep(k);
                    row[static_cast<std::size_t>(k)] =
                        da.table->value(i, da.group->class_of(rep / nb)) *
                        db.table->value(j, db.group->class_of(rep % nb));
                }
                for (int t = 0; t < tprod->num_irreducibles(); ++t) {
                    if (tprod->row(t) == row) pair_irr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
                }
                require(pair_irr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= 0,
                        "pair character missing");
            }
        }
        for (const auto& c : da.lattice.theories) {
            for (const auto& d : db.lattice.theories) {
                const SupercharacterTheory e = direct_product(c, d, prod, tprod);
                require(e.size() == c.size() * d.size(), "direct size identity");
                // sigma_{X x Y}((m,n)) = sigma_X(m) sigma_Y(n), all blocks,
                // all elements.
                const std::vector<int> block_of = block_index_map(e.char_part,
                                                                  tprod->num_irreducibles());
                for (const auto& x : c.char_part) {
                    for (const auto& y : d.char_part) {
                        std::vector<int> product_block;
                        for (int i : x) {
                            for (int j : y) {
                                product_block.push_back(
                                    pair_irr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                            }
                        }
                        std::sort(product_block.begin(), product_block.end());
                        // X x Y is a block of the product theory.
                        require(e.char_part[static_cast<std::size_t>(
                                    block_of[static_cast<std::size_t>(product_block[0])])] ==
                                    product_block,
                                "X x Y is not a block");
                        const ClassFunction se = sigma(*tprod, product_block);
                        const ClassFunction sx = sigma(*da.table, x);
                        const ClassFunction sy = sigma(*db.table, y);
                        for (int g = 0; g < prod->order(); ++g) {
                            require(se.at_element(g) ==
                                        sx.at_element(g / nb) * sy.at_element(g % nb),
                                    "sigma product identity failed");
                        }
                    }
                }
                // Bijection consistency square.
                require(sct_to_sring(e).blocks ==
                            sring_dot_product(sct_to_sring(c), sct_to_sring(d), prod).blocks,
                        "dot product diagram does not commute");
            }
        }
    }
}

void criterion_10_tables(Fixture& fx) {
    for (const auto& name : Fixture::test_set()) {
        const GroupData& data = fx.get(name);
        const FiniteGroup& g = *data.group;
        const CharacterTable& t = *data.table;
        const int r = t.num_irreducibles();
        require(r == g.num_classes(), name + ": table size");
        long long degree_square_sum = 0;
        for (int i = 0; i < r; ++i) {
            degree_square_sum += static_cast<long long>(t.degree(i)) * t.degree(i);
        }
        require(degree_square_sum == g.order(), name + ": sum of squared degrees");
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                Cyclotomic acc;
                for (int c = 0; c < r; ++c) {
                    acc += Cyclotomic(Rational(g.class_size(c))) * t.value(i, c) *
                           t.value(j, c).conj();
                }
                require(acc == Cyclotomic(i == j ? g.order() : 0), name + ": row orthogonality");
            }
        }
        for (int c = 0; c < r; ++c) {
            for (int d = 0; d < r; ++d) {
                Cyclotomic acc;
                for (int i = 0; i < r; ++i) acc += t.value(i, c) * t.value(i, d).conj();
                require(acc == Cyclotomic(c == d ? make_rational(g.order(), g.class_size(c))
                                                 : Rational(0)),
                        name + ": column orthogonality");
            }
        }
        // Idempotency of every e_chi (and pairwise orthogonality).
        std::vector<GroupAlgebraElement> es;
        for (int i = 0; i < r; ++i) es.push_back(central_idempotent(t, i));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                const GroupAlgebraElement prod = algebra_mul(es[static_cast<std::size_t>(i)],
                                                             es[static_cast<std::size_t>(j)]);
                if (i == j) {
                    require(prod == es[static_cast<std::size_t>(i)], name + ": e_chi not idempotent");
                } else {
                    require(prod == algebra_zero(data.group), name + ": e_chi not orthogonal");
                }
            }
        }
        // Cyclic tables equal the closed form as a set of rows.
        if (name[0] == 'C' && name.find('x') == std::string::npos) {
            const int n = g.order();
            std::set<std::vector<Cyclotomic>> expected;
            for (int j = 0; j < n; ++j) {
                std::vector<Cyclotomic> row;
                for (int c = 0; c < n; ++c) {
                    row.push_back(Cyclotomic::root_of_unity(n, static_cast<long long>(j) * g.class_rep(c)));
                }
                expected.insert(std::move(row));
            }
            std::set<std::vector<Cyclotomic>> actual;
            for (int i = 0; i < n; ++i) actual.insert(t.row(i));
            require(expected == actual, name + ": closed form mismatch");
        }
    }
}

}  // namespace

int main() {
    Fixture fx;
    struct Criterion {
        int id;
        std::string name;
        std::function<void(Fixture&)> run;
        double budget_seconds;  // 0 = no stated budget
    };
    const std::vector<Criterion> criteria{
        {1, "bijection round-trip", criterion_1_bijection, 60.0},
        {2, "enumeration counts vs brute-force oracle", criterion_2_counts, 0.0},
        {3, "join theorem and span intersection", criterion_3_join, 0.0},
        {4, "order corollary", criterion_4_order, 0.0},
        {5, "star products restrict back", criterion_5_star, 120.0},
        {6, "restriction identity", criterion_6_restriction, 0.0},
        {7, "wedge products", criterion_7_wedge, 0.0},
        {8, "superinduction", criterion_8_superinduction, 0.0},
        {9, "direct products", criterion_9_direct, 0.0},
        {10, "character table kernel", criterion_10_tables, 10.0},
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            criterion.run(fx);
        } catch (const Failure& f) {
            failure = f.detail;
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        if (failure.empty() && criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
            failure = "exceeded runtime budget of " + std::to_string(criterion.budget_seconds) + "s";
        }
        if (failure.empty()) {
            line << "PASS criterion-" << criterion.id << " (" << criterion.name << ") ["
                 << std::fixed << seconds << "s]";
        } else {
            ++failures;
            line << "FAIL criterion-" << criterion.id << " (" << criterion.name
                 << "): " << failure;
        }
        std::cout << line.str() << std::endl;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
