#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sct/partition.hpp"

namespace sct {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group on dense element indices 0..order-1 with identity at 0.
/// Immutable after construction; safe to share across threads.
class FiniteGroup {
public:
    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int conjugate(int g, int by) const { return mul(mul(by, g), inv(by)); }

    /// g^k for any integer k.
    int power(int g, long long k) const;
    int element_order(int g) const { return element_order_[static_cast<std::size_t>(g)]; }
    int exponent() const { return exponent_; }

    /// Conjugacy classes, identity class first, then by (size, least element).
    const Partition& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int class_of(int g) const { return class_of_[static_cast<std::size_t>(g)]; }
    int class_rep(int c) const { return classes_[static_cast<std::size_t>(c)][0]; }
    int class_size(int c) const { return static_cast<int>(classes_[static_cast<std::size_t>(c)].size()); }

    bool is_abelian() const { return num_classes() == order_; }

    /// Builds from a complete multiplication table. Index 0 must be the
    /// identity; associativity, closure and inverses are verified.
    static GroupPtr from_table(std::vector<std::vector<int>> table);

    /// Internal trusted constructor for tables known to be associative
    /// (closures of permutations, coset tables of verified groups).
    static GroupPtr from_table_unchecked(std::vector<int> flat, int order);

private:
    FiniteGroup() = default;
    void finish();  // inverses, classes, orders, exponent

    int order_ = 0;
    std::vector<int> table_;  // row-major order x order
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    int exponent_ = 1;
    Partition classes_;
    std::vector<int> class_of_;
};

/// How to build a group: a named family, a direct product, permutation
/// generators, or an explicit multiplication table.
struct GroupSpec {
    struct Family {
        std::string kind;  // "cyclic" | "dihedral" | "symmetric" | "quaternion"
        int n = 0;
        bool operator==(const Family&) const = default;
    };
    struct Product {
        std::vector<GroupSpec> factors;
        bool operator==(const Product&) const = default;
    };
    struct Generators {
        std::vector<std::vector<int>> perms;  // image arrays on a common domain
        bool operator==(const Generators&) const = default;
    };
    struct Table {
        std::vector<std::vector<int>> mul;
        bool operator==(const Table&) const = default;
    };
    std::variant<Family, Product, Generators, Table> value;
    bool operator==(const GroupSpec&) const = default;
};

/// Parses "cyclic:6", "dihedral:4", "symmetric:4", "quaternion".
GroupSpec parse_group_shorthand(const std::string& text);

/// Builds the group described by `spec`; element ordering is deterministic.
/// Throws std::invalid_argument for malformed specs or orders beyond
/// `max_order`.
GroupPtr build_group(const GroupSpec& spec, int max_order = 2000);

/// Direct product with lexicographic (a-major) element order:
/// (x, y) -> x * |B| + y.
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);

/// Conjugacy classes recomputed from scratch (same data the group caches;
/// exposed as the spec-level operation).
Partition conjugacy_classes(const FiniteGroup& g);

/// Same underlying group: identical order and multiplication table (element
/// labels included). Independently built copies compare equal.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

/// A subgroup, stored as a sorted set of parent element indices.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted ascending; members[0] == 0

    int index_of(int parent_element) const;  // -1 when absent
    bool contains(int parent_element) const { return index_of(parent_element) >= 0; }
    int order() const { return static_cast<int>(members.size()); }
};

/// Smallest subgroup containing `gens` (breadth-first closure).
Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& gens);

/// True iff H is closed under conjugation by every element of its parent.
bool is_normal(const Subgroup& h);

/// The whole group as a subgroup of itself.
Subgroup full_subgroup(const GroupPtr& g);

/// A subgroup materialized as a FiniteGroup of its own, with index maps.
struct SubgroupGroup {
    GroupPtr group;               // order = |H|
    Subgroup parent_subgroup;     // the H this was built from
    std::vector<int> to_parent;   // local index -> parent index (sorted members)

    int to_local(int parent_element) const { return parent_subgroup.index_of(parent_element); }
};

SubgroupGroup materialize_subgroup(const Subgroup& h);

/// G/N for a normal subgroup N, with deterministic coset order:
/// coset of the identity first, the rest by least member.
struct QuotientStructure {
    GroupPtr parent;
    Subgroup normal;
    Partition cosets;             // cosets[i] = elements of coset i
    GroupPtr quotient;            // group on coset indices
    std::vector<int> projection;  // parent element -> coset index
};

QuotientStructure make_quotient(const Subgroup& n);

}  // namespace sct
