#include "sct/sct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sct {

int SupercharacterTheory::superclass_of(int g) const {
    for (std::size_t b = 0; b < class_part.size(); ++b) {
        if (std::binary_search(class_part[b].begin(), class_part[b].end(), g)) {
            return static_cast<int>(b);
        }
    }
    return -1;
}

std::optional<Violation> find_sct_violation(const CharacterTable& table, const Partition& char_part,
                                            const Partition& class_part) {
    const FiniteGroup& g = *table.group();
    const int r = table.num_irreducibles();
    if (auto defect = partition_defect(char_part, r)) {
        return Violation{"char_part_not_partition",
                         "character blocks do not partition Irr(G): " + *defect, {}};
    }
    if (auto defect = partition_defect(class_part, g.order())) {
        return Violation{"class_part_not_partition",
                         "class blocks do not partition the group: " + *defect, {}};
    }
    if (char_part.size() != class_part.size()) {
        return Violation{"size_mismatch",
                         "|X| = " + std::to_string(char_part.size()) + " but |K| = " +
                             std::to_string(class_part.size()),
                         {static_cast<int>(char_part.size()), static_cast<int>(class_part.size())}};
    }
    for (std::size_t xb = 0; xb < char_part.size(); ++xb) {
        const ClassFunction s = sigma(table, char_part[xb]);
        for (std::size_t kb = 0; kb < class_part.size(); ++kb) {
            const int first = class_part[kb][0];
            const Cyclotomic& want = s.at_element(first);
            for (int elem : class_part[kb]) {
                if (s.at_element(elem) != want) {
                    return Violation{"sigma_not_constant",
                                     "sigma of character block " + std::to_string(xb) +
                                         " takes different values at elements " + std::to_string(first) +
                                         " and " + std::to_string(elem) + " of class block " +
                                         std::to_string(kb),
                                     {static_cast<int>(xb), static_cast<int>(kb), first, elem}};
                }
            }
        }
    }
    return std::nullopt;
}

SupercharacterTheory validate_sct(const TablePtr& table, Partition char_part, Partition class_part) {
    char_part = canonicalize_partition(std::move(char_part));
    class_part = canonicalize_partition(std::move(class_part));
    if (auto violation = find_sct_violation(*table, char_part, class_part)) {
        throw ValidationError(*violation);
    }
    SupercharacterTheory c{table, std::move(char_part), std::move(class_part)};
    // Forced for any valid theory (Diaconis-Isaacs); violations here would
    // mean the checks above are wrong.
    if (c.char_part[0] != std::vector<int>{0} || c.class_part[0] != std::vector<int>{0}) {
        throw std::logic_error("validate_sct: identity/trivial blocks are not singletons");
    }
    return c;
}

SupercharacterTheory theory_m(const TablePtr& table) {
    Partition chars;
    for (int i = 0; i < table->num_irreducibles(); ++i) chars.push_back({i});
    return validate_sct(table, std::move(chars), table->group()->classes());
}

SupercharacterTheory theory_M(const TablePtr& table) {
    const int r = table->num_irreducibles();
    const int n = table->group()->order();
    Partition chars{{0}};
    Partition classes{{0}};
    if (r > 1) {
        std::vector<int> rest(static_cast<std::size_t>(r - 1));
        std::iota(rest.begin(), rest.end(), 1);
        chars.push_back(std::move(rest));
    }
    if (n > 1) {
        std::vector<int> rest(static_cast<std::size_t>(n - 1));
        std::iota(rest.begin(), rest.end(), 1);
        classes.push_back(std::move(rest));
    }
    return validate_sct(table, std::move(chars), std::move(classes));
}

SchurPartition sct_to_sring(const SupercharacterTheory& c) {
    auto violation = find_schur_violation(*c.group(), c.class_part);
    if (violation) {
        throw std::logic_error("sct_to_sring: superclass partition is not a Schur partition: " +
                               violation->detail);
    }
    SchurPartition s{c.group(), c.class_part, true};
    return s;
}

SupercharacterTheory sring_to_sct(const SchurPartition& s, const TablePtr& table) {
    if (!s.central) {
        throw std::invalid_argument("sring_to_sct: Schur partition is not central");
    }
    const FiniteGroup& g = *table->group();
    const int r = table->num_irreducibles();
    // Central character of hatK on the chi_i-isotypic component:
    // omega_i(hatK) = (1/deg_i) * sum_{g in K} chi_i(g). Two irreducibles
    // lie in the same character block iff these agree on every block.
    std::vector<std::vector<Cyclotomic>> key(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        key[static_cast<std::size_t>(i)].reserve(s.blocks.size());
        const Rational inv_deg = make_rational(1, table->degree(i));
        for (const auto& block : s.blocks) {
            Cyclotomic acc;
            for (int x : block) acc += table->value(i, g.class_of(x));
            key[static_cast<std::size_t>(i)].push_back(acc * Cyclotomic(inv_deg));
        }
    }
    Partition char_part = partition_by_key(key);
    if (char_part.size() != s.blocks.size()) {
        throw std::logic_error("sring_to_sct: character partition size mismatch (internal error)");
    }
    return validate_sct(table, std::move(char_part), s.blocks);
}

AutomorphismAction make_action(const GroupPtr& target, std::vector<std::vector<int>> maps) {
    const FiniteGroup& h = *target;
    std::set<std::vector<int>> distinct;
    for (auto& m : maps) {
        if (static_cast<int>(m.size()) != h.order()) {
            throw std::invalid_argument("action map has wrong domain size");
        }
        std::vector<char> seen(static_cast<std::size_t>(h.order()), 0);
        for (int v : m) {
            if (v < 0 || v >= h.order() || seen[static_cast<std::size_t>(v)]++) {
                throw std::invalid_argument("action map is not a permutation");
            }
        }
        for (int x = 0; x < h.order(); ++x) {
            for (int y = 0; y < h.order(); ++y) {
                if (m[static_cast<std::size_t>(h.mul(x, y))] !=
                    h.mul(m[static_cast<std::size_t>(x)], m[static_cast<std::size_t>(y)])) {
                    throw std::invalid_argument("action map is not an automorphism");
                }
            }
        }
        distinct.insert(std::move(m));
    }
    AutomorphismAction a{target, {}};
    a.maps.assign(distinct.begin(), distinct.end());
    return a;
}

AutomorphismAction conjugation_action(const SubgroupGroup& n) {
    const GroupPtr& parent = n.parent_subgroup.parent;
    const FiniteGroup& g = *parent;
    std::set<std::vector<int>> distinct;
    for (int y = 0; y < g.order(); ++y) {
        std::vector<int> map(static_cast<std::size_t>(n.group->order()));
        for (int x = 0; x < n.group->order(); ++x) {
            const int conj = g.conjugate(n.to_parent[static_cast<std::size_t>(x)], y);
            const int local = n.to_local(conj);
            if (local < 0) {
                throw std::invalid_argument("conjugation_action: subgroup is not normal");
            }
            map[static_cast<std::size_t>(x)] = local;
        }
        distinct.insert(std::move(map));
    }
    AutomorphismAction a{n.group, {}};
    a.maps.assign(distinct.begin(), distinct.end());
    return a;
}

namespace {

// Permutation induced on irreducibles by chi -> chi . a^{-1}; since the map
// permutes Irr(H), matching composed rows against the table suffices (and
// orbits do not depend on using a vs a^{-1}).
std::vector<int> irr_permutation(const CharacterTable& table, const std::vector<int>& map) {
    const FiniteGroup& h = *table.group();
    const int r = table.num_irreducibles();
    std::vector<int> perm(static_cast<std::size_t>(r), -1);
    for (int i = 0; i < r; ++i) {
        std::vector<Cyclotomic> composed(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c) {
            const int image = map[static_cast<std::size_t>(h.class_rep(c))];
            composed[static_cast<std::size_t>(c)] = table.value(i, h.class_of(image));
        }
        for (int j = 0; j < r; ++j) {
            if (table.row(j) == composed) {
                perm[static_cast<std::size_t>(i)] = j;
                break;
            }
        }
        if (perm[static_cast<std::size_t>(i)] < 0) {
            throw std::logic_error("irr_permutation: composed character is not irreducible");
        }
    }
    return perm;
}

Partition orbits_of_permutations(int n, const std::vector<std::vector<int>>& perms) {
    Partition singletons;
    for (int i = 0; i < n; ++i) singletons.push_back({i});
    Partition result = singletons;
    for (const auto& p : perms) {
        Partition moved;
        for (int i = 0; i < n; ++i) moved.push_back({i, p[static_cast<std::size_t>(i)]});
        result = partition_join(result, moved, n);
    }
    return result;
}

}  // namespace

SupercharacterTheory conj_theory(const TablePtr& table_h, const AutomorphismAction& action) {
    const FiniteGroup& h = *table_h->group();
    std::vector<std::vector<int>> irr_perms;
    irr_perms.reserve(action.maps.size());
    for (const auto& map : action.maps) irr_perms.push_back(irr_permutation(*table_h, map));
    Partition char_part = orbits_of_permutations(table_h->num_irreducibles(), irr_perms);
    // Finest action-invariant coarsening of the conjugacy classes: join the
    // classes with the element orbits of the action.
    Partition class_part = orbits_of_permutations(h.order(), action.maps);
    class_part = partition_join(class_part, h.classes(), h.order());
    return validate_sct(table_h, std::move(char_part), std::move(class_part));
}

bool is_action_invariant(const SupercharacterTheory& c, const AutomorphismAction& action) {
    const FiniteGroup& h = *c.group();
    const std::vector<int> where = block_index_map(c.class_part, h.order());
    bool class_invariant = true;
    for (const auto& map : action.maps) {
        for (int x = 0; x < h.order() && class_invariant; ++x) {
            if (where[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] !=
                where[static_cast<std::size_t>(x)]) {
                class_invariant = false;
            }
        }
    }
    // The character side must agree (Corollary: the two invariance notions
    // coincide); disagreement indicates an implementation bug.
    const std::vector<int> irr_where = block_index_map(c.char_part, c.table->num_irreducibles());
    bool char_invariant = true;
    for (const auto& map : action.maps) {
        const std::vector<int> perm = irr_permutation(*c.table, map);
        for (int i = 0; i < c.table->num_irreducibles() && char_invariant; ++i) {
            if (irr_where[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] !=
                irr_where[static_cast<std::size_t>(i)]) {
                char_invariant = false;
            }
        }
    }
    if (class_invariant != char_invariant) {
        throw std::logic_error("is_action_invariant: class and character sides disagree");
    }
    return class_invariant;
}

bool is_sct_normal(const SupercharacterTheory& c, const std::vector<int>& subgroup_members) {
    for (const auto& block : c.class_part) {
        bool any = false, all = true;
        for (int x : block) {
            if (std::binary_search(subgroup_members.begin(), subgroup_members.end(), x)) {
                any = true;
            } else {
                all = false;
            }
        }
        if (any && !all) return false;
    }
    return true;
}

SupercharacterTheory theory_m_NG(const TablePtr& table, const Subgroup& n,
                                 const QuotientStructure& q) {
    const FiniteGroup& g = *table->group();
    Partition classes;
    for (const auto& cls : g.classes()) {
        if (n.contains(cls[0])) classes.push_back(cls);
    }
    const FiniteGroup& quot = *q.quotient;
    for (int qc = 1; qc < quot.num_classes(); ++qc) {
        std::vector<int> pulled;
        for (int coset : quot.classes()[static_cast<std::size_t>(qc)]) {
            const auto& members = q.cosets[static_cast<std::size_t>(coset)];
            pulled.insert(pulled.end(), members.begin(), members.end());
        }
        std::sort(pulled.begin(), pulled.end());
        classes.push_back(std::move(pulled));
    }
    SchurPartition s{table->group(), canonicalize_partition(std::move(classes)), true};
    return sring_to_sct(s, table);
}

SupercharacterTheory restrict_to_normal(const SupercharacterTheory& c, const SubgroupGroup& n,
                                        const TablePtr& table_n) {
    if (!is_sct_normal(c, n.parent_subgroup.members)) {
        throw ValidationError(Violation{"not_sct_normal",
                                        "subgroup is not a union of superclasses", {}});
    }
    // Class side: superclasses inside N, in local indices.
    Partition classes;
    for (const auto& block : c.class_part) {
        if (!n.parent_subgroup.contains(block[0])) continue;
        std::vector<int> local;
        local.reserve(block.size());
        for (int x : block) local.push_back(n.to_local(x));
        classes.push_back(std::move(local));
    }
    // Character side: f(X) = irreducible constituents of (sigma_X)_N,
    // deduplicated (equal-or-disjoint by the f-lemma).
    std::set<std::vector<int>> blocks;
    for (const auto& x : c.char_part) {
        const ClassFunction restricted = restrict_class_function(sigma(*c.table, x), n);
        std::vector<int> f;
        for (int j = 0; j < table_n->num_irreducibles(); ++j) {
            if (!inner_product(restricted, table_n->character(j)).is_zero()) f.push_back(j);
        }
        blocks.insert(std::move(f));
    }
    Partition char_part(blocks.begin(), blocks.end());
    return validate_sct(table_n, std::move(char_part), std::move(classes));
}

std::vector<int> lift_irreducibles(const CharacterTable& table_g, const CharacterTable& table_q,
                                   const QuotientStructure& q) {
    const FiniteGroup& g = *table_g.group();
    std::vector<int> lift(static_cast<std::size_t>(table_q.num_irreducibles()), -1);
    for (int j = 0; j < table_q.num_irreducibles(); ++j) {
        std::vector<Cyclotomic> lifted(static_cast<std::size_t>(g.num_classes()));
        for (int c = 0; c < g.num_classes(); ++c) {
            const int coset = q.projection[static_cast<std::size_t>(g.class_rep(c))];
            lifted[static_cast<std::size_t>(c)] = table_q.value(j, q.quotient->class_of(coset));
        }
        for (int i = 0; i < table_g.num_irreducibles(); ++i) {
            if (table_g.row(i) == lifted) {
                lift[static_cast<std::size_t>(j)] = i;
                break;
            }
        }
        if (lift[static_cast<std::size_t>(j)] < 0) {
            throw std::logic_error("lift_irreducibles: lifted character not found in Irr(G)");
        }
    }
    return lift;
}

SupercharacterTheory deflate_to_quotient(const SupercharacterTheory& c, const QuotientStructure& q,
                                         const TablePtr& table_q, const std::vector<int>& lift) {
    if (!is_sct_normal(c, q.normal.members)) {
        throw ValidationError(Violation{"not_sct_normal",
                                        "subgroup is not a union of superclasses", {}});
    }
    // Class side: images KN/N, deduplicated (equal-or-disjoint by the
    // Leung-Ma lemma).
    std::set<std::vector<int>> class_blocks;
    for (const auto& block : c.class_part) {
        std::set<int> image;
        for (int x : block) image.insert(q.projection[static_cast<std::size_t>(x)]);
        class_blocks.insert(std::vector<int>(image.begin(), image.end()));
    }
    // Character side: blocks inside Irr(G/N), pulled back through the lift.
    std::vector<int> irr_to_quotient(static_cast<std::size_t>(c.table->num_irreducibles()), -1);
    for (std::size_t j = 0; j < lift.size(); ++j) {
        irr_to_quotient[static_cast<std::size_t>(lift[j])] = static_cast<int>(j);
    }
    Partition char_part;
    for (const auto& x : c.char_part) {
        std::vector<int> mapped;
        bool inside = true;
        for (int i : x) {
            const int j = irr_to_quotient[static_cast<std::size_t>(i)];
            if (j < 0) {
                inside = false;
                break;
            }
            mapped.push_back(j);
        }
        if (inside) char_part.push_back(std::move(mapped));
    }
    return validate_sct(table_q, std::move(char_part),
                        Partition(class_blocks.begin(), class_blocks.end()));
}

}  // namespace sct
