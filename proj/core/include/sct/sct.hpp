#pragma once

#include <optional>
#include <vector>

#include "sct/character_table.hpp"
#include "sct/group.hpp"
#include "sct/partition.hpp"
#include "sct/schur.hpp"
#include "sct/validation.hpp"

namespace sct {

/// A supercharacter theory: compatible partitions of Irr(G) (char_part) and
/// of G (class_part) with the sigma_X constant on every class block and
/// |char_part| = |class_part|. Supercharacters are normalized to sigma_X.
struct SupercharacterTheory {
    TablePtr table;
    Partition char_part;   // canonical order, {0} (trivial character) first
    Partition class_part;  // canonical order, {0} (identity) first

    const GroupPtr& group() const { return table->group(); }
    int size() const { return static_cast<int>(char_part.size()); }

    /// Superclass index of a group element.
    int superclass_of(int g) const;

    /// Theories of one group are equal iff their class partitions agree
    /// (each partition determines the other).
    bool operator==(const SupercharacterTheory& rhs) const {
        return class_part == rhs.class_part;
    }
};

/// Full Definition-2.1 check; violations name the failed condition with
/// witnesses. Partitions may be given in any order.
std::optional<Violation> find_sct_violation(const CharacterTable& table, const Partition& char_part,
                                            const Partition& class_part);

SupercharacterTheory validate_sct(const TablePtr& table, Partition char_part, Partition class_part);

/// Minimal theory m(G): singletons against conjugacy classes.
SupercharacterTheory theory_m(const TablePtr& table);

/// Maximal theory M(G): {{1_G}, rest} against {{1}, rest} (equals m for the
/// trivial group).
SupercharacterTheory theory_M(const TablePtr& table);

/// Class partition as a central Schur partition (Prop: the spans of
/// superclass sums are exactly the central S-rings).
SchurPartition sct_to_sring(const SupercharacterTheory& c);

/// Recovers the unique character partition of a central Schur partition:
/// irreducibles are grouped by their central-character vectors on the
/// blocks, i.e. by which minimal idempotent of span{hatK} their e_chi
/// belongs to.
SupercharacterTheory sring_to_sct(const SchurPartition& s, const TablePtr& table);

/// A group action on a group by automorphisms, as index permutations.
/// Construction verifies the homomorphism property of each map.
struct AutomorphismAction {
    GroupPtr target;
    std::vector<std::vector<int>> maps;  // distinct permutations of elements
};

AutomorphismAction make_action(const GroupPtr& target, std::vector<std::vector<int>> maps);

/// Conjugation action of g's parent on a normal subgroup, as automorphisms
/// of the materialized subgroup.
AutomorphismAction conjugation_action(const SubgroupGroup& n);

/// Conj_G(H): char side = action orbits on Irr(H); class side = finest
/// action-invariant coarsening of the conjugacy classes.
SupercharacterTheory conj_theory(const TablePtr& table_h, const AutomorphismAction& action);

/// True iff every class block is action-invariant. The character-side
/// invariance is computed as well and must agree.
bool is_action_invariant(const SupercharacterTheory& c, const AutomorphismAction& action);

/// True iff the subgroup (given by sorted parent indices) is a union of
/// superclasses of c.
bool is_sct_normal(const SupercharacterTheory& c, const std::vector<int>& subgroup_members);

/// m_N^G: superclasses are the G-classes inside N plus the pullbacks of the
/// nontrivial G/N-classes; the character side is recovered via the
/// bijection.
SupercharacterTheory theory_m_NG(const TablePtr& table, const Subgroup& n,
                                 const QuotientStructure& q);

/// C_N: restriction of a theory to a C-normal subgroup. Character blocks
/// are the sets f(X) of irreducible constituents of (sigma_X)_N.
SupercharacterTheory restrict_to_normal(const SupercharacterTheory& c, const SubgroupGroup& n,
                                        const TablePtr& table_n);

/// C^{G/N}: deflation to the quotient by a C-normal subgroup. `lift` maps
/// quotient irreducibles to their lifts inside Irr(G).
SupercharacterTheory deflate_to_quotient(const SupercharacterTheory& c, const QuotientStructure& q,
                                         const TablePtr& table_q, const std::vector<int>& lift);

/// Index map Irr(G/N) -> Irr(G) by exact lifted-value matching.
std::vector<int> lift_irreducibles(const CharacterTable& table_g, const CharacterTable& table_q,
                                   const QuotientStructure& q);

}  // namespace sct
