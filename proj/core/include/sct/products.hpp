#pragma once

#include <vector>

#include "sct/character_table.hpp"
#include "sct/group.hpp"
#include "sct/sct.hpp"

namespace sct {

/// Everything needed to glue theories of N and G/N into theories of G:
/// the quotient structure, tables for N, G and G/N, the lift
/// Irr(G/N) -> Irr(G), restriction multiplicities [chi_N, psi], the
/// G-orbits on Irr(N), and the conjugation action on N.
struct StarContext {
    GroupPtr g;
    TablePtr table_g;
    Subgroup n;
    SubgroupGroup n_group;
    TablePtr table_n;
    QuotientStructure quotient;
    TablePtr table_q;
    std::vector<int> lift;                          // Irr(G/N) -> Irr(G)
    std::vector<std::vector<long long>> mult;       // [chi][psi] = [chi_N, psi]
    std::vector<int> orbit_of;                      // Irr(N) -> orbit id
    AutomorphismAction conj_action;                 // G acting on N
};

StarContext make_star_context(const GroupPtr& g, const TablePtr& table_g, const Subgroup& n);

/// X^G for X a union of G-orbits of Irr(N), in ctx index terms.
std::vector<int> induced_irr_set(const StarContext& ctx, const std::vector<int>& x);

/// The *-product: C a G-invariant theory of N (indices local to
/// ctx.n_group), D a theory of G/N (indices in ctx.quotient.quotient).
/// Result is a theory of G of size |C| + |D| - 1.
SupercharacterTheory star_product(const StarContext& ctx, const SupercharacterTheory& c,
                                  const SupercharacterTheory& d);

/// m_N^G computed as Conj_G(N) * m(G/N) (the defining star product).
SupercharacterTheory theory_m_NG_via_star(const StarContext& ctx);

/// Context for the wedge product over a chain N <= M <= G of normal
/// subgroups: a star context for (G, N) plus M materialized with its table,
/// the canonical quotient M/N, and the image subgroup MN/N inside G/N.
struct WedgeContext {
    StarContext n_ctx;            // (G, N)
    Subgroup m;
    SubgroupGroup m_group;
    TablePtr table_m;
    std::vector<std::vector<long long>> mult_m;  // [chi][psi] over Irr(G) x Irr(M)
    AutomorphismAction conj_action_m;            // G acting on M
    Subgroup n_in_m;              // N as a subgroup of m_group
    QuotientStructure q_mn;       // canonical M/N (quotient of m_group)
    TablePtr table_mn;
    std::vector<int> lift_mn;     // Irr(M/N) -> Irr(M)
    SubgroupGroup s_group;        // image of M in G/N, materialized
    TablePtr table_s;
    std::vector<int> s_to_mn;     // s_group element -> q_mn coset index
};

WedgeContext make_wedge_context(const GroupPtr& g, const TablePtr& table_g, const Subgroup& n,
                                const Subgroup& m);

/// The wedge (generalized wreath) product: C a G-invariant theory of M with
/// N C-normal, D a theory of G/N with M/N D-normal and matching overlap
/// C^{M/N} = D_{M/N}. Unique theory E of G with E_M = C, E^{G/N} = D and
/// all superclasses outside M unions of N-cosets.
SupercharacterTheory wedge_product(const WedgeContext& ctx, const SupercharacterTheory& c,
                                   const SupercharacterTheory& d);

struct WedgeFactorization {
    bool is_wedge = false;
    SupercharacterTheory restricted;  // E_M (valid when is_wedge)
    SupercharacterTheory deflated;    // E^{G/N}
};

/// Recognition: E factors over (N, M) iff every superclass outside M is a
/// union of N-cosets; when it does, re-multiplies the factors and checks
/// they reproduce E.
WedgeFactorization wedge_recognize(const WedgeContext& ctx, const SupercharacterTheory& e);

/// Direct product theory on M x N (lexicographic element pairing):
/// classes K x L, characters X x Y.
SupercharacterTheory direct_product(const SupercharacterTheory& c, const SupercharacterTheory& d,
                                    const GroupPtr& product, const TablePtr& table_product);

/// Tamaschke dot product of Schur partitions on M x N.
SchurPartition sring_dot_product(const SchurPartition& a, const SchurPartition& b,
                                 const GroupPtr& product);

}  // namespace sct
