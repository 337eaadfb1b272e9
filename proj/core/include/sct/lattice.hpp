#pragma once

#include <vector>

#include "sct/sct.hpp"

namespace sct {

/// The full lattice Sup(G): every theory, the order relation, and the
/// covering pairs. Theories are listed in canonical order: by descending
/// size (so m(G) is first, M(G) last), ties by class partition.
struct SupLattice {
    TablePtr table;
    std::vector<SupercharacterTheory> theories;
    std::vector<std::vector<bool>> leq;      // leq[i][j]: theories[i] <= theories[j]
    std::vector<std::pair<int, int>> hasse;  // covering pairs (lower, upper)

    int size() const { return static_cast<int>(theories.size()); }
    int index_of(const SupercharacterTheory& c) const;
};

/// Lattice join: partition joins on both sides (always a theory again).
SupercharacterTheory sct_join(const SupercharacterTheory& c, const SupercharacterTheory& d);

/// Partial order via class-partition refinement. The character-side
/// comparison is evaluated too and must agree (order corollary).
bool sct_leq(const SupercharacterTheory& c, const SupercharacterTheory& d);

/// Exhaustive enumeration of Sup(G) by searching set partitions of the
/// conjugacy classes (centrality forces class unions): identity class kept
/// as a singleton, blocks must be permuted by inversion, and the span of
/// the block sums must be closed; survivors are completed via the Schur
/// ring bijection. `threads` > 1 splits candidate checking.
SupLattice enumerate_sup(const TablePtr& table, int max_classes = 14, int threads = 1);

/// Meet via the enumerated lattice: join of all common lower bounds.
SupercharacterTheory sct_meet(const SupercharacterTheory& c, const SupercharacterTheory& d,
                              const SupLattice& lattice);

}  // namespace sct
