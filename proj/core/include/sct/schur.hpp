#pragma once

#include <optional>
#include <vector>

#include "sct/group.hpp"
#include "sct/partition.hpp"
#include "sct/validation.hpp"

namespace sct {

/// A Schur partition of a group: {1} is a block, inversion permutes the
/// blocks, and the span of the block sums is multiplication-closed.
/// `central` is set when every block is a union of conjugacy classes.
struct SchurPartition {
    GroupPtr group;
    Partition blocks;     // canonical order
    bool central = false;

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    bool operator==(const SchurPartition& rhs) const { return blocks == rhs.blocks; }
};

/// Checks all Schur-partition conditions by pure integer counting:
/// the coefficient of m in hatK * hatL is #{(k,l) in K x L : kl = m}, and
/// closure requires it constant on every block. Returns the first violation
/// found, nullopt when valid.
std::optional<Violation> find_schur_violation(const FiniteGroup& g, const Partition& blocks);

/// Validated constructor; throws ValidationError with the violation report.
SchurPartition make_schur_partition(const GroupPtr& g, Partition blocks);

/// c[K][L][M] with hatK * hatL = sum_M c[K][L][M] hatM.
std::vector<std::vector<std::vector<long long>>> structure_constants(const SchurPartition& s);

/// The Schur partition whose blocks form the partition join of the inputs;
/// its span is the intersection of the two spans.
SchurPartition sring_intersection(const SchurPartition& a, const SchurPartition& b);

}  // namespace sct
