#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sct {

/// A set partition of {0,...,n-1}, stored as a list of blocks.
/// Canonical form: every block sorted ascending, the block containing 0
/// first, remaining blocks ordered by (size, least element).
using Partition = std::vector<std::vector<int>>;

/// Sorts blocks into canonical order (see above). Blocks are sorted
/// internally as well.
Partition canonicalize_partition(Partition p);

/// Returns an error description if `p` is not a partition of {0,...,n-1}.
std::optional<std::string> partition_defect(const Partition& p, int n);

/// Element -> block index lookup table. `p` must partition {0,...,n-1}.
std::vector<int> block_index_map(const Partition& p, int n);

/// Lattice join (finest common coarsening) of two partitions of {0,...,n-1},
/// computed by union-find over overlapping blocks. Result is canonical.
Partition partition_join(const Partition& a, const Partition& b, int n);

/// True iff every block of `fine` is contained in a single block of `coarse`.
bool partition_refines(const Partition& fine, const Partition& coarse, int n);

/// Groups {0,...,n-1} by key equality: i, j share a block iff keys[i] == keys[j].
/// Result is canonical.
template <typename Key>
Partition partition_by_key(const std::vector<Key>& keys) {
    Partition blocks;
    std::vector<int> rep;  // block -> first element seen
    for (int i = 0; i < static_cast<int>(keys.size()); ++i) {
        bool placed = false;
        for (std::size_t b = 0; b < rep.size(); ++b) {
            if (keys[static_cast<std::size_t>(rep[b])] == keys[static_cast<std::size_t>(i)]) {
                blocks[b].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            blocks.push_back({i});
            rep.push_back(i);
        }
    }
    return canonicalize_partition(std::move(blocks));
}

/// Visits every set partition of {0,...,k-1} as a restricted-growth string
/// (labels[i] = block of element i). Visitor may return false to stop.
void for_each_set_partition(int k, const std::function<bool(const std::vector<int>&)>& visit);

/// Expands restricted-growth labels into explicit blocks (not canonicalized;
/// blocks appear in label order).
Partition labels_to_blocks(const std::vector<int>& labels);

}  // namespace sct
