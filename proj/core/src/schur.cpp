#include "sct/schur.hpp"

#include <stdexcept>

namespace sct {

namespace {

bool blocks_are_central(const FiniteGroup& g, const Partition& blocks) {
    const std::vector<int> where = block_index_map(blocks, g.order());
    for (const auto& cls : g.classes()) {
        for (std::size_t i = 1; i < cls.size(); ++i) {
            if (where[static_cast<std::size_t>(cls[i])] != where[static_cast<std::size_t>(cls[0])]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::optional<Violation> find_schur_violation(const FiniteGroup& g, const Partition& blocks) {
    const int n = g.order();
    if (auto defect = partition_defect(blocks, n)) {
        return Violation{"not_partition", "blocks do not partition the group: " + *defect, {}};
    }
    const std::vector<int> where = block_index_map(blocks, n);
    // Condition (b): {1} is a block.
    if (blocks[static_cast<std::size_t>(where[0])].size() != 1) {
        return Violation{"identity_block",
                         "the block containing the identity is not the singleton {1}",
                         {where[0]}};
    }
    // Condition (c): inversion permutes the blocks.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const int image = where[static_cast<std::size_t>(g.inv(blocks[b][0]))];
        for (int x : blocks[b]) {
            if (where[static_cast<std::size_t>(g.inv(x))] != image) {
                return Violation{"inversion",
                                 "inverses of block " + std::to_string(b) +
                                     " land in more than one block (elements " +
                                     std::to_string(blocks[b][0]) + ", " + std::to_string(x) + ")",
                                 {static_cast<int>(b), blocks[b][0], x}};
            }
        }
        if (blocks[b].size() != blocks[static_cast<std::size_t>(image)].size()) {
            return Violation{"inversion",
                             "inverse image of block " + std::to_string(b) +
                                 " is smaller than the block it meets",
                             {static_cast<int>(b), image}};
        }
    }
    // Condition (a): the span of the block sums is closed under products.
    std::vector<long long> coeff(static_cast<std::size_t>(n));
    for (std::size_t bk = 0; bk < blocks.size(); ++bk) {
        for (std::size_t bl = 0; bl < blocks.size(); ++bl) {
            coeff.assign(static_cast<std::size_t>(n), 0);
            for (int k : blocks[bk]) {
                for (int l : blocks[bl]) ++coeff[static_cast<std::size_t>(g.mul(k, l))];
            }
            for (const auto& bm : blocks) {
                const long long want = coeff[static_cast<std::size_t>(bm[0])];
                for (int m : bm) {
                    if (coeff[static_cast<std::size_t>(m)] != want) {
                        return Violation{
                            "closure",
                            "product of blocks " + std::to_string(bk) + " and " + std::to_string(bl) +
                                " has coefficient " + std::to_string(coeff[static_cast<std::size_t>(m)]) +
                                " at " + std::to_string(m) + " but " + std::to_string(want) + " at " +
                                std::to_string(bm[0]),
                            {static_cast<int>(bk), static_cast<int>(bl), bm[0], m}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

SchurPartition make_schur_partition(const GroupPtr& g, Partition blocks) {
    blocks = canonicalize_partition(std::move(blocks));
    if (auto violation = find_schur_violation(*g, blocks)) {
        throw ValidationError(*violation);
    }
    SchurPartition out{g, std::move(blocks), false};
    out.central = blocks_are_central(*g, out.blocks);
    return out;
}

std::vector<std::vector<std::vector<long long>>> structure_constants(const SchurPartition& s) {
    const FiniteGroup& g = *s.group;
    const std::size_t b = s.blocks.size();
    std::vector<std::vector<std::vector<long long>>> c(
        b, std::vector<std::vector<long long>>(b, std::vector<long long>(b, 0)));
    std::vector<long long> coeff(static_cast<std::size_t>(g.order()));
    for (std::size_t bk = 0; bk < b; ++bk) {
        for (std::size_t bl = 0; bl < b; ++bl) {
            coeff.assign(static_cast<std::size_t>(g.order()), 0);
            for (int k : s.blocks[bk]) {
                for (int l : s.blocks[bl]) ++coeff[static_cast<std::size_t>(g.mul(k, l))];
            }
            for (std::size_t bm = 0; bm < b; ++bm) {
                c[bk][bl][bm] = coeff[static_cast<std::size_t>(s.blocks[bm][0])];
            }
        }
    }
    return c;
}

SchurPartition sring_intersection(const SchurPartition& a, const SchurPartition& b) {
    if (a.group->order() != b.group->order()) {
        throw std::invalid_argument("sring_intersection: different groups");
    }
    Partition joined = partition_join(a.blocks, b.blocks, a.group->order());
    auto violation = find_schur_violation(*a.group, joined);
    if (violation) {
        throw std::logic_error("sring_intersection: join is not a Schur partition (internal error)");
    }
    SchurPartition out{a.group, std::move(joined), false};
    out.central = blocks_are_central(*a.group, out.blocks);
    return out;
}

}  // namespace sct
