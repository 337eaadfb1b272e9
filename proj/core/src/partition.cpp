#include "sct/partition.hpp"

#include <algorithm>
#include <numeric>

namespace sct {

Partition canonicalize_partition(Partition p) {
    for (auto& block : p) std::sort(block.begin(), block.end());
    std::sort(p.begin(), p.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        const bool a0 = !a.empty() && a.front() == 0;
        const bool b0 = !b.empty() && b.front() == 0;
        if (a0 != b0) return a0;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return p;
}

std::optional<std::string> partition_defect(const Partition& p, int n) {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& block : p) {
        if (block.empty()) return "empty block";
        for (int x : block) {
            if (x < 0 || x >= n) return "element " + std::to_string(x) + " out of range";
            if (seen[static_cast<std::size_t>(x)]++) {
                return "element " + std::to_string(x) + " appears twice";
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        if (!seen[static_cast<std::size_t>(x)]) {
            return "element " + std::to_string(x) + " missing";
        }
    }
    return std::nullopt;
}

std::vector<int> block_index_map(const Partition& p, int n) {
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < p.size(); ++b) {
        for (int x : p[b]) map[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
    return map;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Partition partition_join(const Partition& a, const Partition& b, int n) {
    UnionFind uf(n);
    for (const Partition* p : {&a, &b}) {
        for (const auto& block : *p) {
            for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
        }
    }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) by_root[static_cast<std::size_t>(uf.find(x))].push_back(x);
    Partition out;
    for (auto& block : by_root) {
        if (!block.empty()) out.push_back(std::move(block));
    }
    return canonicalize_partition(std::move(out));
}

bool partition_refines(const Partition& fine, const Partition& coarse, int n) {
    const std::vector<int> where = block_index_map(coarse, n);
    for (const auto& block : fine) {
        for (std::size_t i = 1; i < block.size(); ++i) {
            if (where[static_cast<std::size_t>(block[i])] !=
                where[static_cast<std::size_t>(block[0])]) {
                return false;
            }
        }
    }
    return true;
}

void for_each_set_partition(int k, const std::function<bool(const std::vector<int>&)>& visit) {
    if (k == 0) {
        std::vector<int> empty;
        visit(empty);
        return;
    }
    std::vector<int> labels(static_cast<std::size_t>(k), 0);
    std::vector<int> maxes(static_cast<std::size_t>(k), 0);  // max label among 0..i
    bool stop = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (stop) return;
        if (i == k) {
            if (!visit(labels)) stop = true;
            return;
        }
        const int cap = (i == 0) ? 0 : maxes[static_cast<std::size_t>(i - 1)] + 1;
        for (int l = 0; l <= cap && !stop; ++l) {
            labels[static_cast<std::size_t>(i)] = l;
            maxes[static_cast<std::size_t>(i)] = std::max(l, i == 0 ? 0 : maxes[static_cast<std::size_t>(i - 1)]);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

Partition labels_to_blocks(const std::vector<int>& labels) {
    int num = 0;
    for (int l : labels) num = std::max(num, l + 1);
    Partition blocks(static_cast<std::size_t>(num));
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        blocks[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])].push_back(i);
    }
    return blocks;
}

}  // namespace sct
