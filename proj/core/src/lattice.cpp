#include "sct/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace sct {

int SupLattice::index_of(const SupercharacterTheory& c) const {
    for (int i = 0; i < size(); ++i) {
        if (theories[static_cast<std::size_t>(i)] == c) return i;
    }
    return -1;
}

SupercharacterTheory sct_join(const SupercharacterTheory& c, const SupercharacterTheory& d) {
    if (c.group()->order() != d.group()->order() || c.table != d.table) {
        throw std::invalid_argument("sct_join: theories of different groups");
    }
    Partition chars = partition_join(c.char_part, d.char_part, c.table->num_irreducibles());
    Partition classes = partition_join(c.class_part, d.class_part, c.group()->order());
    return validate_sct(c.table, std::move(chars), std::move(classes));
}

bool sct_leq(const SupercharacterTheory& c, const SupercharacterTheory& d) {
    const bool class_side = partition_refines(c.class_part, d.class_part, c.group()->order());
    const bool char_side = partition_refines(c.char_part, d.char_part, c.table->num_irreducibles());
    if (class_side != char_side) {
        throw std::logic_error("sct_leq: class and character orders disagree (internal error)");
    }
    return class_side;
}

namespace {

// Candidate = assignment of the non-identity classes to blocks
// (restricted-growth labels over classes 1..r-1).
struct ClassSearch {
    const FiniteGroup* g;
    int r;
    std::vector<int> inverse_class;                              // class -> class of inverses
    const std::vector<std::vector<std::vector<long long>>>* a;   // class structure constants

    // Class-level closure: element coefficient of hatB_K hatB_L at any
    // element of class m is sum_{i in K, j in L} a[i][j][m]; it must be
    // constant over the classes of each block.
    bool closed(const std::vector<int>& labels, int num_blocks) const {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(num_blocks));
        for (int c = 1; c < r; ++c) {
            blocks[static_cast<std::size_t>(labels[static_cast<std::size_t>(c - 1)])].push_back(c);
        }
        std::vector<long long> coeff(static_cast<std::size_t>(r));
        auto coeff_at = [&](const std::vector<int>& bk, const std::vector<int>& bl) {
            coeff.assign(static_cast<std::size_t>(r), 0);
            for (int i : bk) {
                for (int j : bl) {
                    const auto& row = (*a)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    for (int m = 0; m < r; ++m) coeff[static_cast<std::size_t>(m)] += row[static_cast<std::size_t>(m)];
                }
            }
        };
        for (const auto& bk : blocks) {
            for (const auto& bl : blocks) {
                coeff_at(bk, bl);
                for (const auto& bm : blocks) {
                    const long long want = coeff[static_cast<std::size_t>(bm[0])];
                    for (int m : bm) {
                        if (coeff[static_cast<std::size_t>(m)] != want) return false;
                    }
                }
                // The identity block {class 0} is a block too.
                // Its coefficient needs no check (singleton).
            }
        }
        return true;
    }

    bool inversion_ok(const std::vector<int>& labels) const {
        // Blocks must be permuted by inversion: label(i*) depends only on
        // label(i), and distinct labels map to distinct labels.
        std::vector<int> image(static_cast<std::size_t>(r), -1);
        for (int c = 1; c < r; ++c) {
            const int lab = labels[static_cast<std::size_t>(c - 1)];
            const int istar = inverse_class[static_cast<std::size_t>(c)];
            const int lab_star = labels[static_cast<std::size_t>(istar - 1)];
            if (image[static_cast<std::size_t>(lab)] < 0) {
                image[static_cast<std::size_t>(lab)] = lab_star;
            } else if (image[static_cast<std::size_t>(lab)] != lab_star) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace

SupLattice enumerate_sup(const TablePtr& table, int max_classes, int threads) {
    const GroupPtr& gp = table->group();
    const FiniteGroup& g = *gp;
    const int r = g.num_classes();
    if (r > max_classes) {
        throw std::invalid_argument("enumerate_sup: class count " + std::to_string(r) +
                                    " exceeds the cap of " + std::to_string(max_classes));
    }
    ClassSearch search;
    search.g = &g;
    search.r = r;
    search.a = &table->class_constants();
    search.inverse_class.resize(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) {
        search.inverse_class[static_cast<std::size_t>(c)] = g.class_of(g.inv(g.class_rep(c)));
    }

    // Collect candidates cheaply (inversion screen), then run the closure
    // check, optionally in parallel; results merge in generation order.
    std::vector<std::vector<int>> candidates;
    for_each_set_partition(r - 1, [&](const std::vector<int>& labels) {
        if (search.inversion_ok(labels)) candidates.push_back(labels);
        return true;
    });
    std::vector<char> keep(candidates.size(), 0);
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            int num_blocks = 0;
            for (int l : candidates[i]) num_blocks = std::max(num_blocks, l + 1);
            keep[i] = search.closed(candidates[i], num_blocks) ? 1 : 0;
        }
    };
    if (threads <= 1 || candidates.size() < 64) {
        run(0, candidates.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (candidates.size() + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(candidates.size(), begin + chunk);
            if (begin < end) pool.emplace_back(run, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    SupLattice lattice;
    lattice.table = table;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!keep[i]) continue;
        // Expand class labels to an element partition.
        Partition blocks{{}};
        blocks[0] = g.classes()[0];
        int num_blocks = 0;
        for (int l : candidates[i]) num_blocks = std::max(num_blocks, l + 1);
        blocks.resize(static_cast<std::size_t>(num_blocks) + 1);
        for (int c = 1; c < r; ++c) {
            const auto& cls = g.classes()[static_cast<std::size_t>(c)];
            auto& blk = blocks[static_cast<std::size_t>(candidates[i][static_cast<std::size_t>(c - 1)]) + 1];
            blk.insert(blk.end(), cls.begin(), cls.end());
        }
        SchurPartition s{gp, canonicalize_partition(std::move(blocks)), true};
        lattice.theories.push_back(sring_to_sct(s, table));
    }
    std::sort(lattice.theories.begin(), lattice.theories.end(),
              [](const SupercharacterTheory& a, const SupercharacterTheory& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.class_part < b.class_part;
              });

    const int count = lattice.size();
    lattice.leq.assign(static_cast<std::size_t>(count),
                       std::vector<bool>(static_cast<std::size_t>(count), false));
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            lattice.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                sct_leq(lattice.theories[static_cast<std::size_t>(i)],
                        lattice.theories[static_cast<std::size_t>(j)]);
        }
    }
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            if (i == j || !lattice.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            bool covering = true;
            for (int k = 0; k < count && covering; ++k) {
                if (k == i || k == j) continue;
                if (lattice.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    lattice.leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
                    covering = false;
                }
            }
            if (covering) lattice.hasse.emplace_back(i, j);
        }
    }
    return lattice;
}

SupercharacterTheory sct_meet(const SupercharacterTheory& c, const SupercharacterTheory& d,
                              const SupLattice& lattice) {
    const int ci = lattice.index_of(c);
    const int di = lattice.index_of(d);
    if (ci < 0 || di < 0) {
        throw std::invalid_argument("sct_meet: theory not found in the enumerated lattice");
    }
    // Join of all common lower bounds (m(G) is always one).
    std::optional<SupercharacterTheory> acc;
    for (int i = 0; i < lattice.size(); ++i) {
        if (!lattice.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(ci)] ||
            !lattice.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(di)]) {
            continue;
        }
        if (!acc) {
            acc = lattice.theories[static_cast<std::size_t>(i)];
        } else {
            acc = sct_join(*acc, lattice.theories[static_cast<std::size_t>(i)]);
        }
    }
    if (!acc) throw std::logic_error("sct_meet: no common lower bound (internal error)");
    return *acc;
}

}  // namespace sct
