#include "sct/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sct {

namespace {

[[noreturn]] void bad_spec(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

int FiniteGroup::power(int g, long long k) const {
    const int o = element_order(g);
    long long e = ((k % o) + o) % o;
    int acc = 0;
    int base = g;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) bad_spec("group table: empty");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) bad_spec("group table: not square");
        for (int v : row) {
            if (v < 0 || v >= n) bad_spec("group table: entry out of range (not closed)");
            flat.push_back(v);
        }
    }
    auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)]; };
    for (int g = 0; g < n; ++g) {
        if (at(0, g) != g || at(g, 0) != g) bad_spec("group table: index 0 is not an identity");
    }
    for (int g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < n; ++h) {
            if (at(g, h) == 0) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) bad_spec("group table: element " + std::to_string(g) + " has no inverse");
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int ab = at(a, b);
            for (int c = 0; c < n; ++c) {
                if (at(ab, c) != at(a, at(b, c))) {
                    bad_spec("group table: not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
                }
            }
        }
    }
    return from_table_unchecked(std::move(flat), n);
}

GroupPtr FiniteGroup::from_table_unchecked(std::vector<int> flat, int order) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = order;
    g->table_ = std::move(flat);
    g->finish();
    return g;
}

void FiniteGroup::finish() {
    const int n = order_;
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (mul(g, h) == 0) {
                inverse_[static_cast<std::size_t>(g)] = h;
                break;
            }
        }
    }
    element_order_.assign(static_cast<std::size_t>(n), 1);
    exponent_ = 1;
    for (int g = 0; g < n; ++g) {
        int o = 1;
        int x = g;
        while (x != 0) {
            x = mul(x, g);
            ++o;
        }
        element_order_[static_cast<std::size_t>(g)] = o;
        exponent_ = static_cast<int>(std::lcm(exponent_, o));
    }
    // Conjugation orbits.
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    Partition classes;
    for (int g = 0; g < n; ++g) {
        if (seen[static_cast<std::size_t>(g)]) continue;
        std::vector<int> orbit;
        for (int h = 0; h < n; ++h) {
            const int c = conjugate(g, h);
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    classes_ = canonicalize_partition(std::move(classes));
    class_of_ = block_index_map(classes_, n);
}

Partition conjugacy_classes(const FiniteGroup& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    Partition classes;
    for (int x = 0; x < g.order(); ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::vector<int> orbit;
        for (int h = 0; h < g.order(); ++h) {
            const int c = g.conjugate(x, h);
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return canonicalize_partition(std::move(classes));
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (&a == &b) return true;
    if (a.order() != b.order()) return false;
    for (int x = 0; x < a.order(); ++x) {
        for (int y = 0; y < a.order(); ++y) {
            if (a.mul(x, y) != b.mul(x, y)) return false;
        }
    }
    return true;
}

namespace {

GroupPtr cyclic_group(int n) {
    if (n < 1) bad_spec("cyclic: n must be positive");
    std::vector<int> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = (a + b) % n;
    }
    return FiniteGroup::from_table_unchecked(std::move(flat), n);
}

// Elements 0..n-1: rotations r^k; n..2n-1: reflections s*r^k.
GroupPtr dihedral_group(int n) {
    if (n < 1) bad_spec("dihedral: n must be positive");
    const int m = 2 * n;
    auto idx = [n](bool refl, int k) { return (refl ? n : 0) + ((k % n + n) % n); };
    std::vector<int> flat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        const bool ar = a >= n;
        const int ak = ar ? a - n : a;
        for (int b = 0; b < m; ++b) {
            const bool br = b >= n;
            const int bk = br ? b - n : b;
            // (s^i r^ak)(s^j r^bk) with r s = s r^-1.
            int k = br ? idx(false, bk - ak) : idx(false, ak + bk);
            flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] =
                (ar != br) ? k + n : k;
        }
    }
    return FiniteGroup::from_table_unchecked(std::move(flat), m);
}

GroupPtr quaternion_group() {
    // x^a y^b with a mod 4, b mod 2; index = a + 4b; y^2 = x^2, y x = x^-1 y.
    const int m = 8;
    auto idx = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * (((b % 2) + 2) % 2); };
    std::vector<int> flat(64);
    for (int i = 0; i < 8; ++i) {
        const int a = i % 4, b = i / 4;
        for (int j = 0; j < 8; ++j) {
            const int c = j % 4, d = j / 4;
            int out;
            if (b == 0) {
                out = idx(a + c, d);
            } else if (d == 0) {
                out = idx(a - c, 1);
            } else {
                out = idx(a - c + 2, 0);
            }
            flat[static_cast<std::size_t>(i) * 8 + static_cast<std::size_t>(j)] = out;
        }
    }
    return FiniteGroup::from_table_unchecked(std::move(flat), m);
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    // "apply p, then q"
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[static_cast<std::size_t>(p[i])];
    return out;
}

GroupPtr closure_of_permutations(const std::vector<std::vector<int>>& gens, int max_order) {
    if (gens.empty()) bad_spec("generators: need at least one permutation");
    const std::size_t domain = gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != domain) bad_spec("generators: permutations act on different domains");
        std::vector<int> seen(domain, 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(domain) || seen[static_cast<std::size_t>(v)]++) {
                bad_spec("generators: not a permutation");
            }
        }
    }
    std::vector<int> id(domain);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        const int cur = frontier.front();
        frontier.pop();
        for (const auto& g : gens) {
            std::vector<int> next = compose(elems[static_cast<std::size_t>(cur)], g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(next);
                if (static_cast<int>(elems.size()) > max_order) {
                    bad_spec("generators: closure exceeds the configured maximum order");
                }
                frontier.push(static_cast<int>(elems.size()) - 1);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
                index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
        }
    }
    return FiniteGroup::from_table_unchecked(std::move(flat), n);
}

GroupPtr symmetric_group(int n, int max_order) {
    if (n < 1) bad_spec("symmetric: n must be positive");
    if (n > 5) bad_spec("symmetric: n must be at most 5");
    if (n == 1) return cyclic_group(1);
    std::vector<int> transposition(static_cast<std::size_t>(n));
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    return closure_of_permutations({transposition, cycle}, max_order);
}

}  // namespace

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
    const int na = a->order();
    const int nb = b->order();
    const long long n = static_cast<long long>(na) * nb;
    std::vector<int> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        const int xa = x / nb, xb = x % nb;
        for (int y = 0; y < n; ++y) {
            const int ya = y / nb, yb = y % nb;
            flat[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
                a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    }
    return FiniteGroup::from_table_unchecked(std::move(flat), static_cast<int>(n));
}

GroupSpec parse_group_shorthand(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    if (kind == "quaternion") return GroupSpec{GroupSpec::Family{"quaternion", 8}};
    if (kind != "cyclic" && kind != "dihedral" && kind != "symmetric") {
        bad_spec("unknown group family '" + kind + "'");
    }
    if (colon == std::string::npos) bad_spec("family '" + kind + "' needs a parameter, e.g. " + kind + ":4");
    int n = 0;
    try {
        n = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        bad_spec("bad group parameter in '" + text + "'");
    }
    return GroupSpec{GroupSpec::Family{kind, n}};
}

GroupPtr build_group(const GroupSpec& spec, int max_order) {
    GroupPtr result;
    if (const auto* fam = std::get_if<GroupSpec::Family>(&spec.value)) {
        if (fam->kind == "cyclic") {
            result = cyclic_group(fam->n);
        } else if (fam->kind == "dihedral") {
            result = dihedral_group(fam->n);
        } else if (fam->kind == "symmetric") {
            result = symmetric_group(fam->n, max_order);
        } else if (fam->kind == "quaternion") {
            result = quaternion_group();
        } else {
            bad_spec("unknown group family '" + fam->kind + "'");
        }
    } else if (const auto* prod = std::get_if<GroupSpec::Product>(&spec.value)) {
        if (prod->factors.empty()) bad_spec("product: needs at least one factor");
        result = build_group(prod->factors[0], max_order);
        for (std::size_t i = 1; i < prod->factors.size(); ++i) {
            result = product_group(result, build_group(prod->factors[i], max_order));
            if (result->order() > max_order) bad_spec("product: order exceeds the configured maximum");
        }
    } else if (const auto* gens = std::get_if<GroupSpec::Generators>(&spec.value)) {
        result = closure_of_permutations(gens->perms, max_order);
    } else if (const auto* table = std::get_if<GroupSpec::Table>(&spec.value)) {
        result = FiniteGroup::from_table(table->mul);
    } else {
        bad_spec("empty group spec");
    }
    if (result->order() > max_order) bad_spec("group order exceeds the configured maximum");
    return result;
}

int Subgroup::index_of(int parent_element) const {
    const auto it = std::lower_bound(members.begin(), members.end(), parent_element);
    if (it == members.end() || *it != parent_element) return -1;
    return static_cast<int>(it - members.begin());
}

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& gens) {
    for (int x : gens) {
        if (x < 0 || x >= g->order()) bad_spec("subgroup generator out of range");
    }
    std::vector<char> in(static_cast<std::size_t>(g->order()), 0);
    in[0] = 1;
    std::vector<int> frontier{0};
    std::vector<int> members{0};
    std::size_t head = 0;
    while (head < frontier.size()) {
        const int cur = frontier[head++];
        for (int x : gens) {
            for (int next : {g->mul(cur, x), g->mul(cur, g->inv(x))}) {
                if (!in[static_cast<std::size_t>(next)]) {
                    in[static_cast<std::size_t>(next)] = 1;
                    frontier.push_back(next);
                    members.push_back(next);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{g, std::move(members)};
}

bool is_normal(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    for (int x : h.members) {
        for (int y = 0; y < g.order(); ++y) {
            if (!h.contains(g.conjugate(x, y))) return false;
        }
    }
    return true;
}

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> members(static_cast<std::size_t>(g->order()));
    std::iota(members.begin(), members.end(), 0);
    return Subgroup{g, std::move(members)};
}

SubgroupGroup materialize_subgroup(const Subgroup& h) {
    const int m = h.order();
    std::vector<int> flat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const int prod = h.parent->mul(h.members[static_cast<std::size_t>(a)], h.members[static_cast<std::size_t>(b)]);
            const int local = h.index_of(prod);
            if (local < 0) throw std::invalid_argument("materialize_subgroup: set is not closed");
            flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] = local;
        }
    }
    return SubgroupGroup{FiniteGroup::from_table_unchecked(std::move(flat), m), h, h.members};
}

QuotientStructure make_quotient(const Subgroup& n) {
    if (!is_normal(n)) throw std::invalid_argument("quotient: subgroup is not normal");
    const FiniteGroup& g = *n.parent;
    std::vector<int> coset_of(static_cast<std::size_t>(g.order()), -1);
    Partition cosets;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        std::vector<int> coset;
        for (int h : n.members) {
            const int y = g.mul(h, x);
            coset_of[static_cast<std::size_t>(y)] = static_cast<int>(cosets.size());
            coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    cosets = canonicalize_partition(std::move(cosets));
    std::vector<int> projection = block_index_map(cosets, g.order());
    const int q = static_cast<int>(cosets.size());
    std::vector<int> flat(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            const int prod = g.mul(cosets[static_cast<std::size_t>(a)][0], cosets[static_cast<std::size_t>(b)][0]);
            flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) + static_cast<std::size_t>(b)] =
                projection[static_cast<std::size_t>(prod)];
        }
    }
    return QuotientStructure{n.parent, n, std::move(cosets),
                             FiniteGroup::from_table_unchecked(std::move(flat), q), std::move(projection)};
}

}  // namespace sct
