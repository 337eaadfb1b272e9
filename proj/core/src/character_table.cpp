#include "sct/character_table.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sct {

namespace {

using i64 = long long;

i64 mod_pow(i64 base, i64 exp, i64 p) {
    i64 result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = static_cast<i64>((__int128)result * base % p);
        base = static_cast<i64>((__int128)base * base % p);
        exp >>= 1;
    }
    return result;
}

i64 mod_inv(i64 a, i64 p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> ps;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

i64 least_primitive_root(i64 p) {
    const std::vector<i64> qs = prime_factors(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 q : qs) {
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

using ModMatrix = std::vector<std::vector<i64>>;
using ModVector = std::vector<i64>;

// Reduced row echelon form mod p; returns pivot columns.
std::vector<int> mod_rref(ModMatrix& m, i64 p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const i64 inv = mod_inv(m[r][c], p);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = static_cast<i64>((__int128)m[r][j] * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const i64 f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = ((m[i][j] - static_cast<i64>((__int128)f * m[r][j] % p)) % p + p) % p;
            }
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

std::vector<ModVector> mod_nullspace(ModMatrix m, i64 p) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    const std::vector<int> pivots = mod_rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<ModVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ModVector v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[static_cast<std::size_t>(pivots[k])] = (p - m[k][free]) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial mod p via Hessenberg reduction; coefficient of
// x^k at index k, monic.
ModVector mod_charpoly(ModMatrix h, i64 p) {
    const int n = static_cast<int>(h.size());
    // Similarity reduction to upper Hessenberg form.
    for (int c = 0; c < n - 2; ++c) {
        int piv = -1;
        for (int r = c + 1; r < n; ++r) {
            if (h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != c + 1) {  // swap rows and columns to keep similarity
            std::swap(h[static_cast<std::size_t>(piv)], h[static_cast<std::size_t>(c + 1)]);
            for (int r = 0; r < n; ++r) {
                std::swap(h[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv)],
                          h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
            }
        }
        const i64 inv = mod_inv(h[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(c)], p);
        for (int r = c + 2; r < n; ++r) {
            const i64 f = static_cast<i64>((__int128)h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * inv % p);
            if (f == 0) continue;
            // row_r -= f * row_{c+1}; col_{c+1} += f * col_r (inverse op).
            for (int j = 0; j < n; ++j) {
                h[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    ((h[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                      static_cast<i64>((__int128)f * h[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(j)] % p)) % p + p) % p;
            }
            for (int i = 0; i < n; ++i) {
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(c + 1)] =
                    (h[static_cast<std::size_t>(i)][static_cast<std::size_t>(c + 1)] +
                     static_cast<i64>((__int128)f * h[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] % p)) % p;
            }
        }
    }
    // det(xI - H[0..i)) by the Hessenberg recurrence.
    std::vector<ModVector> ps(static_cast<std::size_t>(n) + 1);
    ps[0] = {1 % p};
    for (int i = 1; i <= n; ++i) {
        // p_i = (x - h[i-1][i-1]) p_{i-1} - sum_k h[k][i-1] (prod subdiag) p_k
        ModVector cur(static_cast<std::size_t>(i) + 1, 0);
        const ModVector& prev = ps[static_cast<std::size_t>(i - 1)];
        const i64 d = ((h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)]) % p + p) % p;
        for (std::size_t k = 0; k < prev.size(); ++k) {
            cur[k + 1] = (cur[k + 1] + prev[k]) % p;
            cur[k] = ((cur[k] - static_cast<i64>((__int128)d * prev[k] % p)) % p + p) % p;
        }
        i64 subprod = 1;
        for (int k = i - 2; k >= 0; --k) {
            subprod = static_cast<i64>((__int128)subprod *
                                       (((h[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(k)]) % p + p) % p) % p);
            const i64 coef = static_cast<i64>(
                (__int128)(((h[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)]) % p + p) % p) * subprod % p);
            if (coef == 0) continue;
            const ModVector& pk = ps[static_cast<std::size_t>(k)];
            for (std::size_t j = 0; j < pk.size(); ++j) {
                cur[j] = ((cur[j] - static_cast<i64>((__int128)coef * pk[j] % p)) % p + p) % p;
            }
        }
        ps[static_cast<std::size_t>(i)] = std::move(cur);
    }
    return ps[static_cast<std::size_t>(n)];
}

i64 poly_eval(const ModVector& poly, i64 x, i64 p) {
    i64 acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) {
        acc = static_cast<i64>(((__int128)acc * x + poly[k]) % p);
    }
    return acc;
}

struct ClassData {
    std::vector<int> reps;
    std::vector<int> sizes;
    std::vector<int> inverse_class;
    std::vector<std::vector<std::vector<i64>>> constants;  // [i][j][k]
};

ClassData class_data(const FiniteGroup& g) {
    ClassData d;
    const int r = g.num_classes();
    d.reps.resize(static_cast<std::size_t>(r));
    d.sizes.resize(static_cast<std::size_t>(r));
    d.inverse_class.resize(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) {
        d.reps[static_cast<std::size_t>(c)] = g.class_rep(c);
        d.sizes[static_cast<std::size_t>(c)] = g.class_size(c);
        d.inverse_class[static_cast<std::size_t>(c)] = g.class_of(g.inv(g.class_rep(c)));
    }
    d.constants.assign(static_cast<std::size_t>(r),
                       std::vector<std::vector<i64>>(static_cast<std::size_t>(r),
                                                     std::vector<i64>(static_cast<std::size_t>(r), 0)));
    // a_{ijk} = #{ x in C_i : x^-1 z_k in C_j } for a fixed representative z_k.
    for (int i = 0; i < r; ++i) {
        for (int x : g.classes()[static_cast<std::size_t>(i)]) {
            const int xi = g.inv(x);
            for (int k = 0; k < r; ++k) {
                const int j = g.class_of(g.mul(xi, d.reps[static_cast<std::size_t>(k)]));
                ++d.constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            }
        }
    }
    return d;
}

}  // namespace

TablePtr build_character_table(const GroupPtr& gp) {
    const FiniteGroup& g = *gp;
    const int n = g.order();
    const int r = g.num_classes();
    const int e = g.exponent();
    const ClassData cd = class_data(g);

    // Smallest p = 1 (mod e) with p > 2 sqrt(n). Such a p never divides
    // |G|: p | n would force p | e by Cauchy, impossible alongside e | p-1.
    i64 p = 0;
    {
        const i64 lower = static_cast<i64>(2.0 * std::sqrt(static_cast<double>(n))) + 1;
        for (i64 cand = e + 1;; cand += e) {
            if (cand >= lower && is_prime(cand)) {
                p = cand;
                break;
            }
        }
    }

    // Common eigenvectors of the class matrices M_i[j][k] = a_{ijk} mod p.
    std::vector<ModMatrix> class_matrices(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        ModMatrix m(static_cast<std::size_t>(r), ModVector(static_cast<std::size_t>(r), 0));
        for (int j = 0; j < r; ++j) {
            for (int k = 0; k < r; ++k) {
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    cd.constants[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] % p;
            }
        }
        class_matrices[static_cast<std::size_t>(i)] = std::move(m);
    }

    std::vector<std::vector<ModVector>> spaces;
    {
        std::vector<ModVector> full;
        for (int i = 0; i < r; ++i) {
            ModVector unit(static_cast<std::size_t>(r), 0);
            unit[static_cast<std::size_t>(i)] = 1;
            full.push_back(std::move(unit));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        bool all_split = true;
        for (const auto& w : spaces) {
            if (w.size() > 1) all_split = false;
        }
        if (all_split) break;
        const ModMatrix& m = class_matrices[static_cast<std::size_t>(i)];
        std::vector<std::vector<ModVector>> next;
        for (auto& w : spaces) {
            const int d = static_cast<int>(w.size());
            if (d == 1) {
                next.push_back(std::move(w));
                continue;
            }
            // Matrix S of M_i restricted to span(w): M_i * B = B * S.
            ModMatrix mb(static_cast<std::size_t>(r), ModVector(static_cast<std::size_t>(d), 0));
            for (int col = 0; col < d; ++col) {
                for (int row = 0; row < r; ++row) {
                    i64 acc = 0;
                    for (int k = 0; k < r; ++k) {
                        acc = static_cast<i64>((acc + (__int128)m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] *
                                                          w[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)]) % p);
                    }
                    mb[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = acc;
                }
            }
            // Solve B * S = M_i B column by column (B has full column rank d).
            ModMatrix aug(static_cast<std::size_t>(r), ModVector(static_cast<std::size_t>(d + d), 0));
            for (int row = 0; row < r; ++row) {
                for (int col = 0; col < d; ++col) {
                    aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                        w[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
                    aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(d + col)] =
                        mb[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
                }
            }
            mod_rref(aug, p);
            ModMatrix s(static_cast<std::size_t>(d), ModVector(static_cast<std::size_t>(d), 0));
            for (int row = 0; row < d; ++row) {
                for (int col = 0; col < d; ++col) {
                    s[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                        aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(d + col)];
                }
            }
            const ModVector cp = mod_charpoly(s, p);
            int found_dim = 0;
            for (i64 t = 0; t < p; ++t) {
                if (poly_eval(cp, t, p) != 0) continue;
                ModMatrix shifted = s;
                for (int k = 0; k < d; ++k) {
                    shifted[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] =
                        ((shifted[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] - t) % p + p) % p;
                }
                std::vector<ModVector> kernel = mod_nullspace(std::move(shifted), p);
                if (kernel.empty()) continue;
                std::vector<ModVector> sub;
                for (const ModVector& c : kernel) {
                    ModVector v(static_cast<std::size_t>(r), 0);
                    for (int col = 0; col < d; ++col) {
                        if (c[static_cast<std::size_t>(col)] == 0) continue;
                        for (int idx = 0; idx < r; ++idx) {
                            v[static_cast<std::size_t>(idx)] =
                                (v[static_cast<std::size_t>(idx)] +
                                 (__int128)c[static_cast<std::size_t>(col)] *
                                     w[static_cast<std::size_t>(col)][static_cast<std::size_t>(idx)]) % p;
                        }
                    }
                    sub.push_back(std::move(v));
                }
                found_dim += static_cast<int>(sub.size());
                next.push_back(std::move(sub));
                if (found_dim == d) break;
            }
            if (found_dim != d) {
                throw std::logic_error("character table: eigenspace splitting failed (internal error)");
            }
        }
        spaces = std::move(next);
    }
    for (const auto& w : spaces) {
        if (w.size() != 1) {
            throw std::logic_error("character table: class matrices did not separate characters");
        }
    }
    assert(static_cast<int>(spaces.size()) == r);

    // Normalize to central-character vectors (coordinate at the identity
    // class is 1) and recover degrees and value tables mod p.
    std::vector<ModVector> omegas;
    for (auto& w : spaces) {
        ModVector v = w[0];
        if (v[0] == 0) throw std::logic_error("character table: eigenvector with zero identity coordinate");
        const i64 inv = mod_inv(v[0], p);
        for (i64& x : v) x = static_cast<i64>((__int128)x * inv % p);
        omegas.push_back(std::move(v));
    }
    std::vector<i64> degrees_mod(static_cast<std::size_t>(r), 0);
    std::vector<int> degrees(static_cast<std::size_t>(r), 0);
    std::vector<ModVector> chi_mod(static_cast<std::size_t>(r), ModVector(static_cast<std::size_t>(r), 0));
    const int max_degree = static_cast<int>(std::sqrt(static_cast<double>(n)) + 0.5);
    for (int s = 0; s < r; ++s) {
        i64 c = 0;
        for (int k = 0; k < r; ++k) {
            const i64 term = static_cast<i64>((__int128)omegas[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] *
                                              omegas[static_cast<std::size_t>(s)][static_cast<std::size_t>(cd.inverse_class[static_cast<std::size_t>(k)])] % p);
            c = (c + static_cast<i64>((__int128)term * mod_inv(cd.sizes[static_cast<std::size_t>(k)], p) % p)) % p;
        }
        const i64 d2 = static_cast<i64>((__int128)(n % p) * mod_inv(c, p) % p);
        int deg = 0;
        for (int q = 1; q <= max_degree; ++q) {
            if (static_cast<i64>((__int128)q * q % p) == d2) {
                deg = q;
                break;
            }
        }
        if (deg == 0) throw std::logic_error("character table: degree recovery failed");
        degrees[static_cast<std::size_t>(s)] = deg;
        degrees_mod[static_cast<std::size_t>(s)] = deg % p;
        for (int k = 0; k < r; ++k) {
            chi_mod[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] =
                static_cast<i64>((__int128)degrees_mod[static_cast<std::size_t>(s)] *
                                 omegas[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] % p *
                                 mod_inv(cd.sizes[static_cast<std::size_t>(k)], p) % p);
        }
    }

    // Inverse DFT lift: chi(g) = sum_j m_j zeta_o^j with
    // m_j = (1/o) sum_l chi(g^l) z^(-jl) mod p, z the canonical o-th root.
    const i64 root = least_primitive_root(p);
    const i64 z_e = mod_pow(root, (p - 1) / e, p);
    std::vector<std::vector<int>> power_class(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        const int rep = cd.reps[static_cast<std::size_t>(k)];
        const int o = g.element_order(rep);
        power_class[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(o));
        int cur = 0;
        for (int l = 0; l < o; ++l) {
            power_class[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = g.class_of(cur);
            cur = g.mul(cur, rep);
        }
    }
    std::vector<std::vector<Cyclotomic>> values(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) {
        values[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) {
            const int o = static_cast<int>(power_class[static_cast<std::size_t>(k)].size());
            const i64 z = mod_pow(z_e, e / o, p);
            const i64 zinv = mod_inv(z, p);
            const i64 oinv = mod_inv(o, p);
            std::vector<Rational> coords(static_cast<std::size_t>(o), Rational(0));
            for (int j = 0; j < o; ++j) {
                i64 acc = 0;
                for (int l = 0; l < o; ++l) {
                    const i64 cls = power_class[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                    const i64 tw = mod_pow(zinv, static_cast<i64>(j) * l % (p - 1), p);
                    acc = (acc + static_cast<i64>((__int128)chi_mod[static_cast<std::size_t>(s)][static_cast<std::size_t>(cls)] * tw % p)) % p;
                }
                const i64 mj = static_cast<i64>((__int128)acc * oinv % p);
                if (mj > degrees[static_cast<std::size_t>(s)]) {
                    throw std::logic_error("character table: root-of-unity multiplicity out of range");
                }
                coords[static_cast<std::size_t>(j)] = Rational(static_cast<long>(mj));
            }
            values[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] =
                Cyclotomic::from_coords(o, std::move(coords));
        }
    }

    // Canonical row order: trivial character first, then (degree, values).
    std::vector<int> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    const Cyclotomic one(Rational(1));
    auto is_trivial = [&](int s) {
        for (int k = 0; k < r; ++k) {
            if (values[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] != one) return false;
        }
        return true;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (degrees[static_cast<std::size_t>(a)] != degrees[static_cast<std::size_t>(b)]) {
            return degrees[static_cast<std::size_t>(a)] < degrees[static_cast<std::size_t>(b)];
        }
        return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
    });

    auto table = std::shared_ptr<CharacterTable>(new CharacterTable());
    table->group_ = gp;
    table->prime_ = p;
    table->class_constants_ = cd.constants;
    for (int s : order) {
        table->values_.push_back(std::move(values[static_cast<std::size_t>(s)]));
        table->degrees_.push_back(degrees[static_cast<std::size_t>(s)]);
    }
    return table;
}

ClassFunction sigma(const CharacterTable& table, const std::vector<int>& irr_indices) {
    if (irr_indices.empty()) throw std::invalid_argument("sigma: empty character set");
    const int r = table.num_irreducibles();
    std::vector<Cyclotomic> values(static_cast<std::size_t>(r));
    for (int i : irr_indices) {
        const Rational deg(table.degree(i));
        for (int k = 0; k < r; ++k) {
            values[static_cast<std::size_t>(k)] += Cyclotomic(deg) * table.value(i, k);
        }
    }
    return ClassFunction{table.group(), std::move(values)};
}

GroupAlgebraElement central_idempotent(const CharacterTable& table, int irr) {
    const FiniteGroup& g = *table.group();
    GroupAlgebraElement out = algebra_zero(table.group());
    const Rational scale = make_rational(table.degree(irr), g.order());
    for (int x = 0; x < g.order(); ++x) {
        out.coeffs[static_cast<std::size_t>(x)] =
            Cyclotomic(scale) * table.value(irr, g.class_of(x)).conj();
    }
    return out;
}

GroupAlgebraElement f_idempotent(const CharacterTable& table, const std::vector<int>& irr_indices) {
    if (irr_indices.empty()) throw std::invalid_argument("f_idempotent: empty character set");
    GroupAlgebraElement out = algebra_zero(table.group());
    for (int i : irr_indices) out = algebra_add(out, central_idempotent(table, i));
    return out;
}

std::vector<std::vector<long long>> restriction_multiplicities(const CharacterTable& table_g,
                                                               const CharacterTable& table_h,
                                                               const SubgroupGroup& h) {
    const int rg = table_g.num_irreducibles();
    const int rh = table_h.num_irreducibles();
    std::vector<std::vector<long long>> mult(static_cast<std::size_t>(rg),
                                             std::vector<long long>(static_cast<std::size_t>(rh), 0));
    for (int i = 0; i < rg; ++i) {
        const ClassFunction restricted = restrict_class_function(table_g.character(i), h);
        for (int j = 0; j < rh; ++j) {
            const Cyclotomic ip = inner_product(restricted, table_h.character(j));
            const auto value = ip.as_integer();
            if (!value || *value < 0) {
                throw std::logic_error("restriction_multiplicities: non-integral multiplicity");
            }
            mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *value;
        }
    }
    return mult;
}

std::vector<int> irreducibles_over(const std::vector<std::vector<long long>>& mult, int psi) {
    std::vector<int> out;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i][static_cast<std::size_t>(psi)] > 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> induce_character_set(const std::vector<std::vector<long long>>& mult,
                                      const std::vector<int>& orbit_of,
                                      const std::vector<int>& z) {
    std::vector<char> in_z(orbit_of.size(), 0);
    for (int psi : z) in_z[static_cast<std::size_t>(psi)] = 1;
    for (int psi : z) {
        for (std::size_t other = 0; other < orbit_of.size(); ++other) {
            if (orbit_of[other] == orbit_of[static_cast<std::size_t>(psi)] && !in_z[other]) {
                throw std::invalid_argument("induce_character_set: set is not a union of orbits");
            }
        }
    }
    std::set<int> out;
    for (int psi : z) {
        for (int chi : irreducibles_over(mult, psi)) out.insert(chi);
    }
    return std::vector<int>(out.begin(), out.end());
}

}  // namespace sct
