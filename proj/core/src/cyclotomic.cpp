#include "sct/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sct/linalg.hpp"

namespace sct {

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int euler_phi(int n) {
    int result = n;
    for (int p : prime_divisors(n)) result = result / p * (p - 1);
    return result;
}

// poly[i] = coefficient of x^i; division is exact for our inputs.
std::vector<Rational> poly_divide_exact(const std::vector<Rational>& num,
                                        const std::vector<Rational>& den) {
    std::vector<Rational> rem = num;
    const std::size_t dd = den.size() - 1;
    assert(den[dd] == 1);
    std::vector<Rational> quot(rem.size() - dd, Rational(0));
    for (std::size_t k = rem.size(); k-- > dd;) {
        Rational c = rem[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den[j];
    }
    for (const Rational& c : rem) assert(c == 0);
    return quot;
}

std::mutex cache_mutex;
std::map<int, std::vector<Rational>> phi_poly_cache;
// (n, p) -> solver expressing elements of Q(zeta_{n/p}) inside Q(zeta_n).
std::map<std::pair<int, int>, std::unique_ptr<LinearSolver>> descent_cache;

const std::vector<Rational>& cyclotomic_polynomial_locked(int n) {
    auto it = phi_poly_cache.find(n);
    if (it != phi_poly_cache.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<Rational> f(static_cast<std::size_t>(n) + 1, Rational(0));
    f[0] = -1;
    f[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) f = poly_divide_exact(f, cyclotomic_polynomial_locked(d));
    }
    return phi_poly_cache.emplace(n, std::move(f)).first->second;
}

// Reduces sum raw[k] x^k (x = zeta_n) to the canonical power basis:
// exponents folded mod n, then remainder mod Phi_n, padded to length n.
std::vector<Rational> reduce_mod_phi(int n, const std::vector<Rational>& raw) {
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] != 0) v[k % static_cast<std::size_t>(n)] += raw[k];
    }
    const std::vector<Rational>& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = static_cast<std::size_t>(n); k-- > deg;) {
        if (v[k] == 0) continue;
        Rational c = v[k];
        v[k] = 0;
        for (std::size_t j = 0; j < deg; ++j) v[k - deg + j] -= c * phi[j];
    }
    return v;
}

const LinearSolver& descent_solver(int n, int p) {
    const auto key = std::make_pair(n, p);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = descent_cache.find(key);
        if (it != descent_cache.end()) return *it->second;
    }
    // Built outside the lock: construction itself needs the polynomial cache.
    const int d = n / p;
    const int phi_n = euler_phi(n);
    const int phi_d = euler_phi(d);
    // Column k = canonical coordinates of zeta_n^(k * n/d), the image of
    // zeta_d^k under the inclusion Q(zeta_d) -> Q(zeta_n).
    QMatrix e(static_cast<std::size_t>(phi_n), QVector(static_cast<std::size_t>(phi_d), Rational(0)));
    for (int k = 0; k < phi_d; ++k) {
        std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
        raw[static_cast<std::size_t>((static_cast<long long>(k) * (n / d)) % n)] = 1;
        const std::vector<Rational> col = reduce_mod_phi(n, raw);
        for (int i = 0; i < phi_n; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(i)];
    }
    auto solver = std::make_unique<LinearSolver>(e);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = descent_cache.find(key);
    if (it != descent_cache.end()) return *it->second;
    return *descent_cache.emplace(key, std::move(solver)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_polynomial_locked(n);
}

Cyclotomic::Cyclotomic() : conductor_(1), coords_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& r) : conductor_(1), coords_{r} {
    // Two-argument mpq_class construction skips canonicalization, and
    // mpq equality assumes it; normalize at the boundary.
    coords_[0].canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
    std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
    const long long e = ((k % n) + n) % n;
    raw[static_cast<std::size_t>(e)] = 1;
    return from_coords(n, std::move(raw));
}

Cyclotomic Cyclotomic::from_coords(int n, std::vector<Rational> coords) {
    if (n < 1) throw std::invalid_argument("from_coords: conductor must be positive");
    Cyclotomic result;
    result.conductor_ = n;
    result.coords_ = reduce_mod_phi(n, coords);

    // Greedy conductor descent: drop to Q(zeta_{n/p}) while possible.
    bool descended = true;
    while (descended && result.conductor_ > 1) {
        descended = false;
        const int cur = result.conductor_;
        for (int p : prime_divisors(cur)) {
            const int d = cur / p;
            const int phi_cur = euler_phi(cur);
            const LinearSolver& solver = descent_solver(cur, p);
            QVector b(result.coords_.begin(), result.coords_.begin() + phi_cur);
            if (auto sol = solver.solve(b)) {
                result.conductor_ = d;
                result.coords_.assign(static_cast<std::size_t>(d), Rational(0));
                for (std::size_t k = 0; k < sol->size(); ++k) result.coords_[k] = std::move((*sol)[k]);
                descended = true;
                break;
            }
        }
    }
    return result;
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coords_[0] == 0; }

std::optional<Rational> Cyclotomic::as_rational() const {
    if (conductor_ != 1) return std::nullopt;
    return coords_[0];
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
    if (conductor_ != 1) return std::nullopt;
    return as_int64(coords_[0]);
}

Cyclotomic Cyclotomic::conj() const { return galois(conductor_ - 1 == 0 ? 1 : conductor_ - 1); }

Cyclotomic Cyclotomic::galois(long long j) const {
    const int n = conductor_;
    const long long jm = ((j % n) + n) % n;
    if (std::gcd(static_cast<long long>(n), jm) != 1) {
        throw std::invalid_argument("galois: exponent not coprime to conductor");
    }
    std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k] != 0) raw[static_cast<std::size_t>((jm * static_cast<long long>(k)) % n)] += coords_[k];
    }
    // Automorphisms preserve the (minimal) conductor, so reduction suffices.
    Cyclotomic result;
    result.conductor_ = n;
    result.coords_ = reduce_mod_phi(n, raw);
    return result;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic result = *this;
    for (Rational& c : result.coords_) c = -c;
    return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.is_zero()) return *this;
    if (conductor_ == rhs.conductor_) {
        for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
        *this = from_coords(conductor_, std::move(coords_));
        return *this;
    }
    if (rhs.conductor_ == 1) {
        // Adding a rational cannot change the minimal conductor.
        coords_[0] += rhs.coords_[0];
        if (conductor_ == 1) *this = from_coords(1, std::move(coords_));
        return *this;
    }
    if (conductor_ == 1) {
        Rational r = coords_[0];
        *this = rhs;
        coords_[0] += r;
        return *this;
    }
    const int l = std::lcm(conductor_, rhs.conductor_);
    std::vector<Rational> raw(static_cast<std::size_t>(l), Rational(0));
    const int sa = l / conductor_;
    const int sb = l / rhs.conductor_;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k] != 0) raw[k * static_cast<std::size_t>(sa)] += coords_[k];
    }
    for (std::size_t k = 0; k < rhs.coords_.size(); ++k) {
        if (rhs.coords_[k] != 0) raw[k * static_cast<std::size_t>(sb)] += rhs.coords_[k];
    }
    *this = from_coords(l, std::move(raw));
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) {
        *this = Cyclotomic();
        return *this;
    }
    if (rhs.conductor_ == 1) {
        // Scaling by a nonzero rational keeps the conductor minimal.
        for (Rational& c : coords_) c *= rhs.coords_[0];
        return *this;
    }
    if (conductor_ == 1) {
        const Rational r = coords_[0];
        *this = rhs;
        for (Rational& c : coords_) c *= r;
        return *this;
    }
    const int l = std::lcm(conductor_, rhs.conductor_);
    const int sa = l / conductor_;
    const int sb = l / rhs.conductor_;
    std::vector<Rational> raw(2 * static_cast<std::size_t>(l), Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coords_.size(); ++j) {
            if (rhs.coords_[j] == 0) continue;
            raw[i * static_cast<std::size_t>(sa) + j * static_cast<std::size_t>(sb)] +=
                coords_[i] * rhs.coords_[j];
        }
    }
    *this = from_coords(l, std::move(raw));
    return *this;
}

Cyclotomic Cyclotomic::operator/(const Rational& r) const {
    if (r == 0) throw std::invalid_argument("division by zero rational");
    Cyclotomic result = *this;
    for (Rational& c : result.coords_) c /= r;
    return result;
}

std::strong_ordering Cyclotomic::operator<=>(const Cyclotomic& rhs) const {
    if (conductor_ != rhs.conductor_) {
        return conductor_ < rhs.conductor_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const int c = compare(coords_[k], rhs.coords_[k]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
    if (conductor_ == 1) return coords_[0].get_str();
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << coords_[k].get_str();
            continue;
        }
        if (coords_[k] != 1) out << coords_[k].get_str() << "*";
        out << "z" << conductor_;
        if (k > 1) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace sct
