#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sct/rational.hpp"

namespace sct {

/// An exact element of the cyclotomic field Q(zeta_n).
///
/// Values are kept in a unique canonical form: the conductor n is minimal
/// (the value lies in no proper subfield Q(zeta_d), d | n), and the
/// coordinate vector has length n with entries beyond phi(n)-1 zero, i.e.
/// the value is reduced against the minimal polynomial of zeta_n. Two
/// values are equal iff conductor and coordinates are identical.
class Cyclotomic {
public:
    /// Zero (conductor 1).
    Cyclotomic();

    Cyclotomic(const Rational& r);  // NOLINT: implicit by design
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(int v) : Cyclotomic(Rational(v)) {}

    /// zeta_n^k (k may be negative or exceed n).
    static Cyclotomic root_of_unity(int n, long long k);

    /// sum_k coords[k] * zeta_n^k, reduced and conductor-minimized.
    static Cyclotomic from_coords(int n, std::vector<Rational> coords);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    std::optional<Rational> as_rational() const;
    std::optional<std::int64_t> as_integer() const;

    /// Complex conjugation: zeta_n -> zeta_n^(n-1).
    Cyclotomic conj() const;

    /// Galois automorphism zeta_n -> zeta_n^j, gcd(j, n) = 1.
    Cyclotomic galois(long long j) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    /// Division by a nonzero rational (general field inverses are not needed
    /// anywhere in the library and are deliberately not provided).
    Cyclotomic operator/(const Rational& r) const;

    bool operator==(const Cyclotomic& rhs) const = default;

    /// Canonical total order: by conductor, then coordinates; used for
    /// deterministic row ordering and sort keys, not for magnitude.
    std::strong_ordering operator<=>(const Cyclotomic& rhs) const;

    std::string to_string() const;

private:
    int conductor_;
    std::vector<Rational> coords_;
};

/// Coefficients of the n-th cyclotomic polynomial (index = degree,
/// integer-valued, monic). Cached; thread-safe.
const std::vector<Rational>& cyclotomic_polynomial(int n);

}  // namespace sct
