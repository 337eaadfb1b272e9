#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace sct {

/// Exact arbitrary-precision rational, the scalar type under every
/// coordinate in the library.  All arithmetic stays canonical.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& num, const std::string& den) {
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::optional<std::int64_t> as_int64(const Rational& r) {
    if (r.get_den() != 1) return std::nullopt;
    const mpz_class& n = r.get_num();
    if (!n.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(n.get_si());
}

/// Total order usable as a sort key (mpq_class already provides <, ==).
inline int compare(const Rational& a, const Rational& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

}  // namespace sct
