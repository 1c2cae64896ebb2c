#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgca {

// Exact arbitrary-precision rational scalar. All algebraic kernels in this
// project are computed over Rational; no floating point anywhere.
using Rational = mpq_class;

inline Rational frac(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Integral power, negative exponents allowed for nonzero base.
inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(base)) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return Rational(0);
    }
    Rational acc(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    long n = e > 0 ? e : -e;
    for (; n > 0; n >>= 1) {
        if (n & 1) acc *= b;
        b *= b;
    }
    return acc;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

// Checked conversion for JSON output.
inline std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("integer too large for JSON output");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace sgca
