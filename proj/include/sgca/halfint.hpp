#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sgca/rational.hpp"

namespace sgca {

// Element of (1/2)Z stored as twice its value, so that arithmetic, comparison
// and parity tests stay integral. Mode indices, the deformation parameter and
// Laurent exponents all live here.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t twice_value) : twice(twice_value) {}

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(std::int64_t numerator) { return HalfInt(numerator); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr std::int64_t as_integer() const { return twice / 2; }

    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    auto operator<=>(const HalfInt&) const = default;

    Rational to_rational() const { return frac(twice, 2); }

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

// Accepts "3", "-2", "1/2", "-7/2" (odd numerator over 2), or "p/q" reducing
// to halves. Throws std::invalid_argument otherwise.
inline HalfInt halfint_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return HalfInt::whole(v);
        }
        size_t pos = 0;
        long num = std::stol(s.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument(s);
        long den = std::stol(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1) throw std::invalid_argument(s);
        if (den == 2) return HalfInt::half(num);
        if (den == 1) return HalfInt::whole(num);
        if (den != 0 && num % (den / 2 * 2 == den ? den / 2 : den) == 0) {
            // reducible fractions like 4/2 or 6/3
            if (num % den == 0) return HalfInt::whole(num / den);
            if (den % 2 == 0 && num % (den / 2) == 0) return HalfInt::half(num / (den / 2));
        }
        throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed half-integer literal: " + s);
    }
}

}  // namespace sgca
