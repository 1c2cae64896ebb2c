#pragma once

#include <stdexcept>
#include <string>

#include "sgca/rational.hpp"

namespace sgca {

// Scalar of the form  a + b1*c1 + b2*c2  with exact rational parts, where c1
// and c2 are the formal central charges. Brackets computed in symbolic mode
// carry their central contributions as c1/c2-linear coefficients; numeric mode
// substitutes rational values instead. Products of two charge-linear scalars
// never arise in the algebra and are rejected.
struct CScalar {
    Rational a{0};
    Rational b1{0};
    Rational b2{0};

    CScalar() = default;
    CScalar(Rational plain) : a(std::move(plain)) {}
    CScalar(Rational plain, Rational c1_part, Rational c2_part)
        : a(std::move(plain)), b1(std::move(c1_part)), b2(std::move(c2_part)) {}

    static CScalar charge1(Rational coeff) { return CScalar(Rational(0), std::move(coeff), Rational(0)); }
    static CScalar charge2(Rational coeff) { return CScalar(Rational(0), Rational(0), std::move(coeff)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b1) == 0 && sgn(b2) == 0; }
    bool is_plain() const { return sgn(b1) == 0 && sgn(b2) == 0; }

    CScalar operator-() const { return CScalar(-a, -b1, -b2); }
    CScalar operator+(const CScalar& o) const { return CScalar(a + o.a, b1 + o.b1, b2 + o.b2); }
    CScalar operator-(const CScalar& o) const { return CScalar(a - o.a, b1 - o.b1, b2 - o.b2); }
    CScalar& operator+=(const CScalar& o) {
        a += o.a; b1 += o.b1; b2 += o.b2;
        return *this;
    }

    CScalar operator*(const CScalar& o) const {
        if (!is_plain() && !o.is_plain())
            throw std::domain_error("product of two charge-linear scalars is outside the ring");
        if (o.is_plain()) return CScalar(a * o.a, b1 * o.a, b2 * o.a);
        return CScalar(a * o.a, a * o.b1, a * o.b2);
    }
    CScalar operator*(const Rational& q) const { return CScalar(a * q, b1 * q, b2 * q); }

    bool operator==(const CScalar& o) const { return a == o.a && b1 == o.b1 && b2 == o.b2; }

    // "3", "c1", "-2*c2", "(1 + 3/2*c1)"
    std::string str() const {
        int parts = (sgn(a) != 0) + (sgn(b1) != 0) + (sgn(b2) != 0);
        if (parts == 0) return "0";
        auto piece = [](const Rational& q, const char* sym) {
            if (!sym) return to_string(q);
            if (q == 1) return std::string(sym);
            if (q == -1) return "-" + std::string(sym);
            return to_string(q) + "*" + sym;
        };
        std::string out;
        bool first = true;
        auto append = [&](const Rational& q, const char* sym) {
            if (sgn(q) == 0) return;
            std::string p = piece(q, sym);
            if (first) {
                out = p;
                first = false;
            } else if (!p.empty() && p[0] == '-') {
                out += " - " + p.substr(1);
            } else {
                out += " + " + p;
            }
        };
        append(a, nullptr);
        append(b1, "c1");
        append(b2, "c2");
        if (parts > 1) return "(" + out + ")";
        return out;
    }
};

inline CScalar operator*(const Rational& q, const CScalar& s) { return s * q; }

}  // namespace sgca
