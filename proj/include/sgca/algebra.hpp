#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgca/errors.hpp"
#include "sgca/halfint.hpp"
#include "sgca/scalar.hpp"

namespace sgca {

// Mode-indexed basis generators of the l-super Galilean conformal algebra:
// even L_n, P_r, odd G_n, H_r, central C1, C2. L and G carry integer modes,
// P and H carry modes in Z + l.
enum class GenKind : std::uint8_t { L, P, G, H, C1, C2 };

constexpr const char* kind_name(GenKind k) {
    switch (k) {
        case GenKind::L: return "L";
        case GenKind::P: return "P";
        case GenKind::G: return "G";
        case GenKind::H: return "H";
        case GenKind::C1: return "C1";
        case GenKind::C2: return "C2";
    }
    return "?";
}

constexpr bool is_central(GenKind k) { return k == GenKind::C1 || k == GenKind::C2; }
constexpr bool is_odd(GenKind k) { return k == GenKind::G || k == GenKind::H; }

struct BasisGen {
    GenKind kind = GenKind::L;
    HalfInt index{};  // ignored (zero) for C1, C2

    constexpr BasisGen() = default;
    constexpr BasisGen(GenKind k, HalfInt idx) : kind(k), index(is_central(k) ? HalfInt{} : idx) {}

    int parity() const { return is_odd(kind) ? 1 : 0; }

    auto operator<=>(const BasisGen&) const = default;

    std::string str() const {
        if (is_central(kind)) return kind_name(kind);
        return std::string(kind_name(kind)) + "(" + index.str() + ")";
    }
};

inline BasisGen genL(std::int64_t n) { return {GenKind::L, HalfInt::whole(n)}; }
inline BasisGen genP(HalfInt r) { return {GenKind::P, r}; }
inline BasisGen genG(std::int64_t n) { return {GenKind::G, HalfInt::whole(n)}; }
inline BasisGen genH(HalfInt r) { return {GenKind::H, r}; }
inline BasisGen genC1() { return {GenKind::C1, HalfInt{}}; }
inline BasisGen genC2() { return {GenKind::C2, HalfInt{}}; }

enum class CentralMode : std::uint8_t { Symbolic, Numeric };

// Structure-constant mutations, used by mutation tests and the CLI mutation
// run to prove the Jacobi sweep detects broken constants.
enum class Mutation : std::uint8_t {
    None,
    LPIndexSign,  // [L_m, P_r] coefficient (l*m - r) -> (l*m + r)
};

struct AlgebraParams {
    HalfInt ell = HalfInt::whole(1);
    CentralMode central_mode = CentralMode::Symbolic;
    Rational c1_value{0};  // used in Numeric mode
    Rational c2_value{0};
    bool strict_grading = false;
    Mutation mutation = Mutation::None;

    static AlgebraParams symbolic(HalfInt ell) {
        AlgebraParams p;
        p.ell = ell;
        return p;
    }
    static AlgebraParams numeric(HalfInt ell, Rational c1, Rational c2) {
        AlgebraParams p;
        p.ell = ell;
        p.central_mode = CentralMode::Numeric;
        p.c1_value = std::move(c1);
        p.c2_value = std::move(c2);
        return p;
    }
    static AlgebraParams centerless(HalfInt ell) {
        return numeric(ell, Rational(0), Rational(0));
    }
};

// Checks that the generator's mode lies on the lattice required by ell.
void validate_generator(const AlgebraParams& params, const BasisGen& g);

// Finite linear combination of basis generators with CScalar coefficients;
// zero coefficients are never stored, so map equality is element equality.
class Element {
  public:
    using TermMap = std::map<BasisGen, CScalar>;

    Element() = default;
    Element(BasisGen g, CScalar coeff) { add(g, std::move(coeff)); }
    static Element generator(BasisGen g) { return Element(g, CScalar(Rational(1))); }

    void add(const BasisGen& g, CScalar coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(g, std::move(coeff));
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // 0 = even, 1 = odd, nullopt = mixed or zero-with-no-grade (zero counts as
    // homogeneous of either parity).
    std::optional<int> homogeneous_parity() const {
        if (terms_.empty()) return 0;
        int p = terms_.begin()->first.parity();
        for (const auto& [g, c] : terms_)
            if (g.parity() != p) return std::nullopt;
        return p;
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [g, c] : o.terms_) r.add(g, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [g, c] : o.terms_) r.add(g, -c);
        return r;
    }
    Element operator*(const CScalar& s) const {
        Element r;
        if (s.is_zero()) return r;
        for (const auto& [g, c] : terms_) r.add(g, c * s);
        return r;
    }
    Element operator-() const {
        Element r;
        for (const auto& [g, c] : terms_) r.terms_[g] = -c;
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    // Canonical text form, e.g. "4*L(0) + 6*c1". See element_text.cpp.
    std::string str() const;

  private:
    TermMap terms_;
};

// Graded bracket of the algebra: anticommutator for odd-odd generator pairs,
// commutator otherwise, extended bilinearly. Central terms are carried as
// formal charges or substituted per params.central_mode.
Element bracket(const AlgebraParams& params, const Element& x, const Element& y);

// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]].
// Vanishes identically on the shipped structure constants.
Element super_jacobiator(const AlgebraParams& params, const Element& x, const Element& y,
                         const Element& z);

struct JacobiFailure {
    BasisGen x, y, z;
    Element residual;
};

struct JacobiReport {
    std::uint64_t checked = 0;
    std::vector<JacobiFailure> failures;
    bool ok() const { return failures.empty(); }
};

// All generators (including C1, C2) with |index| <= window.
std::vector<BasisGen> generator_window(const AlgebraParams& params, HalfInt window);

// Exhaustive super-Jacobi sweep over unordered generator triples with
// |index| <= window. Deterministic report; triples may be checked in
// parallel (capped by SGCA_THREADS).
JacobiReport verify_jacobi_window(const AlgebraParams& params, HalfInt window);

}  // namespace sgca
