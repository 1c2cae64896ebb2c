#include "sgca/algebra.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <thread>

#include "sgca/util.hpp"

namespace sgca {

namespace {

int kind_rank(GenKind k) {
    switch (k) {
        case GenKind::L: return 0;
        case GenKind::P: return 1;
        case GenKind::G: return 2;
        case GenKind::H: return 3;
        case GenKind::C1: return 4;
        case GenKind::C2: return 5;
    }
    return 6;
}

// m(m^2-1) as a rational, for half-integer-safe profiles.
Rational cubic_profile(HalfInt m) {
    Rational q = m.to_rational();
    return q * (q * q - 1);
}

// 4m^2-1
Rational gg_profile(HalfInt m) {
    Rational q = m.to_rational();
    return 4 * q * q - 1;
}

}  // namespace

void validate_generator(const AlgebraParams& params, const BasisGen& g) {
    switch (g.kind) {
        case GenKind::L:
        case GenKind::G:
            if (!g.index.is_integer())
                throw IndexParityError(g.str() + ": L/G modes must be integers");
            break;
        case GenKind::P:
        case GenKind::H:
            if (((g.index - params.ell).twice % 2) != 0)
                throw IndexParityError(g.str() + ": P/H modes must lie in Z + " +
                                       params.ell.str());
            break;
        default:
            break;
    }
}

namespace {

// Structure constants on an ordered generator pair (kind_rank(a) <= kind_rank(b)).
// Central contributions are emitted through the charge hooks so Symbolic and
// Numeric modes share one table.
Element ordered_generator_bracket(const AlgebraParams& params, const BasisGen& a,
                                  const BasisGen& b) {
    Element out;
    const HalfInt ell = params.ell;
    const bool ell_is_one = ell == HalfInt::whole(1);

    auto add_c1 = [&](const Rational& coeff) {
        if (sgn(coeff) == 0) return;
        if (params.central_mode == CentralMode::Symbolic)
            out.add(genC1(), CScalar::charge1(coeff));
        else
            out.add(genC1(), CScalar(coeff * params.c1_value));
    };
    auto add_c2 = [&](const Rational& coeff) {
        if (!ell_is_one || sgn(coeff) == 0) return;
        if (params.central_mode == CentralMode::Symbolic)
            out.add(genC2(), CScalar::charge2(coeff));
        else
            out.add(genC2(), CScalar(coeff * params.c2_value));
    };

    const HalfInt m = a.index;
    const HalfInt r = b.index;
    const Rational mq = m.to_rational();
    const Rational rq = r.to_rational();
    const Rational lq = ell.to_rational();

    switch (a.kind) {
        case GenKind::L:
            switch (b.kind) {
                case GenKind::L:
                    // [L_m, L_n] = (m-n) L_{m+n} + c1 m(m^2-1) d_{m+n,0}
                    out.add({GenKind::L, m + r}, CScalar(mq - rq));
                    if ((m + r).twice == 0) add_c1(cubic_profile(m));
                    return out;
                case GenKind::P: {
                    // [L_m, P_r] = (l m - r) P_{m+r} + c2 m(m^2-1) d_{m+r,0} d_{l,1}
                    Rational coeff = lq * mq - rq;
                    if (params.mutation == Mutation::LPIndexSign) coeff = lq * mq + rq;
                    out.add({GenKind::P, m + r}, CScalar(coeff));
                    if ((m + r).twice == 0) add_c2(cubic_profile(m));
                    return out;
                }
                case GenKind::G:
                    // [L_m, G_n] = (m/2 - n) G_{m+n}
                    out.add({GenKind::G, m + r}, CScalar(mq / 2 - rq));
                    return out;
                case GenKind::H:
                    // [L_m, H_r] = ((2l-1)/2 m - r) H_{m+r}
                    out.add({GenKind::H, m + r}, CScalar((2 * lq - 1) / 2 * mq - rq));
                    return out;
                default:
                    return out;
            }
        case GenKind::P:
            switch (b.kind) {
                case GenKind::P:
                    return out;  // [P_r, P_s] = 0
                case GenKind::G:
                    // [P_r, G_m] = (r/2 - l m) H_{r+m}   (a = P_r, b = G_m)
                    out.add({GenKind::H, m + r}, CScalar(mq / 2 - lq * rq));
                    return out;
                case GenKind::H:
                    return out;  // [P_r, H_s] = 0
                default:
                    return out;
            }
        case GenKind::G:
            switch (b.kind) {
                case GenKind::G:
                    // {G_m, G_n} = 2 L_{m+n} + c1 (4m^2-1) d_{m+n,0}
                    out.add({GenKind::L, m + r}, CScalar(Rational(2)));
                    if ((m + r).twice == 0) add_c1(gg_profile(m));
                    return out;
                case GenKind::H:
                    // {G_m, H_r} = 2 P_{m+r} + c2 (4m^2-1) d_{m+r,0} d_{l,1}
                    out.add({GenKind::P, m + r}, CScalar(Rational(2)));
                    if ((m + r).twice == 0) add_c2(gg_profile(m));
                    return out;
                default:
                    return out;
            }
        case GenKind::H:
            return out;  // {H_r, H_s} = 0
        default:
            return out;  // central generators bracket to zero
    }
}

Element generator_bracket(const AlgebraParams& params, const BasisGen& a, const BasisGen& b) {
    validate_generator(params, a);
    validate_generator(params, b);
    if (is_central(a.kind) || is_central(b.kind)) return Element{};
    if (kind_rank(a.kind) <= kind_rank(b.kind)) return ordered_generator_bracket(params, a, b);
    // [a,b] = -(-1)^{|a||b|} [b,a]
    Element swapped = ordered_generator_bracket(params, b, a);
    if (a.parity() == 1 && b.parity() == 1) return swapped;
    return -swapped;
}

}  // namespace

Element bracket(const AlgebraParams& params, const Element& x, const Element& y) {
    if (params.strict_grading) {
        if (!x.homogeneous_parity() || !y.homogeneous_parity())
            throw GradingError("bracket requires homogeneous arguments in strict mode");
    }
    Element out;
    for (const auto& [gx, cx] : x.terms()) {
        if (is_central(gx.kind)) continue;
        for (const auto& [gy, cy] : y.terms()) {
            if (is_central(gy.kind)) continue;
            Element gb = generator_bracket(params, gx, gy);
            if (gb.is_zero()) continue;
            out = out + gb * (cx * cy);
        }
    }
    return out;
}

Element super_jacobiator(const AlgebraParams& params, const Element& x, const Element& y,
                         const Element& z) {
    auto px = x.homogeneous_parity();
    auto py = y.homogeneous_parity();
    auto pz = z.homogeneous_parity();
    if (!px || !py || !pz)
        throw GradingError("super_jacobiator requires homogeneous arguments");

    auto sign = [](int p, int q) { return (p * q) % 2 == 0 ? Rational(1) : Rational(-1); };

    Element total = bracket(params, x, bracket(params, y, z)) * CScalar(sign(*px, *pz));
    total = total + bracket(params, y, bracket(params, z, x)) * CScalar(sign(*py, *px));
    total = total + bracket(params, z, bracket(params, x, y)) * CScalar(sign(*pz, *py));
    return total;
}

std::vector<BasisGen> generator_window(const AlgebraParams& params, HalfInt window) {
    std::vector<BasisGen> gens;
    for (std::int64_t n = -window.twice / 2; n <= window.twice / 2; ++n) {
        gens.push_back(genL(n));
        gens.push_back(genG(n));
    }
    // P/H modes: r = l + k, k integer, with |r| <= window
    const std::int64_t w2 = window.twice;
    const std::int64_t e2 = params.ell.twice;
    auto floor2 = [](std::int64_t a) { return a >= 0 ? a / 2 : (a - 1) / 2; };
    auto ceil2 = [](std::int64_t a) { return a >= 0 ? (a + 1) / 2 : a / 2; };
    for (std::int64_t k = ceil2(-w2 - e2); k <= floor2(w2 - e2); ++k) {
        HalfInt r{e2 + 2 * k};
        gens.push_back(genP(r));
        gens.push_back(genH(r));
    }
    gens.push_back(genC1());
    gens.push_back(genC2());
    std::sort(gens.begin(), gens.end());
    return gens;
}

JacobiReport verify_jacobi_window(const AlgebraParams& params, HalfInt window) {
    const std::vector<BasisGen> gens = generator_window(params, window);
    const size_t n = gens.size();

    std::vector<std::array<size_t, 3>> triples;
    triples.reserve(n * n * n / 6);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) triples.push_back({i, j, k});

    auto run_range = [&](size_t lo, size_t hi) {
        std::vector<JacobiFailure> fails;
        for (size_t t = lo; t < hi; ++t) {
            auto [i, j, k] = triples[t];
            Element res = super_jacobiator(params, Element::generator(gens[i]),
                                           Element::generator(gens[j]),
                                           Element::generator(gens[k]));
            if (!res.is_zero()) fails.push_back({gens[i], gens[j], gens[k], std::move(res)});
        }
        return fails;
    };

    JacobiReport report;
    report.checked = triples.size();
    const size_t nthreads = worker_count(triples.size());
    if (nthreads <= 1) {
        report.failures = run_range(0, triples.size());
        return report;
    }
    std::vector<std::future<std::vector<JacobiFailure>>> futs;
    const size_t chunk = (triples.size() + nthreads - 1) / nthreads;
    for (size_t lo = 0; lo < triples.size(); lo += chunk) {
        size_t hi = std::min(lo + chunk, triples.size());
        futs.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    for (auto& f : futs) {
        auto part = f.get();
        report.failures.insert(report.failures.end(), part.begin(), part.end());
    }
    return report;
}

}  // namespace sgca
