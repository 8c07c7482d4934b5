#pragma once

#include <optional>
#include <vector>

#include "seljac/curve.hpp"
#include "seljac/linalg.hpp"
#include "seljac/series.hpp"

namespace seljac {

/// Monomial basis of L(m * infinity): x^i y^j with d i + n j <= m, j < d,
/// sorted by pole order (all orders distinct since gcd(d, n) = 1).
struct RRBasis {
    int m = 0;
    std::vector<std::pair<int, int>> monomials;  // (i, j)

    size_t size() const { return monomials.size(); }
};

inline RRBasis rr_basis(const CurvePtr& curve, int m) {
    if (m < 0) fail(errc::bad_input, "pole bound must be nonnegative");
    RRBasis b;
    b.m = m;
    std::vector<std::pair<int, std::pair<int, int>>> tmp;
    for (int j = 0; j < curve->d(); ++j) {
        for (int i = 0; curve->d() * i + curve->n() * j <= m; ++i)
            tmp.emplace_back(curve->d() * i + curve->n() * j, std::make_pair(i, j));
    }
    std::sort(tmp.begin(), tmp.end());
    for (auto& [order, mono] : tmp) b.monomials.push_back(mono);
    return b;
}

/// Local power-series picture at an affine point: x(t) and y(t) to precision
/// N in the uniformizer t (t = x - a unramified, t = y ramified).
struct LocalExpansion {
    CurvePoint center;
    bool ramified = false;
    Series xs, ys;
};

/// Newton expansion at P = (a, c): unramified (c != 0) solves y^d = f(a + t)
/// seeded at c; ramified (c = 0) solves f(x) = t^d seeded at a (f'(a) != 0 by
/// squarefreeness). Verified by substitution into y^d - f(x).
inline LocalExpansion local_expansion(const CurvePtr& curve, const CurvePoint& P, size_t N) {
    if (P.is_infinity()) fail(errc::bad_input, "local expansion at an affine point only");
    if (N < 1) fail(errc::bad_input, "precision must be at least 1");
    const FieldPtr& F = curve->field();
    int d = curve->d();
    FieldElement dinv = F->inv(F->from_int(d));
    LocalExpansion ex{P, F->is_zero(P.y()), Series(F, N), Series(F, N)};
    if (!ex.ramified) {
        // x = a + t, y = (f(a+t))^(1/d) by Newton iteration from y0 = c
        Series xs = Series::constant(F, P.x(), N);
        if (N > 1) xs.set_coeff(1, F->one());
        Series g = Series::eval_poly(curve->f(), xs);
        Series y = Series::constant(F, P.y(), N);
        for (size_t it = 0; it < 2 * N + 4; ++it) {
            Series err = y.pow(d) - g;
            if (err.is_zero()) break;
            Series deriv = F->from_int(d) * y.pow(d - 1);
            y = y - err * deriv.inverse();
        }
        if (!(y.pow(d) - g).is_zero())
            fail(errc::bad_input, "newton iteration failed to converge (internal)");
        ex.xs = xs;
        ex.ys = y;
    } else {
        // y = t, x solves f(x) = t^d from x0 = a
        Series td = Series::t(F, N).pow(d);
        Series x = Series::constant(F, P.x(), N);
        Poly fprime = curve->f().derivative();
        for (size_t it = 0; it < 2 * N + 4; ++it) {
            Series err = Series::eval_poly(curve->f(), x) - td;
            if (err.is_zero()) break;
            Series deriv = Series::eval_poly(fprime, x);
            x = x - err * deriv.inverse();
        }
        if (!(Series::eval_poly(curve->f(), x) - td).is_zero())
            fail(errc::bad_input, "newton iteration failed to converge (internal)");
        ex.xs = x;
        ex.ys = Series::t(F, N);
    }
    return ex;
}

/// h(x(t), y(t)) as a truncated series
inline Series evaluate_on_expansion(const CurveFunction& h, const LocalExpansion& ex) {
    const FieldPtr& F = h.curve()->field();
    size_t N = ex.xs.precision();
    Series acc(F, N);
    Series ypow = Series::constant(F, F->one(), N);
    for (int j = 0; j < h.curve()->d(); ++j) {
        if (!h.part(j).is_zero()) acc = acc + Series::eval_poly(h.part(j), ex.xs) * ypow;
        ypow = ypow * ex.ys;
    }
    return acc;
}

/// v_P(h) for a nonzero reduced-form function. At infinity the pole orders of
/// the terms are pairwise distinct, so the valuation is read off directly; at
/// affine points the local expansion is computed past the a-priori zero bound
/// d * sum(deg s_j) + n (d-1) + d.
inline long long valuation_at(const CurvePtr& curve, const CurvePoint& P, const CurveFunction& h) {
    if (h.is_zero()) fail(errc::zero_function, "valuation of the zero function");
    if (P.is_infinity()) return h.infinity_valuation();
    long long bound = curve->d();
    for (int j = 0; j < curve->d(); ++j)
        if (!h.part(j).is_zero()) bound += static_cast<long long>(curve->d()) * h.part(j).degree();
    bound += static_cast<long long>(curve->n()) * (curve->d() - 1);
    LocalExpansion ex = local_expansion(curve, P, static_cast<size_t>(bound) + 1);
    Series s = evaluate_on_expansion(h, ex);
    long long ord = s.order();
    if (ord < 0) fail(errc::zero_function, "function vanishes past its zero bound (internal)");
    return ord;
}

/// The certificate equation m (P) - m (infty) = div(h): true iff
/// v_infty(h) = -m and v_P(h) = m (degree-0 bookkeeping excludes other zeros).
inline bool verify_certificate(const CurvePtr& curve, const CurvePoint& P, int m,
                               const CurveFunction& h) {
    if (P.is_infinity()) fail(errc::bad_input, "certificate point must be affine");
    if (h.is_zero()) fail(errc::zero_function, "certificate function is zero");
    if (h.infinity_valuation() != -static_cast<long long>(m)) return false;
    return valuation_at(curve, P, h) == static_cast<long long>(m);
}

/// Verdict of the principality search for m ((P) - (infty)).
struct TorsionReport {
    CurvePoint point;
    bool found = false;  // false: ExceedsBound(bound)
    int order = 0;       // valid when found
    int bound = 0;
    RRBasis basis;                          // basis of L(order * infty) when found
    std::vector<FieldElement> certificate;  // coefficients over basis.monomials
    bool verified = false;

    std::optional<CurveFunction> certificate_function;
};

/// Independent torsion oracle: the least m in 2..max_m such that some nonzero
/// h in L(m infty) vanishes to order >= m at P; such h automatically has
/// div(h) = m (P) - m (infty), so m is the exact order of [(P) - (infty)].
inline TorsionReport point_order(const CurvePtr& curve, const CurvePoint& P, int max_m) {
    if (P.is_infinity()) fail(errc::bad_input, "the base point is the group identity");
    if (max_m < 2) fail(errc::bad_input, "order bound must be at least 2");
    const FieldPtr& F = curve->field();
    TorsionReport rep;
    rep.point = P;
    rep.bound = max_m;

    size_t prec = static_cast<size_t>(max_m + curve->d() + curve->n());
    LocalExpansion ex = local_expansion(curve, P, prec);
    RRBasis full = rr_basis(curve, max_m);
    // series of every monomial x^i y^j, in basis order
    std::vector<Series> mono_series;
    mono_series.reserve(full.size());
    for (auto& [i, j] : full.monomials)
        mono_series.push_back(ex.xs.pow(i) * ex.ys.pow(j));

    auto pole_order = [&](std::pair<int, int> mono) {
        return curve->d() * mono.first + curve->n() * mono.second;
    };

    for (int m = 2; m <= max_m; ++m) {
        size_t cols = 0;
        while (cols < full.size() && pole_order(full.monomials[cols]) <= m) ++cols;
        linalg::Matrix A(static_cast<size_t>(m), std::vector<FieldElement>(cols, F->zero()));
        for (size_t c = 0; c < cols; ++c)
            for (int r = 0; r < m; ++r) A[static_cast<size_t>(r)][c] = mono_series[c].coeff(static_cast<size_t>(r));
        auto kernel = linalg::nullspace_vector(F, A);
        if (!kernel) continue;
        rep.found = true;
        rep.order = m;
        rep.basis = rr_basis(curve, m);
        rep.certificate = *kernel;
        // assemble h = sum coeff * x^i y^j in reduced form
        CurveFunction h = CurveFunction::zero(curve);
        std::vector<Poly> parts = h.parts();
        for (size_t c = 0; c < cols; ++c) {
            if (F->is_zero((*kernel)[c])) continue;
            auto [i, j] = rep.basis.monomials[c];
            parts[static_cast<size_t>(j)] =
                parts[static_cast<size_t>(j)] + Poly::monomial(F, i, (*kernel)[c]);
        }
        CurveFunction cert(curve, std::move(parts));
        rep.verified = verify_certificate(curve, P, m, cert);
        rep.certificate_function = std::move(cert);
        return rep;
    }
    return rep;  // ExceedsBound(max_m)
}

}  // namespace seljac
