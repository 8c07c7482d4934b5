#pragma once

#include <array>
#include <vector>

#include "seljac/poly.hpp"

namespace seljac {

/// A point of P^1: a field element or the point at infinity.
class ProjPoint {
public:
    ProjPoint() = default;  // infinity
    static ProjPoint infinity() { return ProjPoint(); }
    static ProjPoint finite(FieldElement z) {
        ProjPoint p;
        p.inf_ = false;
        p.z_ = std::move(z);
        return p;
    }

    bool is_infinity() const { return inf_; }
    const FieldElement& z() const {
        if (inf_) fail(errc::bad_input, "infinity has no affine coordinate");
        return z_;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.z_ == b.z_;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

private:
    bool inf_ = true;
    FieldElement z_;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0. The stored representative is
/// scale-normalized: the first nonzero of (a, b, c, d) equals 1, unless the
/// map was built with explicit scaling.
class MobiusMap {
public:
    MobiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d,
              bool normalize = true)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        const FieldPtr& F = a_.owner();
        if (F->is_zero(a_ * d_ - b_ * c_))
            fail(errc::bad_input, "degenerate map: ad - bc = 0");
        if (normalize) {
            FieldElement s = F->zero();
            for (const FieldElement* x : {&a_, &b_, &c_, &d_}) {
                if (!F->is_zero(*x)) {
                    s = F->inv(*x);
                    break;
                }
            }
            a_ = s * a_;
            b_ = s * b_;
            c_ = s * c_;
            d_ = s * d_;
        }
    }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }

    ProjPoint operator()(const ProjPoint& p) const {
        const FieldPtr& F = a_.owner();
        if (p.is_infinity()) {
            if (F->is_zero(c_)) return ProjPoint::infinity();
            return ProjPoint::finite(F->div(a_, c_));
        }
        FieldElement den = c_ * p.z() + d_;
        if (F->is_zero(den)) return ProjPoint::infinity();
        return ProjPoint::finite(F->div(a_ * p.z() + b_, den));
    }

    MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

    MobiusMap compose(const MobiusMap& o) const {  // this after o
        return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                         c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    }

    /// scale-equality (both normalized on construction)
    friend bool operator==(const MobiusMap& x, const MobiusMap& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

private:
    FieldElement a_, b_, c_, d_;
};

inline ProjPoint apply_mobius(const MobiusMap& m, const ProjPoint& z) { return m(z); }

/// Cross-ratio ((z3-z1)(z4-z2)) / ((z3-z2)(z4-z1)) with the usual limit
/// conventions at infinity. The convention is pinned so that
/// cross_ratio(1, e, e^2, e^3) = ((e^2-1)(e^3-e)) / ((e^2-e)(e^3-1)).
inline ProjPoint cross_ratio(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                             const ProjPoint& z4) {
    std::array<const ProjPoint*, 4> zs{&z1, &z2, &z3, &z4};
    int inf_count = 0;
    const FieldPtr* Fp = nullptr;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j)
            if (*zs[static_cast<size_t>(i)] == *zs[static_cast<size_t>(j)])
                fail(errc::repeated_point, "cross-ratio needs four distinct points");
        if (zs[static_cast<size_t>(i)]->is_infinity())
            ++inf_count;
        else
            Fp = &zs[static_cast<size_t>(i)]->z().owner();
    }
    const FieldPtr& F = *Fp;
    // factors: num (z3-z1)(z4-z2), den (z3-z2)(z4-z1); a factor with infinity
    // cancels against its partner on the other side
    auto factor = [&](const ProjPoint& u, const ProjPoint& v) -> std::pair<bool, FieldElement> {
        // (u - v); bool true when the factor is "infinite" and to be dropped
        if (u.is_infinity() || v.is_infinity()) return {true, F->one()};
        return {false, u.z() - v.z()};
    };
    auto [i1, n1] = factor(z3, z1);
    auto [i2, n2] = factor(z4, z2);
    auto [i3, d3] = factor(z3, z2);
    auto [i4, d4] = factor(z4, z1);
    FieldElement num = n1 * n2, den = d3 * d4;
    (void)inf_count;
    // each infinite point appears once among the numerator factors and once
    // among the denominator factors; both are dropped
    if (F->is_zero(den)) return ProjPoint::infinity();
    return ProjPoint::finite(F->div(num, den));
}

namespace detail {

/// the map sending (p1, p2, p3) to (0, 1, infinity), as a matrix
inline MobiusMap normal_form(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                             const FieldPtr& F) {
    if (p1.is_infinity())  // z -> (p2 - p3) / (z - p3)
        return MobiusMap(F->zero(), p2.z() - p3.z(), F->one(), -p3.z(), false);
    if (p2.is_infinity())  // z -> (z - p1) / (z - p3)
        return MobiusMap(F->one(), -p1.z(), F->one(), -p3.z(), false);
    if (p3.is_infinity())  // z -> (z - p1) / (p2 - p1)
        return MobiusMap(F->one(), -p1.z(), F->zero(), p2.z() - p1.z(), false);
    FieldElement q = p2.z() - p3.z();
    FieldElement r = p2.z() - p1.z();
    return MobiusMap(q, -p1.z() * q, r, -p3.z() * r, false);
}

}  // namespace detail

/// The unique linear fractional transformation sending three distinct source
/// points to three distinct target points; verified by application.
inline MobiusMap mobius_through(const std::array<ProjPoint, 3>& src,
                                const std::array<ProjPoint, 3>& tgt) {
    const FieldPtr* Fp = nullptr;
    for (auto& p : src)
        if (!p.is_infinity()) Fp = &p.z().owner();
    for (auto& p : tgt)
        if (!p.is_infinity()) Fp = &p.z().owner();
    if (!Fp) fail(errc::bad_input, "cannot infer the field");
    const FieldPtr& F = *Fp;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (src[static_cast<size_t>(i)] == src[static_cast<size_t>(j)])
                fail(errc::repeated_point, "source points must be distinct");
            if (tgt[static_cast<size_t>(i)] == tgt[static_cast<size_t>(j)])
                fail(errc::repeated_point, "target points must be distinct");
        }
    MobiusMap ns = detail::normal_form(src[0], src[1], src[2], F);
    MobiusMap ntgt = detail::normal_form(tgt[0], tgt[1], tgt[2], F);
    MobiusMap m = ntgt.inverse().compose(ns);
    for (int i = 0; i < 3; ++i) {
        if (m(src[static_cast<size_t>(i)]) != tgt[static_cast<size_t>(i)])
            fail(errc::bad_input, "interpolation verification failed (internal)");
    }
    return m;
}

/// (t-1)^deg(h) * h(1/(t-1)): the substitution x = 1/(t-1) cleared of
/// denominators, used by the order-n uniqueness argument for small n.
inline Poly invert_substitution(const Poly& h) {
    if (h.is_zero()) return h;
    const FieldPtr& F = h.field();
    Poly tm1 = Poly::from_ints(F, {-1, 1});
    Poly acc(F);
    int deg = h.degree();
    for (int k = 0; k <= deg; ++k)
        acc = acc + h.coeff(k) * tm1.pow(deg - k);
    return acc;
}

/// Rationality obstruction: a fractional-linear map over K sending eps^i
/// (eps a primitive n-th root of unity) to Q(zeta_m)-rational values for
/// i = 0..3 forces r = cross_ratio(1, eps, eps^2, eps^3) into
/// Q(zeta_n) \cap Q(zeta_m) = Q when gcd(n, m) = 1. The verdict is
/// "obstructed" iff r is irrational, which rules such maps out.
struct LemmaGenReport {
    int n = 0;
    u64 m = 0;
    FieldElement r;            // over Q(zeta_n)
    int minpoly_degree = 0;    // degree of r over Q
    bool obstructed = false;   // r not in Q
};

inline LemmaGenReport lemma_gen_check(int n, u64 m) {
    if (n < 3) fail(errc::bad_input, "need n >= 3");
    if (std::gcd(static_cast<long long>(n), static_cast<long long>(m)) != 1)
        fail(errc::bad_input, "the obstruction needs gcd(n, m) = 1");
    if (n == 3) fail(errc::degenerate_quadruple, "eps^3 = 1 repeats the first point");
    auto F = Field::cyclotomic(n);
    FieldElement eps = primitive_root_of_unity(F, static_cast<u64>(n));
    auto pp = [&](long long e) { return ProjPoint::finite(F->pow(eps, e)); };
    ProjPoint r = cross_ratio(pp(0), pp(1), pp(2), pp(3));
    if (r.is_infinity()) fail(errc::bad_input, "cross-ratio degenerated (internal)");
    LemmaGenReport rep;
    rep.n = n;
    rep.m = m;
    rep.r = r.z();
    rep.minpoly_degree = static_cast<int>(minimal_polynomial_coeffs(r.z()).size()) - 1;
    rep.obstructed = rep.minpoly_degree > 1;
    return rep;
}

}  // namespace seljac
