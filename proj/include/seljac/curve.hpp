#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "seljac/poly.hpp"

namespace seljac {

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

/// A point of the smooth projective model: the single point at infinity or an
/// affine point (a, c) with c^d = f(a).
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(FieldElement a, FieldElement c) {
        CurvePoint p;
        p.inf_ = false;
        p.x_ = std::move(a);
        p.y_ = std::move(c);
        return p;
    }

    bool is_infinity() const { return inf_; }
    const FieldElement& x() const {
        if (inf_) fail(errc::bad_input, "infinity has no x-coordinate");
        return x_;
    }
    const FieldElement& y() const {
        if (inf_) fail(errc::bad_input, "infinity has no y-coordinate");
        return y_;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

private:
    bool inf_ = true;
    FieldElement x_, y_;
};

/// canonical point order: infinity first, then lexicographic on (x, y)
struct PointLess {
    bool operator()(const CurvePoint& a, const CurvePoint& b) const {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
        const FieldPtr& F = a.x().owner();
        int cx = F->cmp(a.x(), b.x());
        if (cx != 0) return cx < 0;
        return F->cmp(a.y(), b.y()) < 0;
    }
};

/// Finite formal integer combination of curve points.
class Divisor {
public:
    Divisor() = default;

    void add(const CurvePoint& p, long long c) {
        if (c == 0) return;
        auto it = m_.find(p);
        if (it == m_.end()) {
            m_.emplace(p, c);
        } else {
            it->second += c;
            if (it->second == 0) m_.erase(it);
        }
    }

    long long coeff(const CurvePoint& p) const {
        auto it = m_.find(p);
        return it == m_.end() ? 0 : it->second;
    }

    long long degree() const {
        long long d = 0;
        for (auto& [p, c] : m_) d += c;
        return d;
    }

    bool empty() const { return m_.empty(); }
    const std::map<CurvePoint, long long, PointLess>& support() const { return m_; }

    Divisor scaled(long long k) const {
        Divisor r;
        if (k == 0) return r;
        for (auto& [p, c] : m_) r.add(p, c * k);
        return r;
    }

    friend Divisor operator+(const Divisor& a, const Divisor& b) {
        Divisor r = a;
        for (auto& [p, c] : b.m_) r.add(p, c);
        return r;
    }
    friend Divisor operator-(const Divisor& a, const Divisor& b) {
        Divisor r = a;
        for (auto& [p, c] : b.m_) r.add(p, -c);
        return r;
    }
    friend bool operator==(const Divisor& a, const Divisor& b) {
        if (a.m_.size() != b.m_.size()) return false;
        auto ia = a.m_.begin();
        auto ib = b.m_.begin();
        for (; ia != a.m_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first) || ia->second != ib->second) return false;
        }
        return true;
    }

private:
    std::map<CurvePoint, long long, PointLess> m_;
};

/// The validated superelliptic model y^d = f(x): f monic squarefree of degree
/// n, gcd(n, d) = 1, 2 <= d < n, characteristic prime to d, and the field
/// contains a primitive d-th root of unity (carried as zeta).
class Curve : public std::enable_shared_from_this<Curve> {
public:
    static CurvePtr make(FieldPtr field, int d, int n, Poly f) {
        if (!field->same(*f.field())) fail(errc::mixed_fields, "f is not over the given field");
        if (d < 2 || n <= d) fail(errc::degree_order, "need 2 <= d < n");
        if (f.degree() != n) fail(errc::degree_order, "deg f must equal n");
        if (std::gcd(static_cast<long long>(n), static_cast<long long>(d)) != 1)
            fail(errc::not_coprime, "gcd(n, d) must be 1");
        if (field->characteristic() != 0 && static_cast<u64>(d) % field->characteristic() == 0)
            fail(errc::bad_characteristic, "characteristic divides d");
        if (!f.is_monic()) fail(errc::not_monic, "f must be monic");
        if (!is_squarefree(f)) fail(errc::not_squarefree, "f has repeated roots");
        FieldElement zeta;
        try {
            zeta = primitive_root_of_unity(field, static_cast<u64>(d));
        } catch (const error& e) {
            if (e.code() == errc::no_such_root)
                fail(errc::no_dth_root_of_unity,
                     "field lacks mu_d; enlarge the field: " + std::string(e.what()));
            throw;
        }
        auto c = std::shared_ptr<Curve>(new Curve());
        c->field_ = std::move(field);
        c->d_ = d;
        c->n_ = n;
        c->f_ = std::move(f);
        c->zeta_ = std::move(zeta);
        c->genus_ = (n - 1) * (d - 1) / 2;
        c->check_pole_orders();
        return c;
    }

    const FieldPtr& field() const { return field_; }
    int d() const { return d_; }
    int n() const { return n_; }
    const Poly& f() const { return f_; }
    const FieldElement& zeta() const { return zeta_; }
    int genus() const { return genus_; }

    bool on_curve(const FieldElement& a, const FieldElement& c) const {
        return field_->pow(c, d_) == f_.eval(a);
    }

    CurvePoint point(const FieldElement& a, const FieldElement& c) const {
        if (!on_curve(a, c)) fail(errc::bad_input, "(a, c) does not satisfy c^d = f(a)");
        return CurvePoint::affine(a, c);
    }

    /// All points of the curve with the given x-coordinate over the curve's
    /// own field: one ramified point when f(a) = 0, otherwise 0 or d points.
    std::vector<CurvePoint> lift_x(const FieldElement& a) const {
        FieldElement b = f_.eval(a);
        if (field_->is_zero(b)) return {CurvePoint::affine(a, field_->zero())};
        RootResult r = dth_root(field_, b, static_cast<u64>(d_));
        if (r.status == RootStatus::unknown)
            fail(errc::undecidable_root, "d-th root of f(a) undecidable over this field");
        if (r.status == RootStatus::no_root) return {};
        std::set<CurvePoint, PointLess> pts;
        FieldElement c = r.value;
        for (int i = 0; i < d_; ++i) {
            pts.insert(CurvePoint::affine(a, c));
            c = c * zeta_;
        }
        return {pts.begin(), pts.end()};
    }

    /// omega^i P = (a, zeta^i c); infinity and (w, 0) are fixed
    CurvePoint omega(const CurvePoint& p, int i = 1) const {
        if (p.is_infinity()) return p;
        long long e = i % d_;
        if (e < 0) e += d_;
        return CurvePoint::affine(p.x(), field_->pow(zeta_, e) * p.y());
    }

    /// the mu_d-orbit of P, deduplicated (size 1 for fixed points, else d)
    std::vector<CurvePoint> omega_orbit(const CurvePoint& p) const {
        std::set<CurvePoint, PointLess> pts;
        for (int i = 0; i < d_; ++i) pts.insert(omega(p, i));
        return {pts.begin(), pts.end()};
    }

    Divisor omega_divisor(const Divisor& D, int i = 1) const {
        Divisor r;
        for (auto& [p, c] : D.support()) r.add(omega(p, i), c);
        return r;
    }

    /// div(F(x)) for a nonconstant polynomial in x, per the orbit formula:
    /// sum_j c_j ( sum_i omega^i P_j  -  d (infty) ). Requires the roots of F
    /// to be completely known over the curve's field and all of them liftable.
    Divisor div_of_x_poly(const Poly& F, const std::vector<FieldElement>& candidates = {}) const {
        if (F.is_zero() || F.degree() < 1)
            fail(errc::bad_input, "div_of_x_poly needs a nonconstant polynomial");
        RootsResult roots = roots_in_field(F, candidates);
        if (!roots.complete)
            fail(errc::incomplete_factorization, "roots of F not completely determined");
        long long total = 0;
        for (auto& [a, m] : roots.roots) total += m;
        if (total != F.degree())
            fail(errc::incomplete_factorization, "F does not split over the curve's field");
        return divisor_from_x_roots(roots.roots);
    }

    /// divisor sum_j c_j div(x - a_j) from explicit abscissa data
    Divisor divisor_from_x_roots(const std::vector<std::pair<FieldElement, int>>& roots) const {
        Divisor D;
        for (auto& [a, m] : roots) {
            std::vector<CurvePoint> lifts = lift_x(a);
            if (lifts.empty())
                fail(errc::incomplete_factorization,
                     "a root of F does not lift to a rational point");
            if (lifts.size() == 1 && field_->is_zero(lifts[0].y())) {
                D.add(lifts[0], static_cast<long long>(m) * d_);
            } else {
                for (auto& p : lifts) D.add(p, m);
            }
            D.add(CurvePoint::infinity(), -static_cast<long long>(m) * d_);
        }
        return D;
    }

private:
    Curve() = default;

    // pole orders d*i + n*j of the monomial functions x^i y^j (j < d) are
    // pairwise distinct; asserted exhaustively up to 4g at construction
    void check_pole_orders() const {
        std::set<int> seen;
        int bound = 4 * genus_;
        for (int j = 0; j < d_; ++j) {
            for (int i = 0; d_ * i + n_ * j <= bound; ++i) {
                int order = d_ * i + n_ * j;
                if (!seen.insert(order).second)
                    fail(errc::bad_input, "pole order collision (internal invariant)");
            }
        }
    }

    FieldPtr field_;
    int d_ = 0, n_ = 0;
    Poly f_;
    FieldElement zeta_;
    int genus_ = 0;
};

inline CurvePtr new_curve(FieldPtr field, int d, int n, Poly f) {
    return Curve::make(std::move(field), d, n, std::move(f));
}

/// A function on the curve in the canonical reduced form sum_{j<d} s_j(x) y^j.
class CurveFunction {
public:
    CurveFunction(CurvePtr curve, std::vector<Poly> s) : curve_(std::move(curve)), s_(std::move(s)) {
        if (static_cast<int>(s_.size()) != curve_->d())
            fail(errc::bad_input, "reduced form needs exactly d coefficient polynomials");
    }

    static CurveFunction zero(const CurvePtr& c) {
        std::vector<Poly> s(static_cast<size_t>(c->d()), Poly(c->field()));
        return CurveFunction(c, std::move(s));
    }

    /// a polynomial in x alone
    static CurveFunction from_x_poly(const CurvePtr& c, Poly v) {
        auto fn = zero(c);
        fn.s_[0] = std::move(v);
        return fn;
    }

    /// y - v(x), the certificate shape of the order-n criterion
    static CurveFunction y_minus(const CurvePtr& c, const Poly& v) {
        auto fn = zero(c);
        fn.s_[0] = -v;
        fn.s_[1] = Poly::constant(c->field(), c->field()->one());
        return fn;
    }

    const CurvePtr& curve() const { return curve_; }
    const std::vector<Poly>& parts() const { return s_; }
    const Poly& part(int j) const { return s_[static_cast<size_t>(j)]; }

    bool is_zero() const {
        for (auto& p : s_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// twist by omega: h(x, zeta^i y), still in reduced form
    CurveFunction omega_pullback(int i = 1) const {
        const FieldPtr& F = curve_->field();
        std::vector<Poly> t = s_;
        for (int j = 0; j < curve_->d(); ++j) {
            long long e = (static_cast<long long>(i) * j) % curve_->d();
            if (e < 0) e += curve_->d();
            t[static_cast<size_t>(j)] = F->pow(curve_->zeta(), e) * t[static_cast<size_t>(j)];
        }
        return CurveFunction(curve_, std::move(t));
    }

    /// v_infinity(h) = -max over nonzero terms of (d deg s_j + n j); the pole
    /// orders of distinct terms are pairwise distinct since gcd(d, n) = 1.
    long long infinity_valuation() const {
        if (is_zero()) fail(errc::zero_function, "valuation of the zero function");
        long long best = -1;
        for (int j = 0; j < curve_->d(); ++j) {
            if (s_[static_cast<size_t>(j)].is_zero()) continue;
            long long pole = static_cast<long long>(curve_->d()) * s_[static_cast<size_t>(j)].degree() +
                             static_cast<long long>(curve_->n()) * j;
            best = std::max(best, pole);
        }
        return -best;
    }

    friend CurveFunction operator+(const CurveFunction& a, const CurveFunction& b) {
        std::vector<Poly> t = a.s_;
        for (size_t j = 0; j < t.size(); ++j) t[j] = t[j] + b.s_[j];
        return CurveFunction(a.curve_, std::move(t));
    }

    friend CurveFunction operator*(const FieldElement& s, const CurveFunction& a) {
        std::vector<Poly> t = a.s_;
        for (auto& p : t) p = s * p;
        return CurveFunction(a.curve_, std::move(t));
    }

private:
    CurvePtr curve_;
    std::vector<Poly> s_;
};

/// F(x) = num/den with div(F) = sum_i omega^i D: the omega-symmetrization of
/// any degree-0 divisor is principal, with an explicit x-polynomial witness.
struct TraceWitness {
    Poly num, den;
    Divisor divisor;  // the verified divisor of num/den
};

/// Constructive witness that sum_i omega^i D is principal for deg-0 D:
/// F(x) = prod_j (x - a_j)^(c_j) over the affine support (infinity folded out).
inline TraceWitness trace_principal_witness(const CurvePtr& curve, const Divisor& D) {
    if (D.degree() != 0) fail(errc::bad_input, "witness requires a degree-0 divisor");
    const FieldPtr& F = curve->field();
    // group coefficients by abscissa
    std::vector<std::pair<FieldElement, long long>> abscissas;
    for (auto& [p, c] : D.support()) {
        if (p.is_infinity()) continue;
        bool found = false;
        for (auto& [a, k] : abscissas) {
            if (a == p.x()) {
                k += c;
                found = true;
                break;
            }
        }
        if (!found) abscissas.emplace_back(p.x(), c);
    }
    Poly num = Poly::constant(F, F->one());
    Poly den = Poly::constant(F, F->one());
    std::vector<std::pair<FieldElement, int>> pos, negs;
    for (auto& [a, k] : abscissas) {
        if (k == 0) continue;
        Poly lin(F, {F->neg(a), F->one()});
        if (k > 0) {
            num = num * lin.pow(static_cast<int>(k));
            pos.emplace_back(a, static_cast<int>(k));
        } else {
            den = den * lin.pow(static_cast<int>(-k));
            negs.emplace_back(a, static_cast<int>(-k));
        }
    }
    // verify against the omega-symmetrization of D
    Divisor expect;
    for (int i = 0; i < curve->d(); ++i) expect = expect + curve->omega_divisor(D, i);
    Divisor got;
    if (!pos.empty()) got = got + curve->divisor_from_x_roots(pos);
    if (!negs.empty()) got = got - curve->divisor_from_x_roots(negs);
    if (!(got == expect))
        fail(errc::bad_input, "trace witness verification failed (internal)");
    return TraceWitness{std::move(num), std::move(den), std::move(got)};
}

/// The renormalization z -> lambda z + mu with mu = a0, lambda = a0 - a1:
/// (z, w) on the new curve maps to (lambda z + mu, rho w) on the old one,
/// and the preimages of a0, a1 get abscissas 0, -1.
struct PointMap {
    FieldElement lambda, mu, rho;  // rho^d = lambda^n

    CurvePoint to_original(const CurvePtr& original, const CurvePoint& p) const {
        if (p.is_infinity()) return p;
        return original->point(lambda * p.x() + mu, rho * p.y());
    }

    CurvePoint from_original(const CurvePtr& renormalized, const CurvePoint& p) const {
        if (p.is_infinity()) return p;
        const FieldPtr& F = renormalized->field();
        return renormalized->point(F->div(p.x() - mu, lambda), F->div(p.y(), rho));
    }
};

inline std::pair<CurvePtr, PointMap> renormalize_two_points(const CurvePtr& curve,
                                                            const FieldElement& a0,
                                                            const FieldElement& a1) {
    const FieldPtr& F = curve->field();
    if (a0 == a1) fail(errc::repeated_point, "renormalization needs two distinct abscissas");
    FieldElement lambda = a0 - a1;
    FieldElement mu = a0;
    FieldElement ln = F->pow(lambda, curve->n());
    RootResult rho = dth_root(F, ln, static_cast<u64>(curve->d()));
    if (rho.status != RootStatus::found)
        fail(errc::root_not_in_field,
             "lambda^n has no d-th root in the field; enlarge the field");
    Poly ftilde = F->inv(ln) * curve->f().compose_linear(lambda, mu);
    CurvePtr tilde = Curve::make(F, curve->d(), curve->n(), ftilde);
    return {tilde, PointMap{lambda, mu, rho.value}};
}

}  // namespace seljac
