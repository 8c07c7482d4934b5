#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "seljac/field.hpp"
#include "seljac/linalg.hpp"

namespace seljac {

/// Dense univariate polynomial over a Field, coefficients lowest degree
/// first, no trailing zeros. The zero polynomial has an empty coefficient
/// sequence; degree() returns -1 for it as a sentinel only.
class Poly {
public:
    Poly() = default;

    explicit Poly(FieldPtr f) : field_(std::move(f)) {}

    Poly(FieldPtr f, std::vector<FieldElement> coeffs)
        : field_(std::move(f)), c_(std::move(coeffs)) {
        for (auto& x : c_) field_->check_owner(x);
        trim();
    }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }

    static Poly constant(FieldPtr f, FieldElement v) {
        std::vector<FieldElement> c{std::move(v)};
        return Poly(std::move(f), std::move(c));
    }

    static Poly x(const FieldPtr& f) {
        return Poly(f, {f->zero(), f->one()});
    }

    static Poly monomial(const FieldPtr& f, int deg, FieldElement coeff) {
        std::vector<FieldElement> c(static_cast<size_t>(deg) + 1, f->zero());
        c.back() = std::move(coeff);
        return Poly(f, std::move(c));
    }

    /// convenience: coefficients given as small integers, lowest first
    static Poly from_ints(const FieldPtr& f, const std::vector<long>& v) {
        std::vector<FieldElement> c;
        c.reserve(v.size());
        for (long x : v) c.push_back(f->from_int(x));
        return Poly(f, std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    FieldElement coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
        return c_[static_cast<size_t>(i)];
    }

    FieldElement lc() const {
        if (is_zero()) fail(errc::bad_input, "leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && field_->eq(lc(), field_->one()); }

    FieldElement eval(const FieldElement& x) const {
        FieldElement r = field_->zero();
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        std::vector<FieldElement> r;
        for (size_t i = 1; i < c_.size(); ++i)
            r.push_back(c_[i] * field_->from_int(static_cast<long>(i)));
        return Poly(field_, std::move(r));
    }

    Poly operator-() const {
        std::vector<FieldElement> r;
        r.reserve(c_.size());
        for (auto& x : c_) r.push_back(field_->neg(x));
        return Poly(field_, std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same(b);
        std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(a.field_, std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_same(b);
        std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(a.field_, std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_->zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.field_->is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(a.field_, std::move(r));
    }

    friend Poly operator*(const FieldElement& s, const Poly& a) {
        std::vector<FieldElement> r;
        r.reserve(a.c_.size());
        for (auto& x : a.c_) r.push_back(s * x);
        return Poly(a.field_, std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const {
        if (e < 0) fail(errc::bad_input, "negative polynomial power");
        Poly r = constant(field_, field_->one());
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// f(x + a)
    Poly shift(const FieldElement& a) const { return compose_linear(field_->one(), a); }

    /// f(lambda x + mu) by Horner over Poly
    Poly compose_linear(const FieldElement& lambda, const FieldElement& mu) const {
        Poly lin(field_, {mu, lambda});
        Poly r(field_);
        for (size_t i = c_.size(); i-- > 0;) r = r * lin + constant(field_, c_[i]);
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return field_->inv(lc()) * *this;
    }

private:
    void trim() {
        while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
    }
    void check_same(const Poly& o) const {
        if (!field_->same(*o.field_)) fail(errc::mixed_fields, "polynomials over different fields");
    }

    FieldPtr field_;
    std::vector<FieldElement> c_;
};

inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    const FieldPtr& F = a.field();
    std::vector<FieldElement> rem(a.coeffs());
    int db = b.degree();
    FieldElement ilc = F->inv(b.lc());
    auto deg_of = [&](const std::vector<FieldElement>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && F->is_zero(v[static_cast<size_t>(d)])) --d;
        return d;
    };
    int da = deg_of(rem);
    std::vector<FieldElement> quot(
        static_cast<size_t>(std::max(0, da - db + 1)), F->zero());
    while (da >= db) {
        FieldElement c = rem[static_cast<size_t>(da)] * ilc;
        int k = da - db;
        quot[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(k + i)] =
                rem[static_cast<size_t>(k + i)] - c * b.coeff(i);
        da = deg_of(rem);
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

/// monic gcd
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// true iff f has no repeated roots; in characteristic p a vanishing
/// derivative of a nonconstant f means f is a p-th power, hence not
/// squarefree.
inline bool is_squarefree(const Poly& f) {
    if (f.is_zero()) fail(errc::bad_input, "squarefreeness of the zero polynomial");
    if (f.degree() == 0) return true;
    Poly df = f.derivative();
    if (df.is_zero()) return false;
    return gcd(f, df).degree() == 0;
}

/// Res(f, g) as the determinant of the Sylvester matrix, evaluated by
/// fraction-free elimination.
inline FieldElement resultant(const Poly& f, const Poly& g) {
    const FieldPtr& F = f.field();
    if (f.is_zero() || g.is_zero()) return F->zero();
    int n = f.degree(), m = g.degree();
    if (n == 0) return F->pow(f.lc(), m);
    if (m == 0) return F->pow(g.lc(), n);
    size_t size = static_cast<size_t>(n + m);
    linalg::Matrix A(size, std::vector<FieldElement>(size, F->zero()));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) A[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = f.coeff(n - i);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            A[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = g.coeff(m - i);
    return linalg::determinant(F, A);
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f); zero iff f has a repeated
/// root (characteristic 0 or tame cases).
inline FieldElement discriminant(const Poly& f) {
    if (f.degree() < 2) fail(errc::degree_too_small, "discriminant needs degree >= 2");
    const FieldPtr& F = f.field();
    Poly df = f.derivative();
    if (df.is_zero()) return F->zero();
    FieldElement res = resultant(f, df);
    int n = f.degree();
    FieldElement d = F->div(res, f.lc());
    if ((static_cast<long long>(n) * (n - 1) / 2) % 2 != 0) d = F->neg(d);
    return d;
}

struct PolyRoot {
    RootStatus status = RootStatus::no_root;
    Poly value;

    static PolyRoot ok(Poly v) { return {RootStatus::found, std::move(v)}; }
    static PolyRoot none() { return {RootStatus::no_root, {}}; }
    static PolyRoot undecided() { return {RootStatus::unknown, {}}; }
};

/// v with v^d = g when one exists; the monic part is recovered by
/// coefficient recursion from the top and the result is verified by full
/// re-expansion. Unique up to mu_d scaling; any valid representative.
inline PolyRoot poly_dth_root(const Poly& g, int d) {
    if (g.is_zero()) fail(errc::bad_input, "d-th root of the zero polynomial");
    if (d < 1) fail(errc::bad_input, "root index must be positive");
    const FieldPtr& F = g.field();
    if (F->characteristic() != 0 && static_cast<u64>(d) % F->characteristic() == 0)
        fail(errc::bad_characteristic, "characteristic divides the root index");
    if (d == 1) return PolyRoot::ok(g);
    if (g.degree() % d != 0) return PolyRoot::none();
    int e = g.degree() / d;
    RootResult lead = dth_root(F, g.lc(), static_cast<u64>(d));
    if (lead.status == RootStatus::unknown) return PolyRoot::undecided();
    if (lead.status == RootStatus::no_root) return PolyRoot::none();
    Poly G = g.monic();
    // monic d-th root by top-down linear recursion
    std::vector<FieldElement> vc(static_cast<size_t>(e) + 1, F->zero());
    vc[static_cast<size_t>(e)] = F->one();
    Poly v(F, vc);
    FieldElement dinv = F->inv(F->from_int(d));
    for (int k = 1; k <= e; ++k) {
        Poly cur = v.pow(d);
        FieldElement delta = (G.coeff(d * e - k) - cur.coeff(d * e - k)) * dinv;
        v = v + Poly::monomial(F, e - k, delta);
    }
    Poly root = lead.value * v;
    if (root.pow(d) != g) return PolyRoot::none();
    return PolyRoot::ok(root);
}

struct RootsResult {
    std::vector<std::pair<FieldElement, int>> roots;  // (root, multiplicity)
    bool complete = false;
};

namespace detail {

inline int multiplicity_of_root(Poly& f, const FieldElement& a) {
    const FieldPtr& F = f.field();
    Poly lin(F, {F->neg(a), F->one()});
    int mult = 0;
    while (!f.is_zero() && F->is_zero(f.eval(a))) {
        f = divrem(f, lin).first;
        ++mult;
        if (f.degree() < 0) break;
    }
    return mult;
}

}  // namespace detail

/// Roots of f in its own field. Finite fields: exhaustive, complete.
/// Q: rational root theorem on the primitive integer model, complete.
/// Number fields: trial division by the supplied candidates only.
inline RootsResult roots_in_field(const Poly& f,
                                  const std::vector<FieldElement>& candidates = {}) {
    if (f.is_zero()) fail(errc::bad_input, "roots of the zero polynomial");
    const FieldPtr& F = f.field();
    RootsResult out;
    Poly work = f;
    if (F->is_finite()) {
        u64 q = F->size_u64();
        for (u64 i = 0; i < q; ++i) {
            FieldElement a = F->element_at(i);
            if (!F->is_zero(f.eval(a))) continue;
            int m = detail::multiplicity_of_root(work, a);
            out.roots.emplace_back(a, m);
        }
        out.complete = true;
        return out;
    }
    if (F->kind() == FieldKind::rationals) {
        // primitive integer model
        mpz_class lcm(1);
        for (auto& c : f.coeffs())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    F->rational_value(c).get_den().get_mpz_t());
        std::vector<mpz_class> zc;
        for (auto& c : f.coeffs()) {
            mpq_class t = F->rational_value(c) * mpq_class(lcm);
            zc.push_back(t.get_num());
        }
        // root zero first
        size_t low = 0;
        while (low < zc.size() && zc[low] == 0) ++low;
        if (low > 0) {
            FieldElement zr = F->zero();
            int m = detail::multiplicity_of_root(work, zr);
            out.roots.emplace_back(zr, m);
        }
        mpz_class a0 = abs(zc[low]);
        mpz_class an = abs(zc.back());
        auto divisors = [](const mpz_class& n) {
            std::vector<mpz_class> ds;
            if (!n.fits_ulong_p()) fail(errc::bad_input, "rational root bound too large");
            u64 v = n.get_ui();
            std::vector<u64> uds{1};
            for (auto& [p, e] : nt::factor_u64(v)) {
                size_t sz = uds.size();
                u64 pk = 1;
                for (int i = 0; i < e; ++i) {
                    pk *= p;
                    for (size_t j = 0; j < sz; ++j) uds.push_back(uds[j] * pk);
                }
            }
            for (u64 u : uds) ds.push_back(mpz_class(static_cast<unsigned long>(u)));
            return ds;
        };
        for (auto& r : divisors(a0)) {
            for (auto& s : divisors(an)) {
                for (int sign = 0; sign < 2; ++sign) {
                    mpq_class cand(sign ? -r : r, s);
                    cand.canonicalize();
                    FieldElement a = F->from_rational(cand);
                    if (!F->is_zero(f.eval(a))) continue;
                    bool seen = false;
                    for (auto& [root, m] : out.roots)
                        if (root == a) seen = true;
                    if (seen) continue;
                    int m = detail::multiplicity_of_root(work, a);
                    out.roots.emplace_back(a, m);
                }
            }
        }
        out.complete = true;
    } else {
        for (auto& cand : candidates) {
            if (!F->is_zero(f.eval(cand))) continue;
            bool seen = false;
            for (auto& [root, m] : out.roots)
                if (root == cand) seen = true;
            if (seen) continue;
            int m = detail::multiplicity_of_root(work, cand);
            out.roots.emplace_back(cand, m);
        }
        int total = 0;
        for (auto& [root, m] : out.roots) total += m;
        out.complete = (total == f.degree());
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [&](const auto& x, const auto& y) { return F->cmp(x.first, y.first) < 0; });
    return out;
}

/// minimal polynomial of a number-field element as a Poly over Q
inline Poly minimal_polynomial_over_Q(const FieldElement& a, const FieldPtr& Q) {
    auto coeffs = minimal_polynomial_coeffs(a);
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto& x : coeffs) c.push_back(Q->from_rational(x));
    return Poly(Q, std::move(c));
}

}  // namespace seljac
