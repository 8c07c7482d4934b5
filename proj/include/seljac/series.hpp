#pragma once

#include <vector>

#include "seljac/poly.hpp"

namespace seljac {

/// Truncated power series over a Field with fixed precision N: coefficients
/// of t^0 .. t^(N-1) are exact, everything beyond is O(t^N).
class Series {
public:
    Series(FieldPtr f, size_t prec) : field_(std::move(f)), c_(prec, field_->zero()) {}

    static Series from_poly(const Poly& p, size_t prec) {
        Series s(p.field(), prec);
        for (size_t i = 0; i < prec && i < p.coeffs().size(); ++i) s.c_[i] = p.coeffs()[i];
        return s;
    }

    static Series constant(const FieldPtr& f, const FieldElement& v, size_t prec) {
        Series s(f, prec);
        if (prec > 0) s.c_[0] = v;
        return s;
    }

    /// the uniformizer t itself
    static Series t(const FieldPtr& f, size_t prec) {
        Series s(f, prec);
        if (prec > 1) s.c_[1] = f->one();
        return s;
    }

    const FieldPtr& field() const { return field_; }
    size_t precision() const { return c_.size(); }
    const FieldElement& coeff(size_t i) const { return c_[i]; }
    void set_coeff(size_t i, FieldElement v) { c_[i] = std::move(v); }

    bool is_zero() const {
        for (auto& x : c_)
            if (!field_->is_zero(x)) return false;
        return true;
    }

    /// index of the first nonzero coefficient, or -1 if none within precision
    long long order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!field_->is_zero(c_[i])) return static_cast<long long>(i);
        return -1;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(a.field_, std::min(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series r(a.field_, std::min(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        size_t n = std::min(a.c_.size(), b.c_.size());
        Series r(a.field_, n);
        for (size_t i = 0; i < n; ++i) {
            if (a.field_->is_zero(a.c_[i])) continue;
            for (size_t j = 0; i + j < n; ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend Series operator*(const FieldElement& s, const Series& a) {
        Series r = a;
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    Series pow(int e) const {
        Series r = constant(field_, field_->one(), c_.size());
        Series b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// multiplicative inverse; requires a unit constant term
    Series inverse() const {
        if (c_.empty() || field_->is_zero(c_[0]))
            fail(errc::division_by_zero, "series inverse needs a unit constant term");
        Series r(field_, c_.size());
        FieldElement inv0 = field_->inv(c_[0]);
        r.c_[0] = inv0;
        for (size_t k = 1; k < c_.size(); ++k) {
            FieldElement acc = field_->zero();
            for (size_t i = 1; i <= k; ++i) acc = acc + c_[i] * r.c_[k - i];
            r.c_[k] = field_->neg(acc * inv0);
        }
        return r;
    }

    /// p(series) by Horner
    static Series eval_poly(const Poly& p, const Series& at) {
        Series r(at.field(), at.precision());
        for (size_t i = p.coeffs().size(); i-- > 0;) {
            r = r * at;
            r.c_[0] = r.c_[0] + p.coeffs()[i];
        }
        return r;
    }

private:
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

}  // namespace seljac
