#pragma once

#include <vector>

#include "seljac/curve.hpp"

namespace seljac {

/// Point counts, L-polynomial and Jacobian group order of a finite-field
/// curve: counts N_1..N_g feed Newton's identities, the functional equation
/// supplies the remaining coefficients.
struct ZetaData {
    u64 q = 0;
    std::vector<long long> counts;  // N_1 .. N_g
    std::vector<mpz_class> L;       // degree 2g, L[0] = 1
    mpz_class jacobian_order;       // L(1)
};

namespace detail {

/// the field F_{q^k} over the same prime together with the image of the base
/// field's generator (for embedding coefficients)
inline std::pair<FieldPtr, FieldElement> extension_with_embedding(const FieldPtr& base, int k) {
    u64 p = base->characteristic();
    int e = base->degree();
    if (k == 1) return {base, base->degree() > 1 ? base->generator() : base->one()};
    FieldPtr K = Field::ext(p, e * k);
    if (e == 1) return {K, K->one()};
    // embed by locating a root of the base minimal polynomial in K
    const auto& mp = base->minpoly_p();
    u64 qk = K->size_u64();
    for (u64 i = 0; i < qk; ++i) {
        FieldElement cand = K->element_at(i);
        FieldElement acc = K->zero();
        FieldElement pw = K->one();
        for (u64 c : mp) {
            acc = acc + K->from_int(static_cast<long>(c)) * pw;
            pw = pw * cand;
        }
        if (K->is_zero(acc)) return {K, cand};
    }
    fail(errc::bad_input, "no embedding root found (internal)");
}

inline FieldElement embed(const FieldElement& a, const FieldPtr& K, const FieldElement& root) {
    const FieldPtr& base = a.owner();
    if (base->same(*K)) return a;
    FieldElement acc = K->zero();
    FieldElement pw = K->one();
    for (u64 c : a.rcoeffs()) {
        acc = acc + K->from_int(static_cast<long>(c)) * pw;
        pw = pw * root;
    }
    return acc;
}

}  // namespace detail

/// |C(F_{q^k})| = 1 + sum_a N_d(f(a)) with N_d(0) = 1 and N_d(b) = gcd(d,
/// q^k - 1) or 0 by the power residue test.
inline long long count_points(const CurvePtr& curve, int k) {
    if (k < 1) fail(errc::bad_input, "extension degree must be positive");
    const FieldPtr& base = curve->field();
    if (!base->is_finite()) fail(errc::bad_input, "point counting needs a finite field");
    auto [K, root] = detail::extension_with_embedding(base, k);
    std::vector<FieldElement> fc;
    for (int i = 0; i <= curve->n(); ++i) fc.push_back(detail::embed(curve->f().coeff(i), K, root));
    Poly fK(K, fc);
    u64 qk = K->size_u64();
    u64 g = nt::gcd_u64(static_cast<u64>(curve->d()), qk - 1);
    long long cof = static_cast<long long>((qk - 1) / g);
    long long total = 1;  // the single point at infinity
    for (u64 i = 0; i < qk; ++i) {
        FieldElement b = fK.eval(K->element_at(i));
        if (K->is_zero(b)) {
            total += 1;
        } else if (K->pow(b, cof) == K->one()) {
            total += static_cast<long long>(g);
        }
    }
    return total;
}

/// naive enumeration of all (x, y) pairs, independent of the residue-count
/// formula: tally y^d over every y, then read off the tally at every f(x)
inline long long count_points_naive(const CurvePtr& curve, int k) {
    const FieldPtr& base = curve->field();
    auto [K, root] = detail::extension_with_embedding(base, k);
    std::vector<FieldElement> fc;
    for (int i = 0; i <= curve->n(); ++i) fc.push_back(detail::embed(curve->f().coeff(i), K, root));
    Poly fK(K, fc);
    u64 qk = K->size_u64();
    std::vector<long long> tally(qk, 0);
    for (u64 j = 0; j < qk; ++j)
        ++tally[K->index_of(K->pow(K->element_at(j), curve->d()))];
    long long total = 1;
    for (u64 i = 0; i < qk; ++i) total += tally[K->index_of(fK.eval(K->element_at(i)))];
    return total;
}

inline ZetaData l_polynomial(const CurvePtr& curve, long long budget = 2000000) {
    const FieldPtr& base = curve->field();
    if (!base->is_finite()) fail(errc::bad_input, "zeta needs a finite field");
    int g = curve->genus();
    u64 q = base->size_u64();
    mpz_class qg;
    mpz_ui_pow_ui(qg.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(g));
    if (qg > mpz_class(static_cast<long>(budget)))
        fail(errc::budget_exceeded,
             "q^g = " + qg.get_str() + " exceeds the enumeration budget " + std::to_string(budget));
    ZetaData zd;
    zd.q = q;
    std::vector<mpz_class> psums(static_cast<size_t>(g) + 1);  // power sums p_k, 1-based
    for (int k = 1; k <= g; ++k) {
        long long Nk = count_points(curve, k);
        zd.counts.push_back(Nk);
        mpz_class qk;
        mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
        psums[static_cast<size_t>(k)] = mpz_class(qk + 1) - static_cast<long>(Nk);
        // integer-safe Weil bound: |p_k| <= 2g floor(sqrt(q^k)) + 1
        mpz_class bound = 2 * g * nt::isqrt_floor(qk) + 1;
        if (abs(psums[static_cast<size_t>(k)]) > bound)
            fail(errc::non_integral_coefficient, "Weil bound violated: counting bug");
    }
    // Newton's identities: c_k = -(1/k) sum_{i=1..k} p_i c_{k-i}
    std::vector<mpq_class> c(static_cast<size_t>(2 * g) + 1, mpq_class(0));
    c[0] = 1;
    for (int k = 1; k <= g; ++k) {
        mpq_class acc(0);
        for (int i = 1; i <= k; ++i)
            acc += mpq_class(psums[static_cast<size_t>(i)]) * c[static_cast<size_t>(k - i)];
        c[static_cast<size_t>(k)] = -acc / k;
    }
    // functional equation c_{2g-i} = q^{g-i} c_i
    for (int i = g - 1; i >= 0; --i) {
        mpz_class qpow;
        mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(g - i));
        c[static_cast<size_t>(2 * g - i)] = c[static_cast<size_t>(i)] * mpq_class(qpow);
    }
    for (int i = 0; i <= 2 * g; ++i) {
        if (c[static_cast<size_t>(i)].get_den() != 1)
            fail(errc::non_integral_coefficient,
                 "L-coefficient " + std::to_string(i) + " is not integral: counting bug");
        zd.L.push_back(c[static_cast<size_t>(i)].get_num());
    }
    zd.jacobian_order = 0;
    for (auto& ci : zd.L) zd.jacobian_order += ci;
    if (zd.jacobian_order < 1)
        fail(errc::non_integral_coefficient, "nonpositive Jacobian order: counting bug");
    return zd;
}

inline mpz_class jacobian_order(const CurvePtr& curve, long long budget = 2000000) {
    return l_polynomial(curve, budget).jacobian_order;
}

/// N_k reconstructed from the L-polynomial (Newton recursion backwards);
/// expanding Z(T) = L(T)/((1-T)(1-qT)) gives the same numbers.
inline std::vector<long long> reconstruct_counts(const ZetaData& zd, int upto) {
    int twog = static_cast<int>(zd.L.size()) - 1;
    std::vector<mpz_class> p(static_cast<size_t>(upto) + 1);
    std::vector<long long> counts;
    for (int k = 1; k <= upto; ++k) {
        mpz_class acc = 0;
        for (int i = 1; i < k; ++i)
            if (i <= twog) acc += zd.L[static_cast<size_t>(i)] * p[static_cast<size_t>(k - i)];
        if (k <= twog) acc += k * zd.L[static_cast<size_t>(k)];
        p[static_cast<size_t>(k)] = -acc;
        mpz_class qk;
        mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(zd.q),
                      static_cast<unsigned long>(k));
        mpz_class Nk = qk + 1 - p[static_cast<size_t>(k)];
        counts.push_back(static_cast<long long>(Nk.get_si()));
    }
    return counts;
}

}  // namespace seljac
