#pragma once

#include <array>
#include <vector>

#include "seljac/rr_oracle.hpp"
#include "seljac/torsion.hpp"

namespace seljac {

/// One bijection Eta -> mu_3 together with its quartic and certificate data.
///
/// The cube root lambda of lambda_cubed = 4 / (a0^3 - c0^3) is never adjoined
/// to the field: the actual certificate polynomials v_i = lambda (a0 x + b0)
/// etc. are stored through their cubes, and the pair of order-4 points
/// P = (0, lambda b0), Q = (-1, lambda (d0 - c0)) is pinned by the field
/// element point_pair_ratio = y(P) / y(Q) = b0 / (d0 - c0), which is
/// invariant under the simultaneous mu_3 rotation of the pair.
struct PicardDatum {
    std::vector<std::pair<FieldElement, FieldElement>> phi;  // eta -> mu_3, etas sorted
    MobiusMap map0;                                          // (a0, b0, c0, d0) normalized
    FieldElement lambda_cubed;
    Poly f;
    Poly v0_cubed, v1_cubed;
    FieldElement point_pair_ratio;
    int orbit_id = 0;
};

namespace detail {

inline void picard_abort(const std::string& msg) {
    // a failed invariant here would falsify the classification theorem
    fail(errc::bad_input, "picard enumeration invariant failed: " + msg);
}

}  // namespace detail

/// The six bijections Eta -> mu_3 over Q(zeta_12), each with its quartic
/// f_phi = x^4 + lambda^3 (a0 x + b0)^3 = (x+1)^4 + lambda^3 (c0 x + d0)^3,
/// grouped into exactly two mu_3-orbits carrying exactly two distinct f.
inline std::vector<PicardDatum> enumerate_picard(const FieldPtr& field = Field::cyclotomic(12)) {
    if (field->characteristic() != 0 || field->cyclotomic_index() % 12 != 0)
        fail(errc::bad_input, "enumeration works over a cyclotomic field containing zeta_12");
    std::vector<FieldElement> etas = eta_set(field, 4);
    FieldElement omega3 = primitive_root_of_unity(field, 3);
    std::vector<FieldElement> mu3{field->one(), omega3, omega3 * omega3};
    Poly x4 = Poly::monomial(field, 4, field->one());
    Poly xp1_4 = Poly::from_ints(field, {1, 1}).pow(4);
    FieldElement four = field->from_int(4);

    std::vector<PicardDatum> data;
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        std::array<ProjPoint, 3> src{ProjPoint::finite(etas[0]), ProjPoint::finite(etas[1]),
                                     ProjPoint::finite(etas[2])};
        std::array<ProjPoint, 3> tgt{ProjPoint::finite(mu3[static_cast<size_t>(perm[0])]),
                                     ProjPoint::finite(mu3[static_cast<size_t>(perm[1])]),
                                     ProjPoint::finite(mu3[static_cast<size_t>(perm[2])])};
        MobiusMap T0 = mobius_through(src, tgt);
        FieldElement A0 = field->pow(T0.a(), 3);
        FieldElement C0 = field->pow(T0.c(), 3);
        if (A0 == C0) detail::picard_abort("a0^3 = c0^3");
        if (field->is_zero(T0.a()) || field->is_zero(T0.c()))
            detail::picard_abort("degenerate linear form");
        FieldElement lam3 = field->div(four, A0 - C0);
        Poly lin0(field, {T0.b(), T0.a()});
        Poly lin1(field, {T0.d(), T0.c()});
        PicardDatum datum{{}, T0, lam3, Poly(field), Poly(field), Poly(field), FieldElement{}, 0};
        datum.v0_cubed = lam3 * lin0.pow(3);
        datum.v1_cubed = lam3 * lin1.pow(3);
        datum.f = x4 + datum.v0_cubed;
        if (datum.f != xp1_4 + datum.v1_cubed)
            detail::picard_abort("double representation mismatch");
        if (!is_squarefree(datum.f)) detail::picard_abort("f has repeated roots");
        // A - C = 4 at the level of rescaled cubes
        if (!(lam3 * A0 - lam3 * C0 == four)) detail::picard_abort("A - C != 4");
        if (T0.d() == T0.c()) detail::picard_abort("d0 = c0 (zero y-coordinate at Q)");
        if (field->is_zero(T0.b())) detail::picard_abort("b0 = 0 (zero y-coordinate at P)");
        datum.point_pair_ratio = field->div(T0.b(), T0.d() - T0.c());
        for (size_t i = 0; i < 3; ++i)
            datum.phi.emplace_back(etas[i], mu3[static_cast<size_t>(perm[i])]);
        data.push_back(std::move(datum));
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (data.size() != 6) detail::picard_abort("expected 6 bijections");
    // group by f: exactly two distinct quartics, three bijections each
    std::vector<Poly> quartics;
    for (auto& d : data) {
        bool known = false;
        for (auto& q : quartics) known = known || q == d.f;
        if (!known) quartics.push_back(d.f);
    }
    if (quartics.size() != 2) detail::picard_abort("expected exactly 2 distinct quartics");
    // canonical orbit order: compare coefficient sequences
    auto poly_less = [&](const Poly& a, const Poly& b) {
        for (int i = 0; i <= 4; ++i) {
            int c = field->cmp(a.coeff(i), b.coeff(i));
            if (c != 0) return c < 0;
        }
        return false;
    };
    if (poly_less(quartics[1], quartics[0])) std::swap(quartics[0], quartics[1]);
    for (auto& d : data) d.orbit_id = (d.f == quartics[0]) ? 0 : 1;
    std::stable_sort(data.begin(), data.end(),
                     [&](const PicardDatum& a, const PicardDatum& b) {
                         return a.orbit_id < b.orbit_id;
                     });
    for (int id = 0; id < 2; ++id) {
        int count = 0;
        for (auto& d : data) count += (d.orbit_id == id);
        if (count != 3) detail::picard_abort("mu_3 orbit of size != 3");
    }
    return data;
}

/// The bijection phi recovered from a quartic f and an order-4 point pair
/// P = (0, c0), Q = (-1, c1) encoded by the field element rho = c0 / c1
/// (rho^3 = f(0) / f(-1); the individual y-coordinates need not lie in the
/// field). phi(eta) = rho * (m1(-1) / m0(0)) * m0(eta) / m1(eta) where m0, m1
/// are the monic cube roots of the monic parts of f - x^4 and f - (x+1)^4.
inline std::vector<std::pair<FieldElement, FieldElement>> picard_inverse(
    const Poly& f, const FieldElement& rho) {
    const FieldPtr& field = f.field();
    if (f.degree() != 4 || !f.is_monic())
        fail(errc::not_picard_form, "f must be a monic quartic");
    if (!is_squarefree(f)) fail(errc::not_picard_form, "f has repeated roots");
    Poly x4 = Poly::monomial(field, 4, field->one());
    Poly xp1_4 = Poly::from_ints(field, {1, 1}).pow(4);
    Poly g0 = f - x4;
    Poly g1 = f - xp1_4;
    if (g0.degree() != 3 || g1.degree() != 3)
        fail(errc::not_picard_form, "f - x^4 and f - (x+1)^4 must be cubic");
    PolyRoot m0r = poly_dth_root(g0.monic(), 3);
    PolyRoot m1r = poly_dth_root(g1.monic(), 3);
    if (m0r.status != RootStatus::found || m1r.status != RootStatus::found)
        fail(errc::not_picard_form, "f - x^4 or f - (x+1)^4 is not a cube");
    const Poly& m0 = m0r.value;
    const Poly& m1 = m1r.value;
    FieldElement m00 = m0.eval(field->zero());
    FieldElement m1m1 = m1.eval(field->from_int(-1));
    if (field->is_zero(m00) || field->is_zero(m1m1))
        fail(errc::not_picard_form, "certificate vanishes at its own abscissa");
    // rho must cube to f(0)/f(-1)
    FieldElement f0 = f.eval(field->zero());
    FieldElement fm1 = f.eval(field->from_int(-1));
    if (field->is_zero(f0) || field->is_zero(fm1))
        fail(errc::not_picard_form, "order-4 points cannot be ramified");
    if (!(field->pow(rho, 3) == field->div(f0, fm1)))
        fail(errc::not_picard_form, "rho^3 != f(0)/f(-1)");
    FieldElement scale = rho * field->div(m1m1, m00);
    std::vector<FieldElement> etas = eta_set(field, 4);
    std::vector<std::pair<FieldElement, FieldElement>> phi;
    std::set<std::string> image;
    for (auto& eta : etas) {
        FieldElement den = m1.eval(eta);
        if (field->is_zero(den)) fail(errc::not_picard_form, "T has a pole on Eta");
        FieldElement val = scale * field->div(m0.eval(eta), den);
        if (!(field->pow(val, 3) == field->one()))
            fail(errc::not_picard_form, "T(eta) does not land in mu_3");
        image.insert(field->to_string(val));
        phi.emplace_back(eta, val);
    }
    if (image.size() != 3) fail(errc::not_picard_form, "T is not injective on Eta");
    return phi;
}

/// Outcome of the finite-field order verification of a datum.
struct PicardOrderReport {
    u64 p = 0;
    int ext_degree = 1;  // 1 when f(0), f(-1) are cubes mod p, else 3
    std::vector<int> orders;
    bool all_order_4 = false;
};

namespace detail {

/// reduction Q(zeta_12) -> F_p sending zeta_12 to an order-12 element
inline FieldElement reduce_cyclotomic(const FieldElement& a, const FieldPtr& Fp,
                                      const FieldElement& xi12) {
    u64 p = Fp->characteristic();
    FieldElement acc = Fp->zero();
    FieldElement pow = Fp->one();
    for (auto& q : a.qcoeffs()) {
        if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
            fail(errc::bad_prime, "denominator divisible by p");
        acc = acc + Fp->from_rational(q) * pow;
        pow = pow * xi12;
    }
    return acc;
}

}  // namespace detail

/// Reduces the datum modulo a prime of Q(zeta_12) above p (p = 1 mod 12) and
/// confirms through the Riemann-Roch oracle that all six points with
/// abscissas 0 and -1 have order exactly 4. When f(0) or f(-1) is not a cube
/// mod p the points live over F_{p^3}.
inline PicardOrderReport picard_verify_orders(const PicardDatum& datum, u64 p) {
    if (!nt::is_prime_u64(p) || p % 12 != 1) fail(errc::bad_prime, "need a prime p = 1 mod 12");
    auto Fp = Field::prime(p);
    FieldElement xi = primitive_root_of_unity(Fp, 12);
    std::vector<FieldElement> fp_coeffs;
    for (int i = 0; i <= 4; ++i)
        fp_coeffs.push_back(detail::reduce_cyclotomic(datum.f.coeff(i), Fp, xi));
    Poly fp(Fp, fp_coeffs);
    if (fp.degree() != 4 || !is_squarefree(fp)) fail(errc::bad_prime, "bad reduction at p");

    PicardOrderReport rep;
    rep.p = p;
    FieldElement w0 = fp.eval(Fp->zero());
    FieldElement w1 = fp.eval(Fp->from_int(-1));
    bool cubes = dth_root(Fp, w0, 3).status == RootStatus::found &&
                 dth_root(Fp, w1, 3).status == RootStatus::found;
    FieldPtr K = Fp;
    Poly fK = fp;
    if (!cubes) {
        rep.ext_degree = 3;
        K = Field::ext(p, 3);
        std::vector<FieldElement> lifted;
        for (int i = 0; i <= 4; ++i)
            lifted.push_back(K->from_coeffs_p({fp.coeff(i).rcoeffs()[0], 0, 0}));
        fK = Poly(K, lifted);
    }
    CurvePtr C = Curve::make(K, 3, 4, fK);
    rep.all_order_4 = true;
    for (long xv : {0L, -1L}) {
        std::vector<CurvePoint> pts = C->lift_x(K->from_int(xv));
        if (pts.size() != 3) fail(errc::bad_prime, "expected three lifts per abscissa");
        for (auto& pt : pts) {
            TorsionReport tr = point_order(C, pt, 8);
            int ord = tr.found ? tr.order : 0;
            rep.orders.push_back(ord);
            rep.all_order_4 = rep.all_order_4 && tr.found && tr.order == 4 && tr.verified;
        }
    }
    return rep;
}

}  // namespace seljac
