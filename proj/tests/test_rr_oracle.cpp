#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "seljac/rr_oracle.hpp"
#include "seljac/torsion.hpp"

using namespace seljac;

namespace {

Poly random_squarefree_monic(const FieldPtr& F, std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<FieldElement> c;
        for (int i = 0; i < n; ++i) c.push_back(F->element_at(rng() % F->size_u64()));
        c.push_back(F->one());
        Poly f(F, std::move(c));
        if (f.degree() == n && is_squarefree(f)) return f;
    }
}

std::vector<CurvePtr> dimension_test_curves() {
    auto F7 = Field::prime(7);
    auto F11 = Field::prime(11);
    auto F13 = Field::prime(13);
    return {
        new_curve(F7, 3, 4, Poly::from_ints(F7, {1, 0, 0, 0, 1})),
        new_curve(F7, 2, 5, Poly::from_ints(F7, {1, 0, 0, 0, 0, 1})),
        new_curve(F11, 2, 7, Poly::from_ints(F11, {1, 0, 0, 0, 0, 0, 0, 1})),
        new_curve(F13, 4, 5, Poly::from_ints(F13, {1, 0, 0, 0, 0, 1})),
        new_curve(F13, 3, 5, Poly::from_ints(F13, {1, 0, 0, 0, 0, 1})),
        new_curve(F13, 2, 5, Poly::from_ints(F13, {1, -1, 0, 0, 0, 1})),
    };
}

}  // namespace

TEST_CASE("rr basis examples") {
    auto F7 = Field::prime(7);
    auto C = new_curve(F7, 3, 4, Poly::from_ints(F7, {1, 0, 0, 0, 1}));
    auto B = rr_basis(C, 6);
    REQUIRE(B.monomials == (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}}));
    REQUIRE(B.size() == 4);  // = 6 - g + 1 with g = 3
    REQUIRE(rr_basis(C, 4).monomials ==
            (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}}));
    REQUIRE(rr_basis(C, 0).size() == 1);
}

TEST_CASE("riemann-roch dimensions and gap counts") {
    for (auto& C : dimension_test_curves()) {
        int g = C->genus();
        for (int m = 2 * g - 1; m <= 4 * g; ++m)
            REQUIRE(static_cast<int>(rr_basis(C, m).size()) == m - g + 1);
        // Weierstrass gaps at infinity: |N \ <d, n>| = g, all gaps < 2g
        std::set<int> semigroup;
        for (int j = 0; j < C->d(); ++j)
            for (int i = 0; C->d() * i + C->n() * j <= 2 * g; ++i)
                semigroup.insert(C->d() * i + C->n() * j);
        int gaps = 0;
        for (int v = 0; v < 2 * g; ++v)
            if (!semigroup.count(v)) ++gaps;
        REQUIRE(gaps == g);
    }
}

TEST_CASE("local expansions") {
    auto F7 = Field::prime(7);
    auto F13 = Field::prime(13);

    // unramified: y = (1 + t^4)^(1/3) = 1 + 5 t^4 + O(t^8) over F_7
    auto C = new_curve(F7, 3, 4, Poly::from_ints(F7, {1, 0, 0, 0, 1}));
    auto ex = local_expansion(C, C->point(F7->zero(), F7->one()), 8);
    REQUIRE(!ex.ramified);
    REQUIRE(ex.ys.coeff(0) == F7->one());
    REQUIRE(ex.ys.coeff(4) == F7->from_int(5));
    for (size_t i : {1, 2, 3, 5, 6, 7}) REQUIRE(F7->is_zero(ex.ys.coeff(i)));

    // ramified: x = 1 + 10 t^3 + O(t^6) over F_13 (1/f'(1) = 1/4 = 10)
    auto C3 = new_curve(F13, 3, 4, Poly::from_ints(F13, {-1, 0, 0, 0, 1}));
    auto ex2 = local_expansion(C3, C3->point(F13->one(), F13->zero()), 6);
    REQUIRE(ex2.ramified);
    REQUIRE(ex2.xs.coeff(0) == F13->one());
    REQUIRE(ex2.xs.coeff(3) == F13->from_int(10));

    // y = 1 + 4 t^3 + O(t^4) on y^2 = x^3 + 1 over F_7 (1/2 = 4)
    auto E = new_curve(F7, 2, 3, Poly::from_ints(F7, {1, 0, 0, 1}));
    auto ex3 = local_expansion(E, E->point(F7->zero(), F7->one()), 4);
    REQUIRE(ex3.ys.coeff(3) == F7->from_int(4));

    // substitution check: y(t)^d = f(x(t)) to full precision
    auto check = [](const CurvePtr& curve, const LocalExpansion& e) {
        Series lhs = e.ys.pow(curve->d());
        Series rhs = Series::eval_poly(curve->f(), e.xs);
        REQUIRE((lhs - rhs).is_zero());
    };
    check(C, ex);
    check(C3, ex2);
    check(E, ex3);
}

TEST_CASE("point orders") {
    auto F7 = Field::prime(7);
    auto F13 = Field::prime(13);
    auto C = new_curve(F7, 3, 4, Poly::from_ints(F7, {1, 0, 0, 0, 1}));
    auto C3 = new_curve(F13, 3, 4, Poly::from_ints(F13, {-1, 0, 0, 0, 1}));

    auto r1 = point_order(C, C->point(F7->zero(), F7->one()), 10);
    REQUIRE(r1.found);
    REQUIRE(r1.order == 4);
    REQUIRE(r1.verified);

    auto r2 = point_order(C3, C3->point(F13->one(), F13->zero()), 10);
    REQUIRE(r2.found);
    REQUIRE(r2.order == 3);
    REQUIRE(r2.verified);

    auto r3 = point_order(C, C->point(F7->zero(), F7->one()), 3);
    REQUIRE(!r3.found);
    REQUIRE(r3.bound == 3);
}

TEST_CASE("point orders in characteristic zero") {
    // the oracle's expansions and eliminations are exact over number fields
    auto F3 = Field::cyclotomic(3);
    auto C = family_mu(F3, 3, 4);
    auto rep = point_order(C, C->point(F3->zero(), F3->one()), 6);
    REQUIRE(rep.found);
    REQUIRE(rep.order == 4);
    REQUIRE(rep.verified);
}

TEST_CASE("oracle certificate spans the criterion certificate") {
    auto F7 = Field::prime(7);
    auto C = family_mu(F7, 3, 4);
    auto pr = check_order_n_at(C, F7->zero());
    REQUIRE(pr.status == PacketStatus::packet);
    for (auto& pt : pr.packet->points) {
        auto rep = point_order(C, pt, 4);
        REQUIRE(rep.found);
        REQUIRE(rep.order == 4);
        REQUIRE(rep.certificate_function);
        // h must be a scalar multiple of y - zeta^i v: s_1 constant, s_j = 0
        // for j >= 2, s_0 = -s_1 * (zeta^i v)
        const CurveFunction& h = *rep.certificate_function;
        REQUIRE(h.part(1).degree() == 0);
        for (int j = 2; j < C->d(); ++j) REQUIRE(h.part(j).is_zero());
        FieldElement s1 = h.part(1).coeff(0);
        Poly expected = F7->neg(s1 * pt.y()) * Poly::constant(F7, F7->one());
        REQUIRE(h.part(0) == expected);
    }
}

TEST_CASE("mu_d equivariance of point order") {
    auto F13 = Field::prime(13);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        auto f = random_squarefree_monic(F13, rng, 4);
        auto C = new_curve(F13, 3, 4, f);
        FieldElement a = F13->element_at(rng() % 13);
        auto pts = C->lift_x(a);
        if (pts.empty()) continue;
        auto base = point_order(C, pts[0], 6);
        for (int i = 1; i < 3; ++i) {
            auto rot = point_order(C, C->omega(pts[0], i), 6);
            REQUIRE(base.found == rot.found);
            if (base.found) REQUIRE(base.order == rot.order);
        }
    }
}

TEST_CASE("order gap law on random curves") {
    std::mt19937_64 rng(12);
    struct Params {
        u64 p;
        int d, n;
    };
    // all five (d, n) shapes; p chosen so that mu_d lives in F_p
    for (auto& [p, d, n] : std::vector<Params>{{7, 3, 4}, {13, 2, 5}, {11, 2, 5}, {13, 3, 4},
                                               {7, 3, 5}, {13, 4, 5}, {11, 2, 7}}) {
        auto F = Field::prime(p);
        for (int t = 0; t < 15; ++t) {
            auto f = random_squarefree_monic(F, rng, n);
            auto C = new_curve(F, d, n, f);
            for (u64 i = 0; i < p; ++i) {
                for (auto& pt : C->lift_x(F->element_at(i))) {
                    auto rep = point_order(C, pt, n - 1);
                    if (F->is_zero(pt.y())) {
                        REQUIRE(rep.found);
                        REQUIRE(rep.order == d);
                        REQUIRE(rep.verified);
                    } else {
                        REQUIRE(!rep.found);
                    }
                }
            }
        }
    }
}
