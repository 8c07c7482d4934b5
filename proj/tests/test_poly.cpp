#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "seljac/poly.hpp"

using namespace seljac;

namespace {

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int maxdeg, bool monic = false) {
    int deg = static_cast<int>(rng() % static_cast<u64>(maxdeg + 1));
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i) {
        if (F->is_finite())
            c.push_back(F->element_at(rng() % F->size_u64()));
        else
            c.push_back(F->from_rational(mpq_class(static_cast<long>(rng() % 13) - 6,
                                                   1 + static_cast<long>(rng() % 4))));
    }
    if (monic) c.back() = F->one();
    return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    auto Q = Field::rationals();
    auto F7 = Field::prime(7);

    REQUIRE(gcd(Poly::from_ints(Q, {-1, 0, 1}), Poly::from_ints(Q, {1, -2, 1})) ==
            Poly::from_ints(Q, {-1, 1}));
    REQUIRE(Poly::from_ints(F7, {1, 0, 0, 0, 1}).eval(F7->zero()) == F7->one());
    REQUIRE(Poly::monomial(Q, 4, Q->one()).compose_linear(Q->one(), Q->one()) ==
            Poly::from_ints(Q, {1, 4, 6, 4, 1}));
}

TEST_CASE("divrem reconstruction on random pairs") {
    std::mt19937_64 rng(101);
    auto Q = Field::rationals();
    auto F13 = Field::prime(13);
    for (const FieldPtr& F : {Q, F13}) {
        for (int t = 0; t < 1000; ++t) {
            Poly a = random_poly(F, rng, F->is_finite() ? 9 : 6);
            Poly b = random_poly(F, rng, F->is_finite() ? 5 : 3);
            if (b.is_zero()) continue;
            auto [q, r] = divrem(a, b);
            REQUIRE(q * b + r == a);
            REQUIRE((r.is_zero() || r.degree() < b.degree()));
        }
    }
}

TEST_CASE("squarefreeness") {
    auto Q = Field::rationals();
    auto F5 = Field::prime(5);
    REQUIRE(is_squarefree(Poly::from_ints(Q, {1, 0, 0, 0, 1})));
    // x^5 + (2x+1)^3 over F_5 has no repeated roots
    auto fam = Poly::monomial(F5, 5, F5->one()) + Poly::from_ints(F5, {1, 2}).pow(3);
    REQUIRE(is_squarefree(fam));
    REQUIRE(!is_squarefree(Poly::from_ints(Q, {1, -2, 1}) * Poly::from_ints(Q, {2, 1})));
    // vanishing derivative in characteristic p
    REQUIRE(!is_squarefree(Poly::monomial(F5, 5, F5->one())));
}

TEST_CASE("discriminants") {
    auto Q = Field::rationals();
    // x^4 + (ax+b)^3 with a=1, b=2: b^8 (256 b - 27 a^4) = 2^8 * 485 = 124160
    auto f = Poly::monomial(Q, 4, Q->one()) + Poly::from_ints(Q, {2, 1}).pow(3);
    REQUIRE(discriminant(f) == Q->from_int(124160));
    REQUIRE(discriminant(Poly::from_ints(Q, {-2, 0, 1})) == Q->from_int(8));
    // a = 0, b = 1 in the same formula
    REQUIRE(discriminant(Poly::from_ints(Q, {1, 0, 0, 0, 1})) == Q->from_int(256));
    REQUIRE_THROWS_MATCHES(discriminant(Poly::from_ints(Q, {1, 1})), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::degree_too_small; }));
}

TEST_CASE("squarefree iff nonzero discriminant") {
    std::mt19937_64 rng(202);
    auto Q = Field::rationals();
    auto F13 = Field::prime(13);
    for (const FieldPtr& F : {Q, F13}) {
        for (int t = 0; t < 150; ++t) {
            Poly f = random_poly(F, rng, 6);
            if (f.degree() < 2) continue;
            REQUIRE(is_squarefree(f) == !F->is_zero(discriminant(f)));
        }
    }
}

TEST_CASE("polynomial d-th roots") {
    auto Q = Field::rationals();
    auto F7 = Field::prime(7);

    auto r = poly_dth_root(Poly::from_ints(Q, {8, 12, 6, 1}), 3);
    REQUIRE(r.status == RootStatus::found);
    REQUIRE(r.value == Poly::from_ints(Q, {2, 1}));
    REQUIRE(poly_dth_root(Poly::from_ints(Q, {1, 0, 1}), 2).status == RootStatus::no_root);

    auto rf = poly_dth_root(Poly::from_ints(F7, {2, 5, 4}), 2);
    REQUIRE(rf.status == RootStatus::found);
    REQUIRE(rf.value.pow(2) == Poly::from_ints(F7, {2, 5, 4}));

    // characteristic dividing d is out of contract
    auto F5 = Field::prime(5);
    REQUIRE_THROWS_MATCHES(poly_dth_root(Poly::from_ints(F5, {1}), 5), error,
                           Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::bad_characteristic;
                           }));
}

TEST_CASE("d-th root round trips up to mu_d") {
    std::mt19937_64 rng(303);
    auto Q = Field::rationals();
    auto F7 = Field::prime(7);
    auto F13 = Field::prime(13);
    for (const FieldPtr& F : {Q, F7, F13}) {
        for (int d : {2, 3}) {
            for (int t = 0; t < 60; ++t) {
                Poly v = random_poly(F, rng, 5);
                if (v.is_zero()) continue;
                Poly g = v.pow(d);
                auto rr = poly_dth_root(g, d);
                REQUIRE(rr.status == RootStatus::found);
                REQUIRE(rr.value.pow(d) == g);
                // the returned representative differs from v by a d-th root of 1
                if (!rr.value.is_zero() && !v.is_zero()) {
                    FieldElement ratio = F->div(rr.value.lc(), v.lc());
                    REQUIRE(F->pow(ratio, d) == F->one());
                    REQUIRE(ratio * v == rr.value);
                }
            }
        }
    }
}

TEST_CASE("compose_linear round trip") {
    std::mt19937_64 rng(404);
    auto F13 = Field::prime(13);
    for (int t = 0; t < 100; ++t) {
        Poly f = random_poly(F13, rng, 7);
        FieldElement lam = F13->element_at(1 + rng() % 12);
        FieldElement mu = F13->element_at(rng() % 13);
        Poly g = f.compose_linear(lam, mu);
        Poly back = g.compose_linear(F13->inv(lam), F13->neg(F13->div(mu, lam)));
        REQUIRE(back == f);
    }
}

TEST_CASE("roots in field") {
    auto F13 = Field::prime(13);
    auto rr = roots_in_field(Poly::from_ints(F13, {-1, 0, 0, 0, 1}));
    REQUIRE(rr.complete);
    // oracle: direct scan of F_13
    std::set<u64> expect;
    for (u64 v = 0; v < 13; ++v)
        if ((v * v % 13) * (v * v % 13) % 13 == 1) expect.insert(v);
    REQUIRE(rr.roots.size() == expect.size());
    for (auto& [root, m] : rr.roots) {
        REQUIRE(m == 1);
        REQUIRE(expect.count(root.rcoeffs()[0]) == 1);
    }

    auto Q = Field::rationals();
    auto rq = roots_in_field(Poly::from_ints(Q, {-2, 0, 1}));
    REQUIRE(rq.complete);
    REQUIRE(rq.roots.empty());
    // rational roots with multiplicities: (2x-1)^2 (x+3)
    auto f = Poly::from_ints(Q, {-1, 2}).pow(2) * Poly::from_ints(Q, {3, 1});
    auto rm = roots_in_field(f);
    REQUIRE(rm.complete);
    REQUIRE(rm.roots.size() == 2);
    for (auto& [root, m] : rm.roots) {
        if (root == Q->from_rational(mpq_class(1, 2))) REQUIRE(m == 2);
        if (root == Q->from_int(-3)) REQUIRE(m == 1);
    }

    // number field: candidates drive the search
    auto C12 = Field::cyclotomic(12);
    auto i = C12->pow(C12->generator(), 3);
    auto h = Poly::from_ints(C12, {1, 4, 6, 4});
    std::vector<FieldElement> cands{
        C12->from_rational(mpq_class(-1, 2)),
        (C12->from_int(-1) - i) * C12->inv(C12->from_int(2)),
        (C12->from_int(-1) + i) * C12->inv(C12->from_int(2))};
    auto rn = roots_in_field(h, cands);
    REQUIRE(rn.complete);
    REQUIRE(rn.roots.size() == 3);
    auto rpartial = roots_in_field(h, {cands[0]});
    REQUIRE(!rpartial.complete);
    REQUIRE(rpartial.roots.size() == 1);
}
