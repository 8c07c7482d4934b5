#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "seljac/field.hpp"
#include "seljac/poly.hpp"

using namespace seljac;

TEST_CASE("cyclotomic field construction") {
    auto F = Field::cyclotomic(12);
    REQUIRE(F->degree() == 4);
    REQUIRE(F->characteristic() == 0);
    // frozen: Phi_12 = x^4 - x^2 + 1
    REQUIRE(F->minpoly_q() == (std::vector<mpq_class>{1, 0, -1, 0, 1}));

    // independent characterization: the generator has exact order 12
    auto z = F->generator();
    REQUIRE(F->pow(z, 12) == F->one());
    for (int k = 1; k < 12; ++k) REQUIRE(!(F->pow(z, k) == F->one()));
}

TEST_CASE("prime field construction and errors") {
    auto F13 = Field::prime(13);
    REQUIRE(F13->characteristic() == 13);
    REQUIRE(F13->degree() == 1);
    REQUIRE_THROWS_MATCHES(Field::prime(4), error, Catch::Matchers::Predicate<error>([](const error& e) {
                               return e.code() == errc::not_prime;
                           }));
}

TEST_CASE("reducible moduli are rejected") {
    auto reducible = [](std::vector<mpq_class> mp) {
        try {
            Field::number_field(std::move(mp));
            return false;
        } catch (const error& e) {
            return e.code() == errc::reducible_modulus;
        }
    };
    REQUIRE(reducible({-1, 0, 1}));        // x^2 - 1
    REQUIRE(reducible({-4, 0, 0, 0, 1}));  // x^4 - 4 = (x^2-2)(x^2+2)
    REQUIRE(reducible({mpq_class(1, 4), 0, -1, 0, 1}));  // (x^2 - 1/2)^2 shape: x^4 - x^2 + 1/4
    REQUIRE_NOTHROW(Field::number_field({1, 0, 0, 0, 1}));        // x^4 + 1
    REQUIRE_NOTHROW(Field::number_field({-2, 0, 1}));             // x^2 - 2
    REQUIRE_NOTHROW(Field::number_field({-2, 0, 0, 0, 0, 1}));    // x^5 - 2
}

TEST_CASE("extension field modulus checks") {
    REQUIRE_THROWS_AS(Field::ext(5, std::vector<u64>{1, 0, 1}), error);  // x^2+1 has root 2 mod 5
    auto F25 = Field::ext(5, 2);
    REQUIRE(F25->size_u64() == 25);
    auto F8_reject = []() {
        try {
            Field::ext(4, 2);
            return false;
        } catch (const error& e) {
            return e.code() == errc::not_prime;
        }
    };
    REQUIRE(F8_reject());
}

TEST_CASE("rational and finite arithmetic basics") {
    auto Q = Field::rationals();
    REQUIRE(Q->from_rational(mpq_class(2, 3)) + Q->from_rational(mpq_class(1, 6)) ==
            Q->from_rational(mpq_class(5, 6)));
    auto F13 = Field::prime(13);
    REQUIRE(F13->inv(F13->from_int(4)) == F13->from_int(10));
    // sqrt(3) inside Q(zeta_12): (z + z^-1)^2 = 3
    auto F = Field::cyclotomic(12);
    auto z = F->generator();
    auto s = z + F->inv(z);
    REQUIRE(s * s == F->from_int(3));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240811);
    auto QF = Field::rationals();
    auto F13 = Field::prime(13);
    auto F25 = Field::ext(5, 2);
    auto C12 = Field::cyclotomic(12);

    auto random_element = [&](const FieldPtr& F) {
        if (F->is_finite()) return F->element_at(rng() % F->size_u64());
        std::vector<mpq_class> c(static_cast<size_t>(F->degree()));
        for (auto& x : c) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = 1 + static_cast<long>(rng() % 7);
            x = mpq_class(num, den);
            x.canonicalize();
        }
        return F->from_coeffs_q(std::move(c));
    };

    for (const FieldPtr& F : {QF, F13, F25, C12}) {
        for (int t = 0; t < 1000; ++t) {
            auto a = random_element(F), b = random_element(F), c = random_element(F);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a * (b + c) == a * b + a * c);
            if (!F->is_zero(a)) REQUIRE(a * F->inv(a) == F->one());
        }
    }
}

TEST_CASE("primitive roots of unity") {
    auto F13 = Field::prime(13);
    auto r = primitive_root_of_unity(F13, 3);
    REQUIRE(F13->pow(r, 3) == F13->one());
    REQUIRE(!(r == F13->one()));

    auto F7 = Field::prime(7);
    REQUIRE_THROWS_MATCHES(primitive_root_of_unity(F7, 5), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::no_such_root; }));

    auto C12 = Field::cyclotomic(12);
    auto i = primitive_root_of_unity(C12, 4);
    REQUIRE(i == C12->pow(C12->generator(), 3));

    // exact-order property across fields and m
    auto F25 = Field::ext(5, 2);
    struct Case {
        FieldPtr F;
        u64 m;
    };
    for (auto& [F, m] : std::vector<Case>{{F13, 12}, {F13, 4}, {F25, 24}, {F25, 8}, {C12, 12},
                                          {C12, 6}, {C12, 2}}) {
        auto w = primitive_root_of_unity(F, m);
        REQUIRE(F->pow(w, static_cast<long long>(m)) == F->one());
        for (u64 ell : nt::prime_divisors(m))
            REQUIRE(!(F->pow(w, static_cast<long long>(m / ell)) == F->one()));
    }
}

TEST_CASE("dth roots") {
    auto F7 = Field::prime(7);
    // oracle: exhaust all cubes of F_7
    std::set<u64> cubes;
    for (u64 v = 0; v < 7; ++v) cubes.insert(v * v * v % 7);
    REQUIRE(cubes.count(2) == 0);
    REQUIRE(dth_root(F7, F7->from_int(2), 3).status == RootStatus::no_root);

    auto Q = Field::rationals();
    auto r8 = dth_root(Q, Q->from_int(8), 3);
    REQUIRE(r8.status == RootStatus::found);
    REQUIRE(r8.value == Q->from_int(2));
    REQUIRE(dth_root(Q, Q->from_int(-8), 3).value == Q->from_int(-2));
    REQUIRE(dth_root(Q, Q->from_int(-4), 2).status == RootStatus::no_root);

    auto F13 = Field::prime(13);
    auto r1 = dth_root(F13, F13->one(), 3);
    REQUIRE(r1.status == RootStatus::found);
    REQUIRE(F13->pow(r1.value, 3) == F13->one());

    // round trip on random finite-field data
    std::mt19937_64 rng(7);
    auto F25 = Field::ext(5, 2);
    for (int t = 0; t < 200; ++t) {
        for (const FieldPtr& F : {F7, F13, F25}) {
            FieldElement a = F->element_at(rng() % F->size_u64());
            for (u64 d : {2ull, 3ull, 4ull}) {
                auto rr = dth_root(F, a, d);
                if (rr.status == RootStatus::found)
                    REQUIRE(F->pow(rr.value, static_cast<long long>(d)) == a);
            }
        }
    }

    // number-field roots: decidable shapes and the unknown state
    auto C12 = Field::cyclotomic(12);
    auto ri = dth_root(C12, C12->from_int(-1), 2);
    REQUIRE(ri.status == RootStatus::found);
    REQUIRE(ri.value * ri.value == C12->from_int(-1));
    auto undec = dth_root(C12, C12->one() + C12->generator(), 3);
    REQUIRE(undec.status == RootStatus::unknown);

    // BSGS branch (q > 2^16)
    auto Fbig = Field::prime(65537);
    auto a2 = Fbig->from_int(424242);
    auto sq = a2 * a2;
    auto rb = dth_root(Fbig, sq, 2);
    REQUIRE(rb.status == RootStatus::found);
    REQUIRE(rb.value * rb.value == sq);
}

TEST_CASE("minimal polynomials over Q") {
    auto C12 = Field::cyclotomic(12);
    auto Q = Field::rationals();
    auto z = C12->generator();
    auto s3 = z + C12->inv(z);
    auto mp = minimal_polynomial_over_Q(s3, Q);
    REQUIRE(mp == Poly::from_ints(Q, {-3, 0, 1}));

    REQUIRE(minimal_polynomial_over_Q(C12->from_int(5), Q) == Poly::from_ints(Q, {-5, 1}));
    REQUIRE(minimal_polynomial_over_Q(z, Q) == Poly::from_ints(Q, {1, 0, -1, 0, 1}));

    // properties: vanishing and degree divisibility
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        std::vector<mpq_class> c(4);
        for (auto& x : c) x = mpq_class(static_cast<long>(rng() % 11) - 5);
        auto a = C12->from_coeffs_q(std::move(c));
        auto coeffs = minimal_polynomial_coeffs(a);
        // evaluate at a
        FieldElement acc = C12->zero();
        FieldElement pw = C12->one();
        for (auto& q : coeffs) {
            acc = acc + C12->from_rational(q) * pw;
            pw = pw * a;
        }
        REQUIRE(C12->is_zero(acc));
        REQUIRE(4 % (coeffs.size() - 1) == 0);
    }
}

TEST_CASE("canonical forms") {
    auto Q = Field::rationals();
    auto half = Q->from_rational(mpq_class(2, 4));
    REQUIRE(half == Q->from_rational(mpq_class(1, 2)));
    auto F13 = Field::prime(13);
    REQUIRE(F13->from_int(-1) == F13->from_int(12));
    // canonical comparison is a strict total order
    REQUIRE(F13->cmp(F13->from_int(3), F13->from_int(5)) < 0);
    REQUIRE(Q->cmp(Q->from_rational(mpq_class(-1, 2)), Q->zero()) < 0);
}

TEST_CASE("mixed-field operations are rejected") {
    auto F7 = Field::prime(7);
    auto F13 = Field::prime(13);
    REQUIRE_THROWS_MATCHES(F7->from_int(1) + F13->from_int(1), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::mixed_fields; }));
    REQUIRE_THROWS_AS(F7->div(F7->one(), F7->zero()), error);
}
