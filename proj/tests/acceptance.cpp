// Acceptance suite: every constructive claim is replayed by exact
// computation, one pass/fail line per criterion. Returns nonzero if any
// criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "seljac/seljac.hpp"

using namespace seljac;

namespace {

int failures = 0;

void run(const char* name, double budget_s, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= budget_s;
    if (!ok || !in_budget) ++failures;
    std::printf("%-4s %s (%.2fs / budget %.0fs)%s%s\n", (ok && in_budget) ? "PASS" : "FAIL", name,
                secs, budget_s, in_budget ? "" : " [over budget]", note.c_str());
    std::fflush(stdout);
}

Poly random_squarefree_monic(const FieldPtr& F, std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<FieldElement> c;
        for (int i = 0; i < n; ++i) c.push_back(F->element_at(rng() % F->size_u64()));
        c.push_back(F->one());
        Poly f(F, std::move(c));
        if (f.degree() == n && is_squarefree(f)) return f;
    }
}

struct FamilyCase {
    u64 p;
    int d, n;
};

const std::vector<FamilyCase> kFamilies{{7, 3, 4}, {7, 2, 5}, {7, 3, 5}, {13, 4, 5}, {11, 2, 7}};

// criterion 1: the point (0, 1) on y^d = x^n + 1 has order exactly n,
// certificate verified, for all five (d, n) families
bool criterion1() {
    for (auto& [p, d, n] : kFamilies) {
        auto F = Field::prime(p);
        auto C = family_mu(F, d, n);
        auto rep = point_order(C, C->point(F->zero(), F->one()), n + 2);
        if (!rep.found || rep.order != n || !rep.verified) return false;
    }
    return true;
}

// criterion 2: on random squarefree f over F_13, ramified points have order
// exactly d and nothing else has order in 2..n-1
bool criterion2() {
    std::mt19937_64 rng(0xacce5501);
    struct P {
        int d, n;
    };
    for (auto& [d, n] : std::vector<P>{{3, 4}, {2, 5}}) {
        auto F = Field::prime(13);
        for (int t = 0; t < 50; ++t) {
            auto C = new_curve(F, d, n, random_squarefree_monic(F, rng, n));
            for (u64 i = 0; i < 13; ++i) {
                for (auto& pt : C->lift_x(F->element_at(i))) {
                    auto rep = point_order(C, pt, n - 1);
                    if (F->is_zero(pt.y())) {
                        if (!rep.found || rep.order != d || !rep.verified) return false;
                    } else {
                        if (rep.found) return false;
                    }
                }
            }
        }
    }
    return true;
}

// criterion 3: check_order_n_at(a) <=> the oracle reports Order(n) at a
bool criterion3() {
    std::mt19937_64 rng(0xacce5503);
    std::vector<FamilyCase> params{{7, 3, 4}, {13, 3, 4}, {11, 2, 5}, {7, 2, 5}, {13, 2, 5}};
    int trials = 0;
    for (int t = 0; trials < 200; ++t) {
        auto& [p, d, n] = params[static_cast<size_t>(t) % params.size()];
        auto F = Field::prime(p);
        auto C = new_curve(F, d, n, random_squarefree_monic(F, rng, n));
        FieldElement a = F->element_at(rng() % p);
        auto res = check_order_n_at(C, a);
        if (res.status == PacketStatus::packet) {
            for (auto& pt : res.packet->points) {
                auto rep = point_order(C, pt, n);
                if (!rep.found || rep.order != n || !rep.verified) return false;
            }
        } else {
            for (auto& pt : C->lift_x(a)) {
                auto rep = point_order(C, pt, n);
                if (rep.found && rep.order == n) return false;
            }
        }
        ++trials;
    }
    return true;
}

// criterion 4: char-5 uniqueness, exhaustive over the family plus random scans
bool criterion4() {
    auto F5 = Field::prime(5);
    auto F25 = Field::ext(5, 2);
    // (d = 2): curves over F_5 with b in F_5^x, curves over F_25 with b in F_25^x
    // (d = 3): mu_3 lives in F_25, so both b-ranges run over the F_25 model
    struct Case {
        FieldPtr K;
        int d;
        u64 brange;  // b in F_{5^j}^x embedded via constants when brange = 5
    };
    std::vector<Case> cases{{F5, 2, 5}, {F25, 2, 25}, {F25, 3, 5}, {F25, 3, 25}};
    for (auto& [K, d, brange] : cases) {
        for (u64 i = 1; i < brange; ++i) {
            FieldElement b =
                (brange == K->size_u64()) ? K->element_at(i) : K->from_int(static_cast<long>(i));
            auto C = family_char_p(K, d, 5, b);
            auto scan = scan_n_packets(C);
            if (!scan.complete || scan.packets.size() != 1) return false;
            if (!K->is_zero(scan.packets[0].a)) return false;
        }
    }
    // random squarefree quintics: packet count is 0 or 1
    std::mt19937_64 rng(0xacce5504);
    for (int t = 0; t < 40; ++t) {
        auto C2 = new_curve(F5, 2, 5, random_squarefree_monic(F5, rng, 5));
        auto s2 = scan_n_packets(C2);
        if (!s2.complete || s2.packets.size() > 1) return false;
        auto C3 = new_curve(F25, 3, 5, random_squarefree_monic(F25, rng, 5));
        auto s3 = scan_n_packets(C3);
        if (!s3.complete || s3.packets.size() > 1) return false;
    }
    return true;
}

// criterion 5: the Picard enumeration with the printed coefficients, orders
// verified modulo 13 and 37
bool criterion5() {
    auto data = enumerate_picard();
    if (data.size() != 6) return false;
    std::vector<Poly> qs;
    for (auto& d : data) {
        bool seen = false;
        for (auto& q : qs) seen = seen || q == d.f;
        if (!seen) qs.push_back(d.f);
    }
    if (qs.size() != 2) return false;
    auto F = qs[0].field();
    auto z = F->generator();
    auto s3 = z + F->inv(z);
    auto build = [&](const FieldElement& s) {
        return Poly(F, {F->from_rational(mpq_class(1, 2)) + F->from_rational(mpq_class(5, 18)) * s,
                        F->from_int(2) + s, F->from_int(3) + s, F->from_int(2), F->one()});
    };
    Poly fplus = build(s3), fminus = build(-s3);
    bool match = (qs[0] == fplus && qs[1] == fminus) || (qs[0] == fminus && qs[1] == fplus);
    if (!match) return false;
    for (u64 p : {13ull, 37ull}) {
        for (int id : {0, 1}) {
            for (auto& d : data) {
                if (d.orbit_id != id) continue;
                auto rep = picard_verify_orders(d, p);
                if (!rep.all_order_4 || rep.orders.size() != 6) return false;
                break;  // the other two data in the orbit share f and points
            }
        }
    }
    return true;
}

// criterion 6: disc(x^4 + (ax+b)^3) = b^8 (256 b - 27 a^4) at 20 rational points
bool criterion6() {
    auto Q = Field::rationals();
    std::mt19937_64 rng(0xacce5506);
    int accepted = 0;
    while (accepted < 20) {
        mpq_class a(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
        mpq_class b(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
        a.canonicalize();
        b.canonicalize();
        FieldElement ae = Q->from_rational(a), be = Q->from_rational(b);
        Poly f = Poly::monomial(Q, 4, Q->one()) + Poly(Q, {be, ae}).pow(3);
        if (f.degree() != 4) continue;
        FieldElement rhs =
            Q->pow(be, 8) * (Q->from_int(256) * be - Q->from_int(27) * Q->pow(ae, 4));
        if (!(discriminant(f) == rhs)) return false;
        ++accepted;
    }
    return true;
}

// criterion 7: the cross-ratio of (1, e, e^2, e^3) is rational exactly for
// n in {4, 6} within 4..12
bool criterion7() {
    for (int n = 4; n <= 12; ++n) {
        auto rep = lemma_gen_check(n, static_cast<u64>(n - 1));
        bool expect_obstructed = !(n == 4 || n == 6);
        if (rep.obstructed != expect_obstructed) return false;
    }
    return true;
}

// criterion 8: zeta consistency: the known genus-1 order, divisibility of
// every computed point order, and the count round trip, across the
// finite-field curves of criteria 1-4 with g <= 3 and q <= 13
bool criterion8() {
    auto F7 = Field::prime(7);
    auto E = new_curve(F7, 2, 3, Poly::from_ints(F7, {1, 0, 0, 1}));
    if (!(jacobian_order(E) == 12)) return false;

    std::vector<CurvePtr> curves;
    for (auto& [p, d, n] : kFamilies) {
        if ((n - 1) * (d - 1) / 2 > 3 || p > 13) continue;  // g <= 3, q <= 13
        curves.push_back(family_mu(Field::prime(p), d, n));
    }
    // the criterion-2 random curves, regenerated from the same seed
    {
        std::mt19937_64 rng(0xacce5501);
        struct P {
            int d, n;
        };
        for (auto& [d, n] : std::vector<P>{{3, 4}, {2, 5}}) {
            auto F13 = Field::prime(13);
            for (int t = 0; t < 50; ++t)
                curves.push_back(new_curve(F13, d, n, random_squarefree_monic(F13, rng, n)));
        }
    }
    // the criterion-4 family curves over F_5 (d = 2; the F_25 models exceed q <= 13)
    {
        auto F5 = Field::prime(5);
        for (long b = 1; b < 5; ++b) curves.push_back(family_char_p(F5, 2, 5, F5->from_int(b)));
    }
    for (auto& C : curves) {
        auto zd = l_polynomial(C);
        auto rec = reconstruct_counts(zd, C->genus());
        for (int k = 1; k <= C->genus(); ++k)
            if (rec[static_cast<size_t>(k - 1)] != zd.counts[static_cast<size_t>(k - 1)])
                return false;
        u64 q = C->field()->size_u64();
        for (u64 i = 0; i < q; ++i) {
            for (auto& pt : C->lift_x(C->field()->element_at(i))) {
                auto rep = point_order(C, pt, C->n());
                if (rep.found && !(zd.jacobian_order % rep.order == 0)) return false;
            }
        }
    }
    return true;
}

// criterion 9: Riemann-Roch dimensions and semigroup gap counts
bool criterion9() {
    std::vector<CurvePtr> curves;
    for (auto& [p, d, n] : kFamilies) curves.push_back(family_mu(Field::prime(p), d, n));
    auto F13 = Field::prime(13);
    curves.push_back(new_curve(F13, 2, 5, Poly::from_ints(F13, {1, -1, 0, 0, 0, 1})));
    for (auto& C : curves) {
        int g = C->genus();
        for (int m = 2 * g - 1; m <= 4 * g; ++m)
            if (static_cast<int>(rr_basis(C, m).size()) != m - g + 1) return false;
        std::set<int> semigroup;
        for (int j = 0; j < C->d(); ++j)
            for (int i = 0; C->d() * i + C->n() * j <= 2 * g; ++i)
                semigroup.insert(C->d() * i + C->n() * j);
        int gaps = 0;
        for (int v = 0; v < 2 * g; ++v)
            if (!semigroup.count(v)) ++gaps;
        if (gaps != g) return false;
    }
    return true;
}

}  // namespace

int main() {
    run("criterion-1 order-n families", 5, criterion1);
    run("criterion-2 order-d classification", 60, criterion2);
    run("criterion-3 criterion/oracle equivalence", 60, criterion3);
    run("criterion-4 char-p uniqueness", 120, criterion4);
    run("criterion-5 picard enumeration", 10, criterion5);
    run("criterion-6 discriminant identity", 10, criterion6);
    run("criterion-7 lemma-gen verdicts", 10, criterion7);
    run("criterion-8 zeta consistency", 120, criterion8);
    run("criterion-9 riemann-roch dimensions", 1, criterion9);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
