#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "seljac/numtheory.hpp"

namespace seljac {

using nt::u64;

enum class errc {
    not_prime,
    reducible_modulus,
    mixed_fields,
    division_by_zero,
    no_such_root,
    undecidable_root,
    not_coprime,
    bad_characteristic,
    not_squarefree,
    not_monic,
    no_dth_root_of_unity,
    degree_order,
    degree_too_small,
    incomplete_factorization,
    root_not_in_field,
    repeated_point,
    degenerate_quadruple,
    hypothesis_failed,
    not_picard_form,
    bad_prime,
    non_integral_coefficient,
    budget_exceeded,
    zero_function,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::mixed_fields: return "MixedFields";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::no_such_root: return "NoSuchRoot";
        case errc::undecidable_root: return "UndecidableRoot";
        case errc::not_coprime: return "NotCoprime";
        case errc::bad_characteristic: return "BadCharacteristic";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::not_monic: return "NotMonic";
        case errc::no_dth_root_of_unity: return "NoDthRootOfUnity";
        case errc::degree_order: return "DegreeOrder";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::incomplete_factorization: return "IncompleteFactorization";
        case errc::root_not_in_field: return "RootNotInField";
        case errc::repeated_point: return "RepeatedPoint";
        case errc::degenerate_quadruple: return "DegenerateQuadruple";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::not_picard_form: return "NotPicardForm";
        case errc::bad_prime: return "BadPrime";
        case errc::non_integral_coefficient: return "NonIntegralCoefficient";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::zero_function: return "ZeroFunction";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

// ===========================================================================
// raw coefficient-vector polynomial arithmetic (implementation substrate)
// ===========================================================================

namespace detail {

using qvec = std::vector<mpq_class>;
using pvec = std::vector<u64>;
using zvec = std::vector<mpz_class>;

inline void qtrim(qvec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
inline int qdeg(const qvec& v) { return static_cast<int>(v.size()) - 1; }

inline qvec qadd(const qvec& a, const qvec& b) {
    qvec r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qtrim(r);
    return r;
}

inline qvec qsub(const qvec& a, const qvec& b) {
    qvec r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qtrim(r);
    return r;
}

inline qvec qmul(const qvec& a, const qvec& b) {
    if (a.empty() || b.empty()) return {};
    qvec r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

inline std::pair<qvec, qvec> qdivrem(const qvec& a, const qvec& b) {
    if (b.empty()) fail(errc::division_by_zero, "rational polynomial division by zero");
    qvec rem = a, quot;
    qtrim(rem);
    int db = qdeg(b);
    if (qdeg(rem) >= db) quot.assign(qdeg(rem) - db + 1, mpq_class(0));
    while (qdeg(rem) >= db) {
        mpq_class c = rem.back() / b.back();
        int k = qdeg(rem) - db;
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= c * b[i];
        qtrim(rem);
    }
    qtrim(quot);
    return {quot, rem};
}

inline qvec qgcd_monic(qvec a, qvec b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        qvec r = qdivrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        mpq_class lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

inline qvec qderiv(const qvec& a) {
    qvec r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * mpq_class(static_cast<long>(i)));
    qtrim(r);
    return r;
}

inline mpq_class qeval(const qvec& f, const mpq_class& x) {
    mpq_class r(0);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

/// m-th cyclotomic polynomial via the divisor recursion; exact, integral.
inline qvec cyclotomic_poly(int m) {
    if (m < 1) fail(errc::bad_input, "cyclotomic index must be positive");
    qvec num(static_cast<size_t>(m) + 1, mpq_class(0));
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = qdivrem(num, cyclotomic_poly(d)).first;
    }
    return num;
}

inline void ptrim(pvec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
inline int pdeg(const pvec& v) { return static_cast<int>(v.size()) - 1; }

inline pvec padd(const pvec& a, const pvec& b, u64 p) {
    pvec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = nt::addmod(r[i], b[i], p);
    ptrim(r);
    return r;
}

inline pvec psub(const pvec& a, const pvec& b, u64 p) {
    pvec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = nt::submod(r[i], b[i], p);
    ptrim(r);
    return r;
}

inline pvec pmul(const pvec& a, const pvec& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    pvec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = nt::addmod(r[i + j], nt::mulmod(a[i], b[j], p), p);
    }
    ptrim(r);
    return r;
}

inline std::pair<pvec, pvec> pdivrem(const pvec& a, const pvec& b, u64 p) {
    if (b.empty()) fail(errc::division_by_zero, "modular polynomial division by zero");
    pvec rem = a, quot;
    ptrim(rem);
    int db = pdeg(b);
    u64 binv = nt::invmod(b.back(), p);
    if (pdeg(rem) >= db) quot.assign(pdeg(rem) - db + 1, 0);
    while (pdeg(rem) >= db) {
        u64 c = nt::mulmod(rem.back(), binv, p);
        int k = pdeg(rem) - db;
        quot[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(k + i)] =
                nt::submod(rem[static_cast<size_t>(k + i)], nt::mulmod(c, b[i], p), p);
        ptrim(rem);
    }
    ptrim(quot);
    return {quot, rem};
}

inline pvec pmod(const pvec& a, const pvec& b, u64 p) { return pdivrem(a, b, p).second; }

inline pvec pmonic(const pvec& a, u64 p) {
    if (a.empty() || a.back() == 1) return a;
    u64 inv = nt::invmod(a.back(), p);
    pvec r = a;
    for (auto& c : r) c = nt::mulmod(c, inv, p);
    return r;
}

inline pvec pgcd(pvec a, pvec b, u64 p) {
    while (!b.empty()) {
        pvec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

/// extended gcd over F_p[x]: returns (g, s, t) monic g with s*a + t*b = g
inline std::tuple<pvec, pvec, pvec> pextgcd(pvec a, pvec b, u64 p) {
    pvec s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = pdivrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
        pvec s2 = psub(s0, pmul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        pvec t2 = psub(t0, pmul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = nt::invmod(a.back(), p);
        for (auto& c : a) c = nt::mulmod(c, inv, p);
        for (auto& c : s0) c = nt::mulmod(c, inv, p);
        for (auto& c : t0) c = nt::mulmod(c, inv, p);
    }
    return {a, s0, t0};
}

inline pvec pderiv(const pvec& a, u64 p) {
    pvec r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(nt::mulmod(a[i], i % p, p));
    ptrim(r);
    return r;
}

inline u64 peval(const pvec& f, u64 x, u64 p) {
    u64 r = 0;
    for (size_t i = f.size(); i-- > 0;) r = nt::addmod(nt::mulmod(r, x, p), f[i], p);
    return r;
}

inline pvec ppowmod(const pvec& base, const mpz_class& e, const pvec& f, u64 p) {
    pvec result{1};
    pvec b = pmod(base, f, p);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = pmod(pmul(result, b, p), f, p);
        b = pmod(pmul(b, b, p), f, p);
        k >>= 1;
    }
    return result;
}

/// x^(p^k) == x test plus gcd checks at maximal proper subfield degrees.
inline bool irreducible_mod_p(const pvec& f, u64 p) {
    int k = pdeg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    pvec x{0, 1};
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    if (!psub(ppowmod(x, pk, f, p), x, p).empty()) return false;
    for (u64 ell : nt::prime_divisors(static_cast<u64>(k))) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(k / ell));
        pvec g = pgcd(psub(ppowmod(x, pe, f, p), x, p), f, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

/// Distinct-degree split of monic squarefree f: (degree, product of factors).
inline std::vector<std::pair<int, pvec>> ddf_mod_p(pvec f, u64 p) {
    std::vector<std::pair<int, pvec>> out;
    pvec x{0, 1};
    pvec h = x;
    int i = 0;
    while (pdeg(f) > 0) {
        ++i;
        if (2 * i > pdeg(f)) {
            out.emplace_back(pdeg(f), f);
            break;
        }
        h = ppowmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
        pvec g = pgcd(psub(h, x, p), f, p);
        if (pdeg(g) > 0) {
            out.emplace_back(i, g);
            f = pdivrem(f, g, p).first;
            h = pmod(h, f, p);
        }
    }
    return out;
}

struct splitmix64 {
    u64 s;
    explicit splitmix64(u64 seed) : s(seed) {}
    u64 next() {
        u64 z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

/// Cantor-Zassenhaus equal-degree splitting; p odd.
inline void edf_mod_p(const pvec& f, int d, u64 p, splitmix64& rng, std::vector<pvec>& out) {
    if (pdeg(f) == d) {
        out.push_back(pmonic(f, p));
        return;
    }
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    mpz_class e = (qd - 1) / 2;
    for (;;) {
        pvec r(static_cast<size_t>(pdeg(f)), 0);
        for (auto& c : r) c = rng.next() % p;
        ptrim(r);
        if (pdeg(r) < 1) continue;
        pvec g = pgcd(r, f, p);
        if (pdeg(g) == 0) {
            g = pgcd(psub(ppowmod(r, e, f, p), pvec{1}, p), f, p);
        }
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            edf_mod_p(g, d, p, rng, out);
            edf_mod_p(pdivrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

/// Full factorization of monic squarefree f over F_p (p odd), sorted.
inline std::vector<pvec> factor_mod_p(const pvec& f, u64 p) {
    std::vector<pvec> out;
    splitmix64 rng(0x5e1f0c7aull ^ p);
    for (auto& [d, block] : ddf_mod_p(pmonic(f, p), p)) edf_mod_p(block, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- integer polynomial helpers (rational irreducibility search) ----------

inline void ztrim(zvec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
inline int zdeg(const zvec& v) { return static_cast<int>(v.size()) - 1; }

inline zvec zmul(const zvec& a, const zvec& b) {
    if (a.empty() || b.empty()) return {};
    zvec r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

inline zvec zmod_vec(const zvec& a, const mpz_class& m) {
    zvec r = a;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(r);
    return r;
}

inline zvec zaddm(const zvec& a, const zvec& b, const mpz_class& m) {
    zvec r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zmod_vec(r, m);
}

inline zvec zsubm(const zvec& a, const zvec& b, const mpz_class& m) {
    zvec r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zmod_vec(r, m);
}

inline zvec zmulm(const zvec& a, const zvec& b, const mpz_class& m) {
    return zmod_vec(zmul(a, b), m);
}

/// divrem by a monic polynomial with coefficients reduced mod m
inline std::pair<zvec, zvec> zdivrem_monic_mod(const zvec& a, const zvec& b, const mpz_class& m) {
    zvec rem = zmod_vec(a, m), quot;
    int db = zdeg(b);
    if (zdeg(rem) >= db) quot.assign(static_cast<size_t>(zdeg(rem) - db + 1), mpz_class(0));
    while (zdeg(rem) >= db) {
        mpz_class c = rem.back();
        int k = zdeg(rem) - db;
        quot[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) {
            mpz_class& t = rem[static_cast<size_t>(k + i)];
            t -= c * b[static_cast<size_t>(i)];
            t %= m;
            if (t < 0) t += m;
        }
        ztrim(rem);
    }
    ztrim(quot);
    return {quot, rem};
}

inline mpz_class zcontent(const zvec& a) {
    mpz_class g = 0;
    for (auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// true iff b divides a in Q[x]
inline bool zdivides(const zvec& b, const zvec& a) {
    if (b.empty()) return a.empty();
    qvec qa(a.size()), qb(b.size());
    for (size_t i = 0; i < a.size(); ++i) qa[i] = mpq_class(a[i]);
    for (size_t i = 0; i < b.size(); ++i) qb[i] = mpq_class(b[i]);
    qtrim(qa);
    qtrim(qb);
    return qdivrem(qa, qb).second.empty();
}

// f = g*h (mod m), s*g + t*h = 1 (mod m), g monic, lc(h) = lc(f) mod m.
struct hensel_pair {
    zvec g, h, s, t;
};

/// one quadratic Hensel step: all congruences lifted from mod m to mod m^2
inline hensel_pair hensel_step(const zvec& f, const hensel_pair& in, const mpz_class& m) {
    mpz_class m2 = m * m;
    hensel_pair out;
    zvec e = zsubm(zmod_vec(f, m2), zmulm(in.g, in.h, m2), m2);
    // solve g*dh + h*dg = e with deg(dg) < deg(g):  dg = (t*e mod g)
    zvec dg = zdivrem_monic_mod(zmulm(in.t, e, m2), in.g, m2).second;
    zvec num = zsubm(e, zmulm(in.h, dg, m2), m2);
    auto [dh, r0] = zdivrem_monic_mod(num, in.g, m2);
    if (!r0.empty()) fail(errc::bad_input, "hensel: inexact division (internal)");
    out.g = zaddm(in.g, dg, m2);
    out.h = zaddm(in.h, dh, m2);
    // lift the Bezout pair: solve g*ds + h*dt = -b with deg(dt) < deg(g)
    zvec b = zsubm(zaddm(zmulm(in.s, out.g, m2), zmulm(in.t, out.h, m2), m2), zvec{mpz_class(1)}, m2);
    zvec dt = zdivrem_monic_mod(zmulm(in.t, b, m2), out.g, m2).second;
    for (auto& c : dt) c = (c == 0) ? mpz_class(0) : mpz_class(m2 - c);
    ztrim(dt);
    zvec num2 = zsubm(zvec{}, zaddm(b, zmulm(out.h, dt, m2), m2), m2);
    auto [ds, r1] = zdivrem_monic_mod(num2, out.g, m2);
    if (!r1.empty()) fail(errc::bad_input, "hensel: inexact bezout division (internal)");
    out.s = zaddm(in.s, ds, m2);
    out.t = zaddm(in.t, dt, m2);
    return out;
}

inline std::set<int> subset_sums(const std::vector<int>& degs) {
    std::set<int> sums{0};
    for (int d : degs) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

/// Decides irreducibility of a monic rational polynomial of degree <= 12 by
/// degree patterns mod several primes followed by a modular-factor
/// recombination search. Returns true iff irreducible over Q.
inline bool irreducible_over_q(const qvec& fq) {
    int n = qdeg(fq);
    if (n < 1) return false;
    if (n == 1) return true;
    // repeated factors mean reducible
    if (qdeg(qgcd_monic(fq, qderiv(fq))) > 0) return false;
    // clear denominators, take the primitive integer model
    mpz_class lcm(1);
    for (auto& c : fq) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    zvec F(fq.size());
    for (size_t i = 0; i < fq.size(); ++i) {
        mpq_class t = fq[i] * mpq_class(lcm);
        F[i] = t.get_num();
    }
    mpz_class cont = zcontent(F);
    if (cont > 1)
        for (auto& c : F) c /= cont;
    if (F[0] == 0) return false;  // x divides
    // degree patterns mod good primes
    std::vector<u64> good;
    std::vector<std::vector<int>> patterns;
    std::set<int> candidates;
    bool first = true;
    for (u64 p = 3; good.size() < 6 && p < 2000; p += 2) {
        if (!nt::is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(F.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        pvec fp(F.size());
        for (size_t i = 0; i < F.size(); ++i) {
            mpz_class r = F[i] % static_cast<long>(p);
            if (r < 0) r += static_cast<long>(p);
            fp[i] = r.get_ui();
        }
        ptrim(fp);
        if (pdeg(fp) != n) continue;
        fp = pmonic(fp, p);
        if (pdeg(pgcd(fp, pderiv(fp, p), p)) != 0) continue;  // not squarefree mod p
        std::vector<int> degs;
        for (auto& [d, block] : ddf_mod_p(fp, p))
            for (int c = 0; c < pdeg(block) / d; ++c) degs.push_back(d);
        good.push_back(p);
        patterns.push_back(degs);
        std::set<int> sums = subset_sums(degs);
        std::set<int> proper;
        for (int s : sums)
            if (s >= 1 && s <= n - 1) proper.insert(s);
        if (first) {
            candidates = proper;
            first = false;
        } else {
            std::set<int> inter;
            for (int s : candidates)
                if (proper.count(s)) inter.insert(s);
            candidates = std::move(inter);
        }
        if (candidates.empty()) return true;
    }
    if (good.empty()) fail(errc::bad_input, "no usable prime for irreducibility check");
    // recombination search at the prime with the fewest modular factors
    size_t best = 0;
    for (size_t i = 1; i < good.size(); ++i)
        if (patterns[i].size() < patterns[best].size()) best = i;
    u64 p = good[best];
    pvec fp(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
        mpz_class r = F[i] % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        fp[i] = r.get_ui();
    }
    std::vector<pvec> mods = factor_mod_p(pmonic(fp, p), p);
    size_t r = mods.size();
    if (r == 1) return true;
    // coefficient bound for lc(F)-normalized factors
    mpz_class maxc(0);
    for (auto& c : F) {
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
    }
    mpz_class lcF = abs(F.back());
    mpz_class R = 1 + maxc / lcF + 1;  // >= 1 + max|F_i|/|lc|
    mpz_class B = lcF;
    for (int i = 0; i < n; ++i) B *= 2 * R;
    // lift each candidate split to precision > 2B
    for (u64 mask = 1; mask + 1 < (1ull << r); ++mask) {
        int e = 0;
        for (size_t i = 0; i < r; ++i)
            if (mask & (1ull << i)) e += pdeg(mods[i]);
        if (e < 1 || 2 * e > n) continue;
        if (!candidates.empty() && !candidates.count(e)) continue;
        // modular split f = lc * g0 * h0
        pvec g0{1}, h0{1};
        for (size_t i = 0; i < r; ++i) {
            if (mask & (1ull << i))
                g0 = pmul(g0, mods[i], p);
            else
                h0 = pmul(h0, mods[i], p);
        }
        // scale h0 so lc(h) = lc(F) mod p
        mpz_class lcmod = F.back() % static_cast<long>(p);
        if (lcmod < 0) lcmod += static_cast<long>(p);
        u64 lcu = lcmod.get_ui();
        for (auto& c : h0) c = nt::mulmod(c, lcu, p);
        auto [gBez, sB, tB] = pextgcd(g0, h0, p);
        if (pdeg(gBez) != 0) continue;  // not coprime; skip (cannot happen: squarefree mod p)
        hensel_pair hp;
        auto lift_v = [&](const pvec& v) {
            zvec z(v.size());
            for (size_t i = 0; i < v.size(); ++i) z[i] = mpz_class(static_cast<unsigned long>(v[i]));
            return z;
        };
        hp.g = lift_v(g0);
        hp.h = lift_v(h0);
        hp.s = lift_v(sB);
        hp.t = lift_v(tB);
        mpz_class m(static_cast<unsigned long>(p));
        while (m <= 2 * B) {
            hp = hensel_step(F, hp, m);
            m = m * m;
        }
        // center, scale by lc, take primitive part, test divisibility
        zvec cand = hp.g;
        for (auto& c : cand) {
            c = (c * lcF) % m;
            if (c < 0) c += m;
            if (2 * c > m) c -= m;
        }
        ztrim(cand);
        if (zdeg(cand) != e) continue;
        mpz_class cc = zcontent(cand);
        if (cc > 1)
            for (auto& c : cand) c /= cc;
        if (zdivides(cand, F)) return false;
    }
    return true;
}

}  // namespace detail

// ===========================================================================
// fields and elements
// ===========================================================================

enum class FieldKind { rationals, number_field, prime_field, ext_field };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr owner, std::vector<mpq_class> qc, std::vector<u64> rc)
        : owner_(std::move(owner)), q_(std::move(qc)), r_(std::move(rc)) {}

    const FieldPtr& owner() const { return owner_; }
    bool valid() const { return owner_ != nullptr; }
    const std::vector<mpq_class>& qcoeffs() const { return q_; }
    const std::vector<u64>& rcoeffs() const { return r_; }

    // arithmetic operators are defined after Field below

private:
    FieldPtr owner_;
    std::vector<mpq_class> q_;  // characteristic 0: length = degree
    std::vector<u64> r_;        // characteristic p: length = degree
    friend class Field;
};

/// An exact field: Q, a number field Q[x]/(m), F_p, or F_p[x]/(m).
/// Handles are immutable and shared; elements keep a handle to their owner.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals() {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::rationals;
        f->p_ = 0;
        f->degree_ = 1;
        f->verified_ = true;
        return f;
    }

    static FieldPtr prime(u64 p) {
        if (!nt::is_prime_u64(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::prime_field;
        f->p_ = p;
        f->degree_ = 1;
        f->verified_ = true;
        return f;
    }

    /// F_{p^deg} with the given monic minimal polynomial over F_p.
    static FieldPtr ext(u64 p, std::vector<u64> minpoly) {
        if (!nt::is_prime_u64(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
        detail::ptrim(minpoly);
        int deg = detail::pdeg(minpoly);
        if (deg < 1) fail(errc::bad_input, "extension modulus must be nonconstant");
        for (auto& c : minpoly) c %= p;
        if (minpoly.back() != 1) fail(errc::not_monic, "extension modulus must be monic");
        if (!detail::irreducible_mod_p(minpoly, p))
            fail(errc::reducible_modulus, "modulus is reducible over F_p");
        if (deg == 1) return prime(p);
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::ext_field;
        f->p_ = p;
        f->degree_ = deg;
        f->minpoly_p_ = std::move(minpoly);
        f->verified_ = true;
        return f;
    }

    /// F_{p^deg} with the first monic irreducible modulus in the canonical
    /// coefficient order.
    static FieldPtr ext(u64 p, int deg) {
        if (!nt::is_prime_u64(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
        if (deg < 1) fail(errc::bad_input, "extension degree must be positive");
        if (deg == 1) return prime(p);
        std::vector<u64> m(static_cast<size_t>(deg) + 1, 0);
        m[static_cast<size_t>(deg)] = 1;
        for (;;) {
            if (detail::irreducible_mod_p(m, p)) return ext(p, m);
            // increment the lower coefficients as base-p digits
            size_t i = 0;
            for (;;) {
                if (i + 1 >= m.size()) fail(errc::bad_input, "no irreducible modulus found");
                if (++m[i] < p) break;
                m[i] = 0;
                ++i;
            }
        }
    }

    /// Q[x]/(minpoly); minpoly monic, irreducibility verified up to degree 12.
    static FieldPtr number_field(std::vector<mpq_class> minpoly) {
        detail::qtrim(minpoly);
        int deg = detail::qdeg(minpoly);
        if (deg < 1) fail(errc::bad_input, "number field modulus must be nonconstant");
        if (minpoly.back() != 1) fail(errc::not_monic, "number field modulus must be monic");
        if (deg == 1) return rationals();
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::number_field;
        f->p_ = 0;
        f->degree_ = deg;
        f->minpoly_q_ = std::move(minpoly);
        if (deg <= 12) {
            if (!detail::irreducible_over_q(f->minpoly_q_))
                fail(errc::reducible_modulus, "modulus is reducible over Q");
            f->verified_ = true;
        } else {
            f->verified_ = false;  // accepted as trusted, flagged
        }
        return f;
    }

    /// Q(zeta_m), primitive element the class of x (a primitive m-th root).
    static FieldPtr cyclotomic(int m) {
        if (m < 1) fail(errc::bad_input, "cyclotomic index must be positive");
        if (m <= 2) {
            auto f = rationals();
            return f;
        }
        auto minp = detail::cyclotomic_poly(m);
        auto f = std::const_pointer_cast<Field>(number_field(minp));
        f->cyclotomic_m_ = m;
        return f;
    }

    FieldKind kind() const { return kind_; }
    u64 characteristic() const { return p_; }
    int degree() const { return degree_; }
    bool is_finite() const { return p_ != 0; }
    int cyclotomic_index() const { return cyclotomic_m_; }
    bool minpoly_verified() const { return verified_; }
    const std::vector<mpq_class>& minpoly_q() const { return minpoly_q_; }
    const std::vector<u64>& minpoly_p() const { return minpoly_p_; }

    /// field size q = p^degree (finite fields only; must fit in 64 bits)
    u64 size_u64() const {
        if (!is_finite()) fail(errc::bad_input, "infinite field has no size");
        u64 q = 1;
        for (int i = 0; i < degree_; ++i) {
            if (q > UINT64_MAX / p_) fail(errc::budget_exceeded, "field size exceeds 64 bits");
            q *= p_;
        }
        return q;
    }

    bool same(const Field& o) const {
        if (this == &o) return true;
        return kind_ == o.kind_ && p_ == o.p_ && degree_ == o.degree_ &&
               minpoly_q_ == o.minpoly_q_ && minpoly_p_ == o.minpoly_p_;
    }
    bool same(const FieldPtr& o) const { return o && same(*o); }

    // ---- element construction ----

    FieldElement zero() const { return from_int(0); }
    FieldElement one() const { return from_int(1); }

    FieldElement from_int(long v) const {
        if (is_finite()) {
            long m = static_cast<long>(p_);
            long r = v % m;
            if (r < 0) r += m;
            std::vector<u64> c(static_cast<size_t>(degree_), 0);
            c[0] = static_cast<u64>(r);
            return FieldElement(self(), {}, std::move(c));
        }
        std::vector<mpq_class> c(static_cast<size_t>(degree_), mpq_class(0));
        c[0] = v;
        return FieldElement(self(), std::move(c), {});
    }

    FieldElement from_rational(const mpq_class& v) const {
        if (is_finite()) {
            mpz_class den = v.get_den();
            if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
                fail(errc::bad_prime, "denominator not invertible mod p");
            mpz_class num = v.get_num() % static_cast<long>(p_);
            if (num < 0) num += static_cast<long>(p_);
            mpz_class dm = den % static_cast<long>(p_);
            u64 r = nt::mulmod(num.get_ui(), nt::invmod(dm.get_ui(), p_), p_);
            std::vector<u64> c(static_cast<size_t>(degree_), 0);
            c[0] = r;
            return FieldElement(self(), {}, std::move(c));
        }
        std::vector<mpq_class> c(static_cast<size_t>(degree_), mpq_class(0));
        c[0] = v;
        c[0].canonicalize();
        return FieldElement(self(), std::move(c), {});
    }

    /// characteristic-0 element from its power-basis coordinates
    FieldElement from_coeffs_q(std::vector<mpq_class> c) const {
        if (is_finite()) fail(errc::mixed_fields, "rational coordinates in positive characteristic");
        for (auto& x : c) x.canonicalize();
        qreduce(c);
        return FieldElement(self(), std::move(c), {});
    }

    /// characteristic-p element from its power-basis coordinates
    FieldElement from_coeffs_p(std::vector<u64> c) const {
        if (!is_finite()) fail(errc::mixed_fields, "residue coordinates in characteristic 0");
        for (auto& x : c) x %= p_;
        preduce(c);
        return FieldElement(self(), {}, std::move(c));
    }

    /// the class of x (the defining root; zeta_m for cyclotomic fields)
    FieldElement generator() const {
        if (degree_ < 2) fail(errc::bad_input, "prime field has no proper generator element");
        if (is_finite()) {
            std::vector<u64> c(static_cast<size_t>(degree_), 0);
            c[1] = 1;
            return FieldElement(self(), {}, std::move(c));
        }
        std::vector<mpq_class> c(static_cast<size_t>(degree_), mpq_class(0));
        c[1] = 1;
        return FieldElement(self(), std::move(c), {});
    }

    /// canonical enumeration of a finite field: index digits in base p,
    /// lowest power-basis coordinate first
    FieldElement element_at(u64 idx) const {
        if (!is_finite()) fail(errc::bad_input, "cannot enumerate an infinite field");
        std::vector<u64> c(static_cast<size_t>(degree_), 0);
        for (int i = 0; i < degree_; ++i) {
            c[static_cast<size_t>(i)] = idx % p_;
            idx /= p_;
        }
        return FieldElement(self(), {}, std::move(c));
    }

    u64 index_of(const FieldElement& a) const {
        check_owner(a);
        u64 idx = 0;
        for (int i = degree_; i-- > 0;) idx = idx * p_ + a.r_[static_cast<size_t>(i)];
        return idx;
    }

    // ---- arithmetic ----

    bool is_zero(const FieldElement& a) const {
        check_owner(a);
        if (is_finite()) {
            for (auto c : a.r_)
                if (c) return false;
            return true;
        }
        for (auto& c : a.q_)
            if (c != 0) return false;
        return true;
    }

    bool eq(const FieldElement& a, const FieldElement& b) const {
        check_owner(a);
        check_owner(b);
        return is_finite() ? a.r_ == b.r_ : a.q_ == b.q_;
    }

    /// canonical total order on elements (for deterministic serialization)
    int cmp(const FieldElement& a, const FieldElement& b) const {
        check_owner(a);
        check_owner(b);
        if (is_finite()) {
            for (size_t i = 0; i < a.r_.size(); ++i) {
                if (a.r_[i] != b.r_[i]) return a.r_[i] < b.r_[i] ? -1 : 1;
            }
            return 0;
        }
        for (size_t i = 0; i < a.q_.size(); ++i) {
            int c = ::cmp(a.q_[i], b.q_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check_owner(a);
        check_owner(b);
        if (is_finite()) {
            std::vector<u64> c(a.r_.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = nt::addmod(a.r_[i], b.r_[i], p_);
            return FieldElement(self(), {}, std::move(c));
        }
        std::vector<mpq_class> c(a.q_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.q_[i] + b.q_[i];
        return FieldElement(self(), std::move(c), {});
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check_owner(a);
        check_owner(b);
        if (is_finite()) {
            std::vector<u64> c(a.r_.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = nt::submod(a.r_[i], b.r_[i], p_);
            return FieldElement(self(), {}, std::move(c));
        }
        std::vector<mpq_class> c(a.q_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.q_[i] - b.q_[i];
        return FieldElement(self(), std::move(c), {});
    }

    FieldElement neg(const FieldElement& a) const {
        check_owner(a);
        if (is_finite()) {
            std::vector<u64> c(a.r_.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = a.r_[i] ? p_ - a.r_[i] : 0;
            return FieldElement(self(), {}, std::move(c));
        }
        std::vector<mpq_class> c(a.q_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = -a.q_[i];
        return FieldElement(self(), std::move(c), {});
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check_owner(a);
        check_owner(b);
        if (degree_ == 1) {
            if (is_finite())
                return FieldElement(self(), {}, {nt::mulmod(a.r_[0], b.r_[0], p_)});
            return FieldElement(self(), {a.q_[0] * b.q_[0]}, {});
        }
        if (is_finite()) {
            std::vector<u64> c = detail::pmul(a.r_, b.r_, p_);
            preduce(c);
            return FieldElement(self(), {}, std::move(c));
        }
        std::vector<mpq_class> c = detail::qmul(a.q_, b.q_);
        qreduce(c);
        return FieldElement(self(), std::move(c), {});
    }

    FieldElement inv(const FieldElement& a) const {
        check_owner(a);
        if (is_zero(a)) fail(errc::division_by_zero, "inverse of zero");
        if (degree_ == 1) {
            if (is_finite()) return FieldElement(self(), {}, {nt::invmod(a.r_[0], p_)});
            return FieldElement(self(), {mpq_class(1) / a.q_[0]}, {});
        }
        if (is_finite()) {
            detail::pvec av = a.r_;
            detail::ptrim(av);
            auto [g, s, t] = detail::pextgcd(av, minpoly_p_, p_);
            // g == 1 since the modulus is irreducible and a != 0
            std::vector<u64> c = detail::pmod(s, minpoly_p_, p_);
            preduce(c);
            return FieldElement(self(), {}, std::move(c));
        }
        // extended euclid over Q[x]
        detail::qvec r0 = minpoly_q_, r1 = a.q_;
        detail::qtrim(r1);
        detail::qvec t0{}, t1{mpq_class(1)};
        while (!r1.empty()) {
            auto [q, r2] = detail::qdivrem(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r2);
            detail::qvec t2 = detail::qsub(t0, detail::qmul(q, t1));
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd (a nonzero constant); inverse = t0 / r0
        mpq_class lead = r0[0];
        std::vector<mpq_class> c = t0;
        for (auto& x : c) x /= lead;
        qreduce(c);
        return FieldElement(self(), std::move(c), {});
    }

    FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

    FieldElement pow(const FieldElement& a, long long e) const {
        check_owner(a);
        if (e < 0) return pow(inv(a), -e);
        FieldElement r = one(), b = a;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1) r = mul(r, b);
            b = mul(b, b);
            k >>= 1;
        }
        return r;
    }

    /// multiplicative order (finite fields; a != 0)
    u64 mult_order(const FieldElement& a) const {
        if (is_zero(a)) fail(errc::division_by_zero, "order of zero");
        u64 n = size_u64() - 1;
        u64 ord = n;
        for (auto& [pr, ex] : nt::factor_u64(n)) {
            for (int i = 0; i < ex; ++i) {
                if (eq(pow(a, static_cast<long long>(ord / pr)), one()))
                    ord /= pr;
                else
                    break;
            }
        }
        return ord;
    }

    /// true when every coordinate above the constant one vanishes
    bool is_rational_embedded(const FieldElement& a) const {
        check_owner(a);
        if (is_finite()) {
            for (size_t i = 1; i < a.r_.size(); ++i)
                if (a.r_[i]) return false;
            return true;
        }
        for (size_t i = 1; i < a.q_.size(); ++i)
            if (a.q_[i] != 0) return false;
        return true;
    }

    mpq_class rational_value(const FieldElement& a) const {
        if (!is_rational_embedded(a) || is_finite())
            fail(errc::bad_input, "element is not an embedded rational");
        return a.q_[0];
    }

    std::string to_string(const FieldElement& a) const {
        check_owner(a);
        if (degree_ == 1) {
            if (is_finite()) return std::to_string(a.r_[0]);
            return a.q_[0].get_str();
        }
        std::string s = "[";
        for (int i = 0; i < degree_; ++i) {
            if (i) s += ",";
            s += is_finite() ? std::to_string(a.r_[static_cast<size_t>(i)])
                             : a.q_[static_cast<size_t>(i)].get_str();
        }
        return s + "]";
    }

    void check_owner(const FieldElement& a) const {
        if (!a.valid() || !same(*a.owner()))
            fail(errc::mixed_fields, "element does not belong to this field");
    }

private:
    Field() = default;
    FieldPtr self() const { return shared_from_this(); }

    void qreduce(std::vector<mpq_class>& c) const {
        if (kind_ == FieldKind::number_field) {
            detail::qvec v = c;
            detail::qtrim(v);
            if (detail::qdeg(v) >= degree_) v = detail::qdivrem(v, minpoly_q_).second;
            v.resize(static_cast<size_t>(degree_), mpq_class(0));
            c = std::move(v);
        } else {
            c.resize(1);
        }
    }

    void preduce(std::vector<u64>& c) const {
        if (kind_ == FieldKind::ext_field) {
            detail::pvec v = c;
            detail::ptrim(v);
            if (detail::pdeg(v) >= degree_) v = detail::pmod(v, minpoly_p_, p_);
            v.resize(static_cast<size_t>(degree_), 0);
            c = std::move(v);
        } else {
            c.resize(1);
        }
    }

    FieldKind kind_ = FieldKind::rationals;
    u64 p_ = 0;
    int degree_ = 1;
    std::vector<mpq_class> minpoly_q_;
    std::vector<u64> minpoly_p_;
    int cyclotomic_m_ = 0;
    bool verified_ = true;
};

// ---- element operator sugar ------------------------------------------------

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return a.owner()->add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a.owner()->sub(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return a.owner()->mul(a, b);
}
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a.owner()->div(a, b);
}
inline FieldElement operator-(const FieldElement& a) { return a.owner()->neg(a); }
inline bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.owner()->eq(a, b);
}
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

// ===========================================================================
// roots of unity and d-th roots
// ===========================================================================

/// An element of exact multiplicative order m, or a NoSuchRoot error carrying
/// the divisibility witness.
inline FieldElement primitive_root_of_unity(const FieldPtr& F, u64 m) {
    if (m == 0) fail(errc::bad_input, "order must be positive");
    if (m == 1) return F->one();
    if (F->is_finite()) {
        u64 q = F->size_u64();
        if ((q - 1) % m != 0)
            fail(errc::no_such_root, "no element of order " + std::to_string(m) + ": " +
                                         std::to_string(m) + " does not divide q-1 = " +
                                         std::to_string(q - 1));
        u64 cof = (q - 1) / m;
        auto prime_factors = nt::prime_divisors(m);
        for (u64 idx = 1; idx < q; ++idx) {
            FieldElement g = F->element_at(idx);
            if (F->is_zero(g)) continue;
            FieldElement r = F->pow(g, static_cast<long long>(cof));
            if (!(F->pow(r, static_cast<long long>(m)) == F->one())) continue;
            bool exact = true;
            for (u64 ell : prime_factors) {
                if (F->pow(r, static_cast<long long>(m / ell)) == F->one()) {
                    exact = false;
                    break;
                }
            }
            if (exact) return r;
        }
        fail(errc::no_such_root, "exhausted field without finding an order-" + std::to_string(m) +
                                     " element (internal)");
    }
    if (m == 2) return F->from_int(-1);
    if (F->cyclotomic_index() > 0) {
        u64 M = static_cast<u64>(F->cyclotomic_index());
        if (M % m != 0)
            fail(errc::no_such_root, "no mu_" + std::to_string(m) + " in Q(zeta_" +
                                         std::to_string(M) + "): " + std::to_string(m) +
                                         " does not divide " + std::to_string(M));
        return F->pow(F->generator(), static_cast<long long>(M / m));
    }
    fail(errc::no_such_root,
         "roots of unity of order " + std::to_string(m) +
             " are only available in cyclotomic number fields (pass m | M)");
}

enum class RootStatus { found, no_root, unknown };

struct RootResult {
    RootStatus status = RootStatus::no_root;
    FieldElement value;  // valid only when status == found

    static RootResult ok(FieldElement v) { return {RootStatus::found, std::move(v)}; }
    static RootResult none() { return {RootStatus::no_root, {}}; }
    static RootResult undecided() { return {RootStatus::unknown, {}}; }
};

/// r with r^d = a, when decidable. Finite fields decide always; Q decides by
/// integer root extraction; general number fields return unknown except for
/// elements of the form zeta^(j d) * (rational with a rational d-th root).
inline RootResult dth_root(const FieldPtr& F, const FieldElement& a, u64 d) {
    if (d == 0) fail(errc::bad_input, "root index must be positive");
    if (d == 1) return RootResult::ok(a);
    if (F->is_zero(a)) return RootResult::ok(F->zero());
    if (F->is_finite()) {
        u64 q = F->size_u64();
        u64 g = nt::gcd_u64(d, q - 1);
        // solvability: a^((q-1)/g) == 1
        if (!(F->pow(a, static_cast<long long>((q - 1) / g)) == F->one()))
            return RootResult::none();
        if (q <= (1u << 16)) {
            for (u64 idx = 1; idx < q; ++idx) {
                FieldElement r = F->element_at(idx);
                if (F->pow(r, static_cast<long long>(d)) == a) return RootResult::ok(r);
            }
            return RootResult::none();  // unreachable when the power test passed
        }
        // baby-step giant-step discrete log in the cyclic group of order q-1
        FieldElement gen = primitive_root_of_unity(F, q - 1);
        u64 n = q - 1;
        u64 mstep = static_cast<u64>(std::max<double>(1.0, std::ceil(std::sqrt((double)n))));
        std::map<std::vector<u64>, u64> baby;
        FieldElement cur = F->one();
        for (u64 j = 0; j < mstep; ++j) {
            baby.emplace(cur.rcoeffs(), j);
            cur = cur * gen;
        }
        FieldElement giant = F->inv(F->pow(gen, static_cast<long long>(mstep)));
        FieldElement x = a;
        u64 t = n;  // discrete log of a
        for (u64 i = 0; i <= mstep; ++i) {
            auto it = baby.find(x.rcoeffs());
            if (it != baby.end()) {
                t = (i * mstep + it->second) % n;
                break;
            }
            x = x * giant;
        }
        u64 g0 = nt::gcd_u64(d % n, n);
        if (g0 == 0) g0 = n;
        if (t % g0 != 0) return RootResult::none();
        u64 n1 = n / g0;
        u64 d1 = (d % n) / g0;
        u64 s = nt::mulmod(t / g0 % n1, nt::invmod(d1 % n1, n1), n1);
        FieldElement r = F->pow(gen, static_cast<long long>(s));
        if (F->pow(r, static_cast<long long>(d)) == a) return RootResult::ok(r);
        return RootResult::none();
    }
    if (F->kind() == FieldKind::rationals) {
        mpq_class v = F->rational_value(a);
        mpz_class rn, rd2;
        if (!nt::exact_root(v.get_num(), static_cast<unsigned long>(d), rn))
            return RootResult::none();
        if (!nt::exact_root(v.get_den(), static_cast<unsigned long>(d), rd2))
            return RootResult::none();
        mpq_class r(rn, rd2);
        r.canonicalize();
        return RootResult::ok(F->from_rational(r));
    }
    if (F->cyclotomic_index() > 0) {
        // try r = zeta^j * s with rational s: a must equal zeta^(j d) s^d
        u64 M = static_cast<u64>(F->cyclotomic_index());
        FieldElement zeta = F->generator();
        for (u64 j = 0; j < M; ++j) {
            FieldElement b = a * F->pow(zeta, -static_cast<long long>(j * d));
            if (!F->is_rational_embedded(b)) continue;
            mpq_class v = F->rational_value(b);
            mpz_class rn, rd2;
            if (!nt::exact_root(v.get_num(), static_cast<unsigned long>(d), rn)) continue;
            if (!nt::exact_root(v.get_den(), static_cast<unsigned long>(d), rd2)) continue;
            mpq_class s(rn, rd2);
            s.canonicalize();
            FieldElement r = F->pow(zeta, static_cast<long long>(j)) * F->from_rational(s);
            if (F->pow(r, static_cast<long long>(d)) == a) return RootResult::ok(r);
        }
        return RootResult::undecided();
    }
    if (F->is_rational_embedded(a)) {
        mpq_class v = F->rational_value(a);
        mpz_class rn, rd2;
        if (nt::exact_root(v.get_num(), static_cast<unsigned long>(d), rn) &&
            nt::exact_root(v.get_den(), static_cast<unsigned long>(d), rd2)) {
            mpq_class r(rn, rd2);
            r.canonicalize();
            return RootResult::ok(F->from_rational(r));
        }
    }
    return RootResult::undecided();
}

/// Monic minimal polynomial of a over Q as a coefficient vector (lowest
/// first), found as the first linear dependency among 1, a, a^2, ...
inline std::vector<mpq_class> minimal_polynomial_coeffs(const FieldElement& a) {
    const FieldPtr& F = a.owner();
    if (F->is_finite()) fail(errc::bad_characteristic, "owner must have characteristic 0");
    int D = F->degree();
    std::vector<std::vector<mpq_class>> powers;  // coordinates of a^j
    FieldElement cur = F->one();
    for (int j = 0;; ++j) {
        powers.push_back(cur.qcoeffs());
        if (j >= 1) {
            // solve sum_{i<j} c_i a^i = a^j by Gaussian elimination
            int rows = D, cols = j;
            std::vector<std::vector<mpq_class>> M(static_cast<size_t>(rows));
            for (int r = 0; r < rows; ++r) {
                M[static_cast<size_t>(r)].resize(static_cast<size_t>(cols) + 1);
                for (int c = 0; c < cols; ++c)
                    M[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                        powers[static_cast<size_t>(c)][static_cast<size_t>(r)];
                M[static_cast<size_t>(r)][static_cast<size_t>(cols)] =
                    powers[static_cast<size_t>(j)][static_cast<size_t>(r)];
            }
            // elimination
            std::vector<int> pivot_col(static_cast<size_t>(rows), -1);
            int prow = 0;
            for (int c = 0; c < cols && prow < rows; ++c) {
                int sel = -1;
                for (int r = prow; r < rows; ++r)
                    if (M[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                        sel = r;
                        break;
                    }
                if (sel < 0) continue;
                std::swap(M[static_cast<size_t>(sel)], M[static_cast<size_t>(prow)]);
                mpq_class pl = M[static_cast<size_t>(prow)][static_cast<size_t>(c)];
                for (auto& x : M[static_cast<size_t>(prow)]) x /= pl;
                for (int r = 0; r < rows; ++r) {
                    if (r == prow) continue;
                    mpq_class f = M[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    if (f == 0) continue;
                    for (int cc = c; cc <= cols; ++cc)
                        M[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                            f * M[static_cast<size_t>(prow)][static_cast<size_t>(cc)];
                }
                pivot_col[static_cast<size_t>(prow)] = c;
                ++prow;
            }
            bool consistent = true;
            for (int r = prow; r < rows; ++r)
                if (M[static_cast<size_t>(r)][static_cast<size_t>(cols)] != 0) consistent = false;
            if (consistent) {
                std::vector<mpq_class> sol(static_cast<size_t>(cols), mpq_class(0));
                for (int r = 0; r < prow; ++r)
                    sol[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
                        M[static_cast<size_t>(r)][static_cast<size_t>(cols)];
                std::vector<mpq_class> out(static_cast<size_t>(j) + 1);
                for (int i = 0; i < j; ++i) out[static_cast<size_t>(i)] = -sol[static_cast<size_t>(i)];
                out[static_cast<size_t>(j)] = 1;
                return out;
            }
        }
        cur = cur * a;
        if (j > D) fail(errc::bad_input, "minimal polynomial search exceeded field degree");
    }
}

}  // namespace seljac
