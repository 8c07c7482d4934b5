#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace seljac {
namespace nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// ax = gcd(a,m) (mod m) solver; returns x with a*x ≡ g, also writes g.
inline u64 invmod(u64 a, u64 m) {
    // extended euclid on signed 128-bit to stay safe near 2^63
    __int128 t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    // r == gcd; caller must ensure gcd == 1
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

inline bool miller_rabin_once(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_once(n, a, d, s)) return false;
    }
    return true;
}

inline u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    for (;;) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = addmod(mulmod(x, x, n), c, n);
            y = addmod(mulmod(y, y, n), c, n);
            y = addmod(mulmod(y, y, n), c, n);
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

inline void factor_into(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n]++;
        return;
    }
    for (u64 p = 2; p < 10000 && p * p <= n; ++p) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
        if (n == 1) return;
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n]++;
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factorization of a 64-bit integer, {prime -> exponent}.
inline std::map<u64, int> factor_u64(u64 n) {
    std::map<u64, int> f;
    factor_into(n, f);
    return f;
}

inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> ps;
    for (auto& [p, e] : factor_u64(n)) ps.push_back(p);
    return ps;
}

/// Exact integer d-th root: returns true and sets r when n == r^d.
inline bool exact_root(const mpz_class& n, unsigned long d, mpz_class& r) {
    if (d == 0) return false;
    if (sgn(n) < 0) {
        if (d % 2 == 0) return false;
        mpz_class rr;
        if (!exact_root(mpz_class(-n), d, rr)) return false;
        r = -rr;
        return true;
    }
    mpz_class root;
    int exactf = mpz_root(root.get_mpz_t(), n.get_mpz_t(), d);
    if (!exactf) return false;
    r = root;
    return true;
}

inline mpz_class isqrt_floor(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace nt
}  // namespace seljac
