#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace weylk3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& a, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? a : Rat(1) / a;
    unsigned long n = e > 0 ? e : -e;
    Rat r(1);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// "p/q" (or "p" when q=1), the serialization used in all JSON reports.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_from_str(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

// Prime field with runtime modulus shared through a context object.  Only
// word-sized moduli are used (Groebner certificates, Dixon's method).
struct FpCtx {
    uint64_t p;
    explicit FpCtx(uint64_t p_) : p(p_) {}
    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (uint64_t)((__uint128_t)a * b % p); }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
    uint64_t from_int(const Int& z) const {
        Int m = z % Int((unsigned long)p);
        if (m < 0) m += Int((unsigned long)p);
        return m.get_ui();
    }
    uint64_t from_rat(const Rat& q) const {
        return mul(from_int(q.get_num()), inv(from_int(q.get_den())));
    }
};

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) { return (uint64_t)((__uint128_t)a * b % m); };
    auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) {
        uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

inline uint64_t next_prime_u64(uint64_t n) {
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

// Euler phi and Moebius mu for small arguments.
inline int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

inline int moebius_mu(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> ds;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

}  // namespace weylk3
