#pragma once

#include "weylk3/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weylk3 {

// Dense univariate polynomial over an exact field K.  K needs +,-,*,/ and
// comparison with 0 via K(0) / K(1).
template <class K>
struct UPoly {
    std::vector<K> c;  // c[i] is the coefficient of x^i; trailing zeros trimmed

    UPoly() = default;
    explicit UPoly(K k) {
        if (!(k == K(0))) c.push_back(std::move(k));
    }
    static UPoly x() { return from({K(0), K(1)}); }
    static UPoly from(std::vector<K> v) {
        UPoly p;
        p.c = std::move(v);
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    const K& lc() const { return c.back(); }
    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(0); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    UPoly operator*(const K& k) const {
        UPoly r = *this;
        for (auto& v : r.c) v = v * k;
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& v : r.c) v = K(0) - v;
        return r;
    }
    bool operator==(const UPoly& o) const { return c == o.c; }

    K eval(const K& x) const {
        K r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + c[i];
        return r;
    }

    UPoly derivative() const {
        UPoly r;
        for (int i = 1; i <= degree(); ++i) r.c.push_back(c[i] * K(i));
        r.trim();
        return r;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * (K(1) / lc());
    }

    // division with remainder; the divisor must be nonzero
    static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
        UPoly q;
        q.c.assign(std::max<int>(0, a.degree() - b.degree() + 1), K(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            K f = a.lc() / b.lc();
            int s = a.degree() - b.degree();
            q.c[s] = f;
            for (int i = 0; i <= b.degree(); ++i) a.c[s + i] = a.c[s + i] - f * b.c[i];
            a.trim();
        }
        q.trim();
        return {q, a};
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // g = s*a + t*b
    static void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
        UPoly r0 = a, r1 = b, s0(K(1)), s1, t0, t1(K(1));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (!r0.is_zero()) {
            K inv = K(1) / r0.lc();
            g = r0 * inv;
            s = s0 * inv;
            t = t0 * inv;
        } else {
            g = r0;
            s = s0;
            t = t0;
        }
    }

    // power series inverse modulo x^n (constant term must be invertible)
    UPoly series_inverse(int n) const {
        assert(!is_zero() && !(c[0] == K(0)));
        UPoly r;
        r.c.assign(n, K(0));
        K inv0 = K(1) / c[0];
        r.c[0] = inv0;
        for (int i = 1; i < n; ++i) {
            K s(0);
            for (int j = 1; j <= std::min(i, degree()); ++j) s = s + c[j] * r.c[i - j];
            r.c[i] = K(0) - s * inv0;
        }
        r.trim();
        return r;
    }

    static UPoly resultant_free(const UPoly&, const UPoly&) = delete;
};

using QPoly = UPoly<Rat>;

// -- rational-specific helpers ------------------------------------------------

inline Int qpoly_den_lcm(const QPoly& p) {
    Int l = 1;
    for (const auto& q : p.c) l = int_lcm(l, q.get_den());
    return l;
}

// integer content of a rational polynomial after clearing denominators
inline QPoly qpoly_primitive(const QPoly& p, Rat* scale = nullptr) {
    if (p.is_zero()) {
        if (scale) *scale = 1;
        return p;
    }
    Int l = qpoly_den_lcm(p);
    Int g = 0;
    for (const auto& q : p.c) g = int_gcd(g, Int(q * Rat(l)));
    Rat f = Rat(l) / Rat(g);
    if (p.lc() < 0) f = -f;
    if (scale) *scale = f;
    return p * f;
}

inline QPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw std::domain_error("cyclotomic_polynomial: n must be positive");
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    QPoly num;
    num.c.assign(n + 1, Rat(0));
    num.c[0] = -1;
    num.c[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            QPoly phi_d = cyclotomic_polynomial(d);
            auto [q, r] = QPoly::divmod(num, phi_d);
            assert(r.is_zero());
            num = q;
        }
    }
    return num;
}

Int qpoly_resultant(const QPoly& a, const QPoly& b);

// irreducible factors of a nonzero rational polynomial, with multiplicities;
// the product of the (monic-normalised primitive) factors times the returned
// unit equals the input
struct QFactorization {
    Rat unit;
    std::vector<std::pair<QPoly, int>> factors;  // primitive integer factors, positive lc
};
QFactorization factor_over_Q(const QPoly& p);

}  // namespace weylk3
