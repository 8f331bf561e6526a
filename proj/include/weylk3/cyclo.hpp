#pragma once

#include "weylk3/unipoly.hpp"

#include <complex>
#include <map>
#include <sstream>

namespace weylk3 {

// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in
// zeta_n of degree < phi(n), i.e. an element of Q[x]/(Phi_n).  Elements of
// different conductors combine by lifting to the lcm.  Rationals live at
// conductor 1.
class Cyclo {
  public:
    Cyclo() : n_(1), c_{Rat(0)} {}
    Cyclo(int k) : n_(1), c_{Rat(k)} {}
    Cyclo(const Rat& q) : n_(1), c_{q} {}
    static Cyclo zeta(int n, long k = 1) {
        k %= n;
        if (k < 0) k += n;
        // reduce to the primitive conductor of zeta_n^k
        int g = (int)std::gcd((long)n, k == 0 ? (long)n : k);
        int d = n / g;
        long e = k / g;
        Cyclo z;
        z.n_ = d;
        z.set_pow(e);
        return z;
    }

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat to_rational() const {
        if (!is_rational()) throw std::domain_error("Cyclo: not rational");
        return c_[0];
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = lift_pair(a, b);
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = lift_pair(a, b);
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = lift_pair(a, b);
        std::vector<Rat> prod(x.c_.size() + y.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) prod[i + j] += x.c_[i] * y.c_[j];
        }
        x.c_ = reduce_mod_phi(std::move(prod), x.n_);
        return x;
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("Cyclo: division by zero");
        if (is_rational()) return Cyclo(Rat(1) / c_[0]);
        QPoly f = QPoly::from(c_);
        QPoly g, s, t;
        QPoly::xgcd(f, phi_poly(n_), g, s, t);
        // g == 1 since Phi_n is irreducible and f is nonzero of smaller degree
        Cyclo r;
        r.n_ = n_;
        r.c_ = s.c;
        r.c_.resize(std::max(1, euler_phi(n_)), Rat(0));
        return r;
    }

    Cyclo pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo r(1), b = *this;
        unsigned long k = e;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const Cyclo& o) const {
        auto [x, y] = lift_pair(*this, o);
        return x.c_ == y.c_;
    }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    bool operator==(int k) const { return *this == Cyclo(k); }

    // deterministic total order (conductor, then coefficients)
    bool operator<(const Cyclo& o) const {
        auto [x, y] = lift_pair(*this, o);
        for (size_t i = 0; i < x.c_.size(); ++i)
            if (x.c_[i] != y.c_[i]) return x.c_[i] < y.c_[i];
        return false;
    }

    // complex embedding at zeta_n = exp(2*pi*i/n); cross-check use only
    std::complex<double> to_complex() const {
        std::complex<double> z = std::polar(1.0, 2.0 * 3.14159265358979323846 / n_);
        std::complex<double> r = 0, p = 1;
        for (const auto& q : c_) {
            r += q.get_d() * p;
            p *= z;
        }
        return r;
    }

    // serialization "[n; c0, c1, ...]"
    std::string str() const {
        std::ostringstream os;
        os << "[" << n_ << ";";
        for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : " ") << c_[i].get_str();
        os << "]";
        return os.str();
    }

    // lift into Q(zeta_m), n | m
    Cyclo lifted(int m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::domain_error("Cyclo: bad lift");
        int step = m / n_;
        std::vector<Rat> raw((c_.size() - 1) * step + 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
        Cyclo r;
        r.n_ = m;
        r.c_ = reduce_mod_phi(std::move(raw), m);
        return r;
    }

    static const QPoly& phi_poly(int n) {
        static std::map<int, QPoly> cache;
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, cyclotomic_polynomial(n)).first;
        return it->second;
    }

  private:
    int n_;
    std::vector<Rat> c_;

    void set_pow(long e) {
        std::vector<Rat> raw(e + 1, Rat(0));
        raw[e] = 1;
        c_ = reduce_mod_phi(std::move(raw), n_);
    }

    static std::vector<Rat> reduce_mod_phi(std::vector<Rat> raw, int n) {
        const QPoly& phi = phi_poly(n);
        int d = phi.degree();
        // divide by the monic Phi_n
        for (int i = (int)raw.size() - 1; i >= d; --i) {
            if (raw[i] == 0) continue;
            Rat f = raw[i];
            for (int j = 0; j <= d; ++j) raw[i - d + j] -= f * phi.c[j];
        }
        raw.resize(std::max(1, d), Rat(0));
        return raw;
    }

    static std::pair<Cyclo, Cyclo> lift_pair(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == b.n_) return {a, b};
        int m = std::lcm(a.n_, b.n_);
        return {a.lifted(m), b.lifted(m)};
    }
};

// root of unity as (order d, exponent k) with multiplicity, the form in which
// eigenvalue multisets are reported
struct RootOfUnity {
    int d;   // primitive d-th root
    long k;  // exponent, gcd(k, d) = 1, 0 <= k < d (d=1: k=0)
    bool operator==(const RootOfUnity& o) const { return d == o.d && k == o.k; }
    bool operator<(const RootOfUnity& o) const { return d != o.d ? d < o.d : k < o.k; }
    Cyclo value() const { return Cyclo::zeta(d, k); }
    std::string str() const {
        if (d == 1) return "1";
        if (d == 2) return "-1";
        std::ostringstream os;
        os << "zeta_" << d;
        if (k != 1) os << "^" << k;
        return os.str();
    }
};

}  // namespace weylk3
