#pragma once

#include "weylk3/multipoly.hpp"
#include "weylk3/unipoly.hpp"

#include <set>

namespace weylk3 {

// leading-coefficient normalization per coefficient field
template <class K>
inline void gb_normalize(MPoly<K>& p) {
    if (p.is_zero()) return;
    K inv = K(1) / p.lc();
    for (auto& c : p.c) c = c * inv;
}
template <>
inline void gb_normalize<Rat>(MPoly<Rat>& p) {
    qm_primitivize(p);
}

// full normal form of f against a list of polynomials (not necessarily a GB)
template <class K>
MPoly<K> normal_form(MPoly<K> f, const std::vector<MPoly<K>>& basis) {
    MPoly<K> out(f.ord);
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lm(), f.lm())) {
                K s = K(0) - f.lc() / g.lc();
                f.add_scaled(g, s, mono_div(f.lm(), g.lm()));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move leading term to the output
            out.m.push_back(f.lm());
            out.c.push_back(f.lc());
            f.m.erase(f.m.begin());
            f.c.erase(f.c.begin());
        }
    }
    return out;
}

template <class K>
struct Groebner {
    Ord ord;
    std::vector<MPoly<K>> basis;  // reduced Groebner basis

    MPoly<K> nf(const MPoly<K>& f) const { return normal_form(f, basis); }
    bool contains(const MPoly<K>& f) const { return nf(f).is_zero(); }
    std::vector<Mono> lt_gens() const {
        std::vector<Mono> lt;
        for (const auto& g : basis) lt.push_back(g.lm());
        return lt;
    }

    // exhaustive S-polynomial zero-reduction check
    bool spoly_check() const {
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                Mono l = mono_lcm(basis[i].lm(), basis[j].lm(), ord.nvars);
                MPoly<K> s = basis[i] * (K(1) / basis[i].lc());
                MPoly<K> t = basis[j] * (K(1) / basis[j].lc());
                MPoly<K> sp(ord);
                sp.add_scaled(s, K(1), mono_div(l, basis[i].lm()));
                sp.add_scaled(t, K(0) - K(1), mono_div(l, basis[j].lm()));
                if (!normal_form(sp, basis).is_zero()) return false;
            }
        return true;
    }
};

template <class K>
Groebner<K> groebner(std::vector<MPoly<K>> gens, Ord ord);

// when set, every computed basis is re-verified by exhaustive S-polynomial
// reduction (throws on failure)
extern bool gb_spoly_verification;

// ---- Hilbert series of monomial quotients ------------------------------------

// numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/(monomial ideal)
std::vector<Int> hilbert_numerator(std::vector<Mono> gens, int nvars);

// Krull dimension of S/(monomial ideal) (affine cone dimension)
int monomial_krull_dim(const std::vector<Mono>& gens, int nvars);

// eventual constant value of the Hilbert function; requires cone dimension 1
Int monomial_hilbert_constant(const std::vector<Mono>& gens, int nvars);

// ---- explicit instantiation helpers ------------------------------------------

struct GFp {
    static uint64_t p;
    uint64_t v;
    GFp() : v(0) {}
    GFp(int k) {
        long long m = k % (long long)p;
        if (m < 0) m += p;
        v = (uint64_t)m;
    }
    explicit GFp(uint64_t raw) : v(raw % p) {}
    friend GFp operator+(GFp a, GFp b) {
        uint64_t s = a.v + b.v;
        return GFp::raw(s >= p ? s - p : s);
    }
    friend GFp operator-(GFp a, GFp b) { return GFp::raw(a.v >= b.v ? a.v - b.v : a.v + p - b.v); }
    friend GFp operator*(GFp a, GFp b) { return GFp::raw((uint64_t)((__uint128_t)a.v * b.v % p)); }
    friend GFp operator/(GFp a, GFp b) { return a * b.inv(); }
    GFp inv() const {
        uint64_t r = 1, base = v, e = p - 2;
        while (e) {
            if (e & 1) r = (uint64_t)((__uint128_t)r * base % p);
            base = (uint64_t)((__uint128_t)base * base % p);
            e >>= 1;
        }
        return GFp::raw(r);
    }
    bool operator==(const GFp& o) const { return v == o.v; }
    bool operator==(int k) const { return *this == GFp(k); }
    static GFp raw(uint64_t x) {
        GFp g;
        g.v = x;
        return g;
    }
};

MPoly<GFp> qm_to_gfp(const QMPoly& p);

extern template Groebner<Rat> groebner<Rat>(std::vector<MPoly<Rat>>, Ord);
extern template Groebner<GFp> groebner<GFp>(std::vector<MPoly<GFp>>, Ord);
extern template Groebner<Cyclo> groebner<Cyclo>(std::vector<MPoly<Cyclo>>, Ord);

}  // namespace weylk3
