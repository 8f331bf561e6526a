#pragma once

#include "weylk3/cyclo.hpp"
#include "weylk3/numeric.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace weylk3 {

// Monomial in up to 8 variables packed into a uint64: bits 56..63 hold the
// total degree, variable i occupies the 7-bit field at bits [7i, 7i+6].
// Exponents must stay below 64 so that products never carry across fields.
using Mono = uint64_t;

constexpr int kMaxVars = 8;
constexpr Mono kMonoExpMask = 0x00FFFFFFFFFFFFFFull;

inline Mono mono_one() { return 0; }

inline int mono_deg(Mono m) { return (int)(m >> 56); }

inline int mono_exp(Mono m, int i) { return (int)((m >> (7 * i)) & 0x7f); }

inline Mono mono_set(Mono m, int i, int e) {
    int old = mono_exp(m, i);
    m &= ~(0x7full << (7 * i));
    m |= (uint64_t)e << (7 * i);
    m += ((uint64_t)(e - old)) << 56;
    return m;
}

inline Mono mono_make(const std::vector<int>& exps) {
    Mono m = 0;
    int deg = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        m |= (uint64_t)exps[i] << (7 * i);
        deg += exps[i];
    }
    m |= (uint64_t)deg << 56;
    return m;
}

inline Mono mono_var(int i, int e = 1) {
    return ((uint64_t)e << (7 * i)) | ((uint64_t)e << 56);
}

inline Mono mono_mul(Mono a, Mono b) { return a + b; }

inline bool mono_divides(Mono a, Mono b) {  // a | b
    Mono d = b - a;
    if ((int64_t)d < 0) return false;
    // valid iff subtraction had no borrows across fields: reconstruct check
    return mono_mul(a, d) == b && ((d & kMonoExpMask) + (a & kMonoExpMask) ==
                                   (b & kMonoExpMask));
}

inline Mono mono_div(Mono b, Mono a) { return b - a; }

inline Mono mono_lcm(Mono a, Mono b, int nvars) {
    Mono r = 0;
    int deg = 0;
    for (int i = 0; i < nvars; ++i) {
        int e = std::max(mono_exp(a, i), mono_exp(b, i));
        r |= (uint64_t)e << (7 * i);
        deg += e;
    }
    return r | ((uint64_t)deg << 56);
}

inline bool mono_coprime(Mono a, Mono b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (mono_exp(a, i) > 0 && mono_exp(b, i) > 0) return false;
    return true;
}

// term orders
enum class OrdKind : uint8_t { DRL, Lex, Elim };

struct Ord {
    OrdKind kind = OrdKind::DRL;
    uint8_t nvars = 6;
    uint8_t split = 0;  // Elim: variables [0, split) are eliminated first

    // true if a > b
    bool greater(Mono a, Mono b) const {
        switch (kind) {
            case OrdKind::DRL:
                return (a ^ kMonoExpMask) > (b ^ kMonoExpMask);
            case OrdKind::Lex: {
                for (int i = 0; i < nvars; ++i) {
                    int ea = mono_exp(a, i), eb = mono_exp(b, i);
                    if (ea != eb) return ea > eb;
                }
                return false;
            }
            case OrdKind::Elim: {
                int da = 0, db = 0;
                for (int i = 0; i < split; ++i) {
                    da += mono_exp(a, i);
                    db += mono_exp(b, i);
                }
                if (da != db) return da > db;
                return (a ^ kMonoExpMask) > (b ^ kMonoExpMask);
            }
        }
        return false;
    }
    bool operator==(const Ord& o) const {
        return kind == o.kind && nvars == o.nvars && split == o.split;
    }
};

inline Ord drl(int nvars) { return Ord{OrdKind::DRL, (uint8_t)nvars, 0}; }
inline Ord lex(int nvars) { return Ord{OrdKind::Lex, (uint8_t)nvars, 0}; }
inline Ord elim(int nvars, int split) { return Ord{OrdKind::Elim, (uint8_t)nvars, (uint8_t)split}; }

// Sparse multivariate polynomial over an exact field K, terms sorted
// descending in the attached order.
template <class K>
struct MPoly {
    Ord ord;
    std::vector<Mono> m;
    std::vector<K> c;

    MPoly() : ord(drl(6)) {}
    explicit MPoly(Ord o) : ord(o) {}
    static MPoly constant(Ord o, const K& k) {
        MPoly p(o);
        if (!(k == K(0))) {
            p.m.push_back(mono_one());
            p.c.push_back(k);
        }
        return p;
    }
    static MPoly variable(Ord o, int i) {
        MPoly p(o);
        p.m.push_back(mono_var(i));
        p.c.push_back(K(1));
        return p;
    }

    size_t nterms() const { return m.size(); }
    bool is_zero() const { return m.empty(); }
    Mono lm() const { return m.front(); }
    const K& lc() const { return c.front(); }
    int degree() const {
        int d = -1;
        for (Mono mm : m) d = std::max(d, mono_deg(mm));
        return d;
    }
    bool is_homogeneous() const {
        for (Mono mm : m)
            if (mono_deg(mm) != mono_deg(m[0])) return false;
        return true;
    }

    void sort_terms() {
        std::vector<size_t> idx(m.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return ord.greater(m[a], m[b]); });
        std::vector<Mono> m2(m.size());
        std::vector<K> c2;
        c2.reserve(c.size());
        for (size_t i = 0; i < idx.size(); ++i) {
            m2[i] = m[idx[i]];
            c2.push_back(c[idx[i]]);
        }
        // combine equal monomials
        m.clear();
        c.clear();
        for (size_t i = 0; i < m2.size(); ++i) {
            if (!m.empty() && m.back() == m2[i])
                c.back() = c.back() + c2[i];
            else {
                m.push_back(m2[i]);
                c.push_back(c2[i]);
            }
        }
        strip_zeros();
    }

    void strip_zeros() {
        size_t w = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            if (c[i] == K(0)) continue;
            m[w] = m[i];
            if (w != i) c[w] = std::move(c[i]);
            ++w;
        }
        m.resize(w);
        c.resize(w);
    }

    MPoly resorted(Ord o) const {
        MPoly p = *this;
        p.ord = o;
        p.sort_terms();
        return p;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& k : r.c) k = K(0) - k;
        return r;
    }

    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r(a.ord);
        r.m.reserve(a.m.size() + b.m.size());
        r.c.reserve(a.m.size() + b.m.size());
        size_t i = 0, j = 0;
        while (i < a.m.size() && j < b.m.size()) {
            if (a.m[i] == b.m[j]) {
                K v = subtract ? a.c[i] - b.c[j] : a.c[i] + b.c[j];
                if (!(v == K(0))) {
                    r.m.push_back(a.m[i]);
                    r.c.push_back(std::move(v));
                }
                ++i;
                ++j;
            } else if (a.ord.greater(a.m[i], b.m[j])) {
                r.m.push_back(a.m[i]);
                r.c.push_back(a.c[i]);
                ++i;
            } else {
                r.m.push_back(b.m[j]);
                r.c.push_back(subtract ? K(0) - b.c[j] : b.c[j]);
                ++j;
            }
        }
        for (; i < a.m.size(); ++i) {
            r.m.push_back(a.m[i]);
            r.c.push_back(a.c[i]);
        }
        for (; j < b.m.size(); ++j) {
            r.m.push_back(b.m[j]);
            r.c.push_back(subtract ? K(0) - b.c[j] : b.c[j]);
        }
        return r;
    }

    // r += s * x^t * g  (fused reduction step helper)
    void add_scaled(const MPoly& g, const K& s, Mono t) {
        MPoly sg(ord);
        sg.m.reserve(g.m.size());
        sg.c.reserve(g.m.size());
        for (size_t i = 0; i < g.m.size(); ++i) {
            K v = g.c[i] * s;
            if (v == K(0)) continue;
            sg.m.push_back(mono_mul(g.m[i], t));
            sg.c.push_back(std::move(v));
        }
        *this = merge(*this, sg, false);
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.ord);
        if (a.is_zero() || b.is_zero()) return r;
        // accumulate via repeated merges of scaled copies (a assumed shorter)
        const MPoly& s = a.m.size() <= b.m.size() ? a : b;
        const MPoly& l = a.m.size() <= b.m.size() ? b : a;
        for (size_t i = 0; i < s.m.size(); ++i) r.add_scaled(l, s.c[i], s.m[i]);
        return r;
    }
    MPoly operator*(const K& k) const {
        MPoly r = *this;
        if (k == K(0)) return MPoly(ord);
        for (auto& v : r.c) v = v * k;
        return r;
    }

    MPoly derivative(int var) const {
        MPoly r(ord);
        for (size_t i = 0; i < m.size(); ++i) {
            int e = mono_exp(m[i], var);
            if (e == 0) continue;
            r.m.push_back(mono_set(m[i], var, e - 1));
            r.c.push_back(c[i] * K(e));
        }
        r.sort_terms();
        return r;
    }

    // substitute variable -> polynomial images (generic ring map)
    template <class K2>
    MPoly<K2> substitute(const std::vector<MPoly<K2>>& images, Ord out_ord,
                         const std::function<K2(const K&)>& conv) const {
        MPoly<K2> r(out_ord);
        for (size_t i = 0; i < m.size(); ++i) {
            MPoly<K2> t = MPoly<K2>::constant(out_ord, conv(c[i]));
            for (int v = 0; v < ord.nvars; ++v) {
                int e = mono_exp(m[i], v);
                for (int k = 0; k < e; ++k) t = t * images[v];
            }
            r = r + t;
        }
        return r;
    }

    template <class K2>
    K2 eval(const std::vector<K2>& point, const std::function<K2(const K&)>& conv) const {
        // power cache per variable
        std::vector<std::vector<K2>> pows(ord.nvars);
        for (int v = 0; v < ord.nvars; ++v) pows[v].push_back(K2(1));
        K2 acc(0);
        for (size_t i = 0; i < m.size(); ++i) {
            K2 t = conv(c[i]);
            for (int v = 0; v < ord.nvars; ++v) {
                int e = mono_exp(m[i], v);
                auto& pv = pows[v];
                while ((int)pv.size() <= e) pv.push_back(pv.back() * point[v]);
                if (e) t = t * pv[e];
            }
            acc = acc + t;
        }
        return acc;
    }

    bool operator==(const MPoly& o) const { return m == o.m && c == o.c; }
};

using QMPoly = MPoly<Rat>;

// integer-primitive normalization for rational polynomials (positive leading
// coefficient, integer coefficients with content 1)
inline void qm_primitivize(QMPoly& p) {
    if (p.is_zero()) return;
    Int l = 1;
    for (const auto& q : p.c) l = int_lcm(l, q.get_den());
    Int g = 0;
    for (const auto& q : p.c) g = int_gcd(g, Int(q * Rat(l)));
    Rat f = Rat(l) / Rat(g);
    if (p.lc() < 0) f = -f;
    for (auto& q : p.c) q *= f;
}

// substitute x_v -> images[v] with per-variable power caching (images in any
// coefficient field K2, conversion K -> K2 supplied)
template <class K, class K2>
MPoly<K2> compose_linear(const MPoly<K>& f, const std::vector<MPoly<K2>>& images, Ord out_ord,
                         const std::function<K2(const K&)>& conv) {
    int n = f.ord.nvars;
    std::vector<std::vector<MPoly<K2>>> pow(n);
    for (int v = 0; v < n; ++v) pow[v].push_back(MPoly<K2>::constant(out_ord, K2(1)));
    MPoly<K2> acc(out_ord);
    for (size_t i = 0; i < f.m.size(); ++i) {
        MPoly<K2> t = MPoly<K2>::constant(out_ord, conv(f.c[i]));
        for (int v = 0; v < n; ++v) {
            int e = mono_exp(f.m[i], v);
            auto& pv = pow[v];
            while ((int)pv.size() <= e) pv.push_back(pv.back() * images[v]);
            if (e) t = t * pv[e];
        }
        acc = acc + t;
    }
    return acc;
}

// parse/print helpers used by tests and JSON export
std::string qmpoly_str(const QMPoly& p, const std::vector<std::string>& vars);

}  // namespace weylk3
