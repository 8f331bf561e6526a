#include "weylk3/unipoly.hpp"

#include <numeric>

namespace weylk3 {

namespace {

// ---- arithmetic for univariate polynomials over F_p ------------------------

using FpVec = std::vector<uint64_t>;  // coefficient vector, trailing zeros trimmed

void fp_trim(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpVec fp_mul(const FpVec& a, const FpVec& b, const FpCtx& F) {
    if (a.empty() || b.empty()) return {};
    FpVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(r);
    return r;
}

void fp_divmod(const FpVec& a, const FpVec& b, FpVec& q, FpVec& r, const FpCtx& F) {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    uint64_t inv_lc = F.inv(b.back());
    while (r.size() >= b.size() && !r.empty()) {
        uint64_t c = F.mul(r.back(), inv_lc);
        size_t s = r.size() - b.size();
        q[s] = c;
        for (size_t i = 0; i < b.size(); ++i) r[s + i] = F.sub(r[s + i], F.mul(c, b[i]));
        fp_trim(r);
    }
    fp_trim(q);
}

FpVec fp_mod(const FpVec& a, const FpVec& m, const FpCtx& F) {
    FpVec q, r;
    fp_divmod(a, m, q, r, F);
    return r;
}

FpVec fp_div(const FpVec& a, const FpVec& b, const FpCtx& F) {
    FpVec q, r;
    fp_divmod(a, b, q, r, F);
    return q;
}

FpVec fp_mulmod(const FpVec& a, const FpVec& b, const FpVec& m, const FpCtx& F) {
    return fp_mod(fp_mul(a, b, F), m, F);
}

FpVec fp_powmod(FpVec a, Int e, const FpVec& m, const FpCtx& F) {
    FpVec r{1};
    a = fp_mod(a, m, F);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_mulmod(r, a, m, F);
        a = fp_mulmod(a, a, m, F);
        e >>= 1;
    }
    return r;
}

FpVec fp_gcd(FpVec a, FpVec b, const FpCtx& F) {
    while (!b.empty()) {
        FpVec r = fp_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, inv);
    }
    return a;
}

FpVec fp_derivative(const FpVec& a, const FpCtx& F) {
    FpVec r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.p));
    fp_trim(r);
    return r;
}

// deterministic xorshift so repeated runs factor identically
struct DetRng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

void fp_equal_degree(const FpVec& f, int d, const FpCtx& F, DetRng& rng, std::vector<FpVec>& out) {
    int n = (int)f.size() - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int e = (int_pow(Int((unsigned long)F.p), d) - 1) / 2;
    for (;;) {
        FpVec a(n, 0);
        for (auto& c : a) c = rng.next() % F.p;
        fp_trim(a);
        if (a.size() <= 1) continue;
        FpVec g = fp_gcd(f, a, F);
        if (g.size() <= 1 || g.size() >= f.size()) {
            FpVec b = fp_powmod(a, e, f, F);
            if (b.empty()) continue;
            if (b.empty()) continue;
            b.resize(std::max<size_t>(b.size(), 1));
            b[0] = F.sub(b[0], 1);
            fp_trim(b);
            g = fp_gcd(f, b, F);
        }
        if (g.size() > 1 && g.size() < f.size()) {
            fp_equal_degree(g, d, F, rng, out);
            fp_equal_degree(fp_div(f, g, F), d, F, rng, out);
            return;
        }
    }
}

// factorization of a squarefree monic polynomial over F_p
std::vector<FpVec> fp_factor_squarefree(const FpVec& f, const FpCtx& F) {
    std::vector<FpVec> out;
    DetRng rng;
    FpVec h{0, 1};  // x
    FpVec rest = f;
    int d = 0;
    while ((int)rest.size() - 1 >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, Int((unsigned long)F.p), rest, F);
        FpVec hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        fp_trim(hx);
        FpVec g = fp_gcd(rest, hx, F);
        if (g.size() > 1) {
            fp_equal_degree(g, d, F, rng, out);
            rest = fp_div(rest, g, F);
            h = fp_mod(h, rest, F);
        }
    }
    if (rest.size() > 1) out.push_back(rest);
    return out;
}

// ---- Hensel lifting over Z --------------------------------------------------

struct ZP {
    std::vector<Int> c;
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return (int)c.size() - 1; }
};

ZP z_mul(const ZP& a, const ZP& b) {
    ZP r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

ZP z_add(const ZP& a, const ZP& b) {
    ZP r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

ZP z_sub(const ZP& a, const ZP& b) {
    ZP r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

void z_mod_sym(ZP& a, const Int& m) {
    Int half = m / 2;
    for (auto& c : a.c) {
        c %= m;
        if (c > half) c -= m;
        if (c < -half) c += m;
    }
    a.trim();
}

// division with remainder by a monic polynomial, coefficients reduced mod m
void z_divmod_monic(ZP a, const ZP& b, ZP& q, ZP& r, const Int& m) {
    q.c.assign(std::max<int>(0, a.degree() - b.degree() + 1), 0);
    while (!a.c.empty() && a.degree() >= b.degree()) {
        Int c = a.c.back();
        int s = a.degree() - b.degree();
        q.c[s] = c;
        for (int i = 0; i <= b.degree(); ++i) a.c[s + i] -= c * b.c[i];
        a.trim();
        z_mod_sym(a, m);
    }
    z_mod_sym(q, m);
    r = a;
}

// one quadratic Hensel step: from mod m to mod m^2 for f = g*h, s*g + t*h = 1
void hensel_step(const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t, const Int& m) {
    Int m2 = m * m;
    ZP e = z_sub(f, z_mul(g, h));
    z_mod_sym(e, m2);
    ZP q, r;
    ZP se = z_mul(s, e);
    z_mod_sym(se, m2);
    z_divmod_monic(se, h, q, r, m2);
    ZP g1 = z_add(g, z_add(z_mul(t, e), z_mul(q, g)));
    z_mod_sym(g1, m2);
    ZP h1 = z_add(h, r);
    z_mod_sym(h1, m2);

    ZP one{{Int(1)}};
    ZP b = z_sub(z_add(z_mul(s, g1), z_mul(t, h1)), one);
    z_mod_sym(b, m2);
    ZP sb = z_mul(s, b);
    z_mod_sym(sb, m2);
    ZP c, d;
    z_divmod_monic(sb, h1, c, d, m2);
    ZP s1 = z_sub(s, d);
    z_mod_sym(s1, m2);
    ZP t1 = z_sub(t, z_add(z_mul(t, b), z_mul(c, g1)));
    z_mod_sym(t1, m2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

// Bezout cofactors mod p for coprime g, h (monic product splitting)
void fp_bezout(const ZP& g, const ZP& h, uint64_t p, ZP& s_out, ZP& t_out) {
    FpCtx F(p);
    auto to_fp = [&](const ZP& z) {
        FpVec v;
        for (const auto& c : z.c) v.push_back(F.from_int(c));
        fp_trim(v);
        return v;
    };
    FpVec r0 = to_fp(g), r1 = to_fp(h), s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        FpVec q, r;
        fp_divmod(r0, r1, q, r, F);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpVec qs = fp_mul(q, s1, F), qt = fp_mul(q, t1, F);
        FpVec s2 = s0, t2 = t0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = F.sub(s2[i], qs[i]);
        fp_trim(s2);
        if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = F.sub(t2[i], qt[i]);
        fp_trim(t2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    uint64_t inv = F.inv(r0[0]);
    auto from_fp = [&](const FpVec& v) {
        ZP z;
        for (auto c : v) z.c.push_back(Int((unsigned long)F.mul(c, inv)));
        z.trim();
        z_mod_sym(z, Int((unsigned long)p));
        return z;
    };
    s_out = from_fp(s0);
    t_out = from_fp(t0);
}

// lift monic factors (mod p) of monic f to factors mod m >= bound; returns m
Int hensel_lift_list(const ZP& f, const std::vector<ZP>& facs, uint64_t p, const Int& bound,
                     std::vector<ZP>& out) {
    if (facs.size() == 1) {
        Int m = Int((unsigned long)p);
        while (m < bound) m = m * m;
        ZP g = f;
        out.push_back(g);
        return m;
    }
    size_t half = facs.size() / 2;
    Int pm = Int((unsigned long)p);
    ZP g{{Int(1)}}, h{{Int(1)}};
    for (size_t i = 0; i < half; ++i) {
        g = z_mul(g, facs[i]);
        z_mod_sym(g, pm);
    }
    for (size_t i = half; i < facs.size(); ++i) {
        h = z_mul(h, facs[i]);
        z_mod_sym(h, pm);
    }
    ZP s, t;
    fp_bezout(g, h, p, s, t);
    Int m = pm;
    while (m < bound) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    std::vector<ZP> lo(facs.begin(), facs.begin() + half), hi(facs.begin() + half, facs.end());
    std::vector<ZP> outg, outh;
    hensel_lift_list(g, lo, p, m, outg);
    hensel_lift_list(h, hi, p, m, outh);
    // the recursive calls may have lifted further than m; reduce back
    for (auto& x : outg) {
        z_mod_sym(x, m);
        out.push_back(x);
    }
    for (auto& x : outh) {
        z_mod_sym(x, m);
        out.push_back(x);
    }
    return m;
}

QPoly q_from_z(const ZP& p) {
    QPoly r;
    for (const auto& z : p.c) r.c.push_back(Rat(z));
    r.trim();
    return r;
}

// factor a primitive squarefree integer polynomial of degree >= 2 into
// irreducible primitive factors
std::vector<QPoly> factor_squarefree_z(const QPoly& S) {
    int n = S.degree();
    Int lc = S.lc().get_num();

    // monic model: f(x) = lc^(n-1) * S(x/lc), monic with integer coefficients
    ZP f;
    f.c.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) f.c[i] = S.c[i].get_num() * int_pow(lc, n - 1 - i);
    f.c[n] = 1;

    // choose a prime where f stays squarefree
    uint64_t p = 3;
    FpCtx F(p);
    FpVec fm;
    for (;;) {
        F = FpCtx(p);
        fm.clear();
        for (const auto& c : f.c) fm.push_back(F.from_int(c));
        fp_trim(fm);
        if ((int)fm.size() - 1 == n && fp_gcd(fm, fp_derivative(fm, F), F).size() == 1) break;
        p = next_prime_u64(p + 1);
    }
    std::vector<FpVec> modular = fp_factor_squarefree(fm, F);
    std::sort(modular.begin(), modular.end());
    if (modular.size() == 1) return {S};

    Int height = 0;
    for (const auto& c : f.c)
        if (abs(c) > height) height = abs(c);
    Int bound = int_pow(Int(2), n + 2) * height + 1;  // covers factor coefficients, x2 for sign

    std::vector<ZP> zf;
    for (const auto& v : modular) {
        ZP z;
        for (auto c : v) z.c.push_back(Int((unsigned long)c));
        z_mod_sym(z, Int((unsigned long)p));
        zf.push_back(z);
    }
    std::vector<ZP> lifted;
    Int m = hensel_lift_list(f, zf, p, bound * 2, lifted);

    // subset recombination against the monic model
    std::vector<QPoly> result;
    QPoly remQ = q_from_z(f);
    std::vector<int> cur(lifted.size());
    std::iota(cur.begin(), cur.end(), 0);
    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZP cand{{Int(1)}};
        for (int i : subset) {
            cand = z_mul(cand, lifted[i]);
            z_mod_sym(cand, m);
        }
        QPoly qc = q_from_z(cand);
        auto [quot, rem] = QPoly::divmod(remQ, qc);
        if (!rem.is_zero()) return false;
        // undo x -> x/lc: factor of S is the primitive part of qc(lc*x)
        QPoly back;
        for (int i = 0; i < (int)qc.c.size(); ++i) back.c.push_back(qc.c[i] * rat_pow(Rat(lc), i));
        back.trim();
        result.push_back(qpoly_primitive(back));
        remQ = quot;
        return true;
    };
    for (size_t sz = 1; !cur.empty() && 2 * sz <= cur.size();) {
        bool found = false;
        std::vector<int> idx(sz);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<int> subset;
            for (int k : idx) subset.push_back(cur[k]);
            if (try_subset(subset)) {
                std::vector<int> next;
                size_t k2 = 0;
                for (size_t i2 = 0; i2 < cur.size(); ++i2) {
                    if (k2 < idx.size() && (int)i2 == idx[k2]) {
                        ++k2;
                        continue;
                    }
                    next.push_back(cur[i2]);
                }
                cur = next;
                found = true;
                break;
            }
            int i = (int)sz - 1;
            while (i >= 0 && idx[i] == (int)(cur.size() - sz + i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < (int)sz; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++sz;
    }
    if (remQ.degree() > 0) {
        QPoly back;
        for (int i = 0; i < (int)remQ.c.size(); ++i) back.c.push_back(remQ.c[i] * rat_pow(Rat(lc), i));
        back.trim();
        result.push_back(qpoly_primitive(back));
    }
    return result;
}

}  // namespace

Int qpoly_resultant(const QPoly& A, const QPoly& B) {
    if (A.is_zero() || B.is_zero()) return 0;
    Rat r(1);
    QPoly a = A, b = B;
    for (;;) {
        if (b.degree() == 0) {
            r *= rat_pow(b.c[0], a.degree());
            break;
        }
        QPoly rem = a % b;
        if (rem.is_zero()) return 0;
        int sgn = (a.degree() * b.degree()) % 2;
        r *= rat_pow(b.lc(), a.degree() - rem.degree()) * (sgn ? Rat(-1) : Rat(1));
        a = std::move(b);
        b = std::move(rem);
    }
    return Int(r);
}

QFactorization factor_over_Q(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_over_Q: zero polynomial");
    QFactorization out;
    QPoly P = qpoly_primitive(p);
    if (P.degree() == 0) {
        out.unit = p.c[0];
        return out;
    }

    // Yun squarefree decomposition
    QPoly f = P.monic();
    QPoly d = f.derivative();
    QPoly a = QPoly::gcd(f, d);
    QPoly w = f / a;
    int mult = 1;
    std::vector<std::pair<QPoly, int>> sqf;
    while (w.degree() > 0) {
        QPoly y = QPoly::gcd(w, a);
        QPoly z = w / y;
        if (z.degree() > 0) sqf.push_back({z, mult});
        ++mult;
        w = y;
        a = a / y;
    }

    for (auto& [sq, m] : sqf) {
        QPoly S = qpoly_primitive(sq);
        if (S.degree() == 1) {
            out.factors.push_back({S, m});
            continue;
        }
        auto irr = factor_squarefree_z(S);
        std::sort(irr.begin(), irr.end(), [](const QPoly& x, const QPoly& y) {
            if (x.degree() != y.degree()) return x.degree() < y.degree();
            for (int i = x.degree(); i >= 0; --i)
                if (x.c[i] != y.c[i]) return x.c[i] < y.c[i];
            return false;
        });
        for (auto& g : irr) out.factors.push_back({qpoly_primitive(g), m});
    }
    QPoly prod(Rat(1));
    for (auto& [g, m] : out.factors)
        for (int i = 0; i < m; ++i) prod = prod * g;
    out.unit = p.lc() / prod.lc();
    return out;
}

}  // namespace weylk3
