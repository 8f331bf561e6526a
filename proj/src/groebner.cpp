#include "weylk3/groebner.hpp"

#include <map>
#include <queue>

namespace weylk3 {

uint64_t GFp::p = 2147483647ull;
bool gb_spoly_verification = false;

MPoly<GFp> qm_to_gfp(const QMPoly& p) {
    FpCtx F(GFp::p);
    MPoly<GFp> r(p.ord);
    for (size_t i = 0; i < p.m.size(); ++i) {
        uint64_t v = F.from_rat(p.c[i]);
        if (!v) continue;
        r.m.push_back(p.m[i]);
        r.c.push_back(GFp::raw(v));
    }
    return r;
}

namespace {

struct Pair {
    uint32_t i, j;
    Mono lcm;
    int sugar;
};

template <class K>
int poly_sugar(const MPoly<K>& p) {
    return p.degree();
}

}  // namespace

template <class K>
Groebner<K> groebner(std::vector<MPoly<K>> gens, Ord ord) {
    std::vector<MPoly<K>> G;
    // normalize input deterministically
    for (auto& g : gens) {
        g.ord = ord;
        g.sort_terms();
    }
    std::sort(gens.begin(), gens.end(), [&](const MPoly<K>& a, const MPoly<K>& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        return !ord.greater(a.lm(), b.lm()) && !(a.lm() == b.lm());
    });

    std::vector<Pair> pairs;
    std::vector<int> sugar;

    auto add_poly = [&](MPoly<K> f) {
        gb_normalize(f);
        uint32_t k = (uint32_t)G.size();
        // Gebauer-Moeller pair update
        std::vector<Pair> fresh;
        for (uint32_t i = 0; i < k; ++i) {
            if (G[i].is_zero()) continue;
            Mono l = mono_lcm(G[i].lm(), f.lm(), ord.nvars);
            int sg = std::max(sugar[i] + mono_deg(mono_div(l, G[i].lm())),
                              poly_sugar(f) + mono_deg(mono_div(l, f.lm())));
            fresh.push_back(Pair{i, k, l, sg});
        }
        // drop old pairs whose lcm is a proper multiple of lm(f)
        pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                   [&](const Pair& p) {
                                       if (!mono_divides(f.lm(), p.lcm)) return false;
                                       Mono l1 = mono_lcm(G[p.i].lm(), f.lm(), ord.nvars);
                                       Mono l2 = mono_lcm(G[p.j].lm(), f.lm(), ord.nvars);
                                       return l1 != p.lcm && l2 != p.lcm;
                                   }),
                    pairs.end());
        // among the fresh pairs keep minimal lcms only (one per lcm value)
        std::sort(fresh.begin(), fresh.end(), [&](const Pair& a, const Pair& b) {
            if (a.lcm != b.lcm) return !ord.greater(a.lcm, b.lcm);
            return a.i < b.i;
        });
        std::vector<Pair> kept;
        for (const auto& p : fresh) {
            bool redundant = false;
            for (const auto& q : kept)
                if (mono_divides(q.lcm, p.lcm)) {
                    redundant = true;
                    break;
                }
            if (!redundant && p.lcm != mono_mul(G[p.i].lm(), f.lm())) kept.push_back(p);
            else if (!redundant) {
                // coprime leading monomials: Buchberger's first criterion
            }
        }
        for (auto& p : kept) pairs.push_back(p);
        sugar.push_back(poly_sugar(f));
        G.push_back(std::move(f));
    };

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        add_poly(std::move(g));
    }

    while (!pairs.empty()) {
        // normal selection: smallest sugar, then smallest lcm
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i) {
            if (pairs[i].sugar != pairs[best].sugar
                    ? pairs[i].sugar < pairs[best].sugar
                    : (pairs[i].lcm != pairs[best].lcm
                           ? !ord.greater(pairs[i].lcm, pairs[best].lcm)
                           : pairs[i].i < pairs[best].i))
                best = i;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        const auto &f = G[p.i], &g = G[p.j];
        MPoly<K> sp(ord);
        sp.add_scaled(f, K(1) / f.lc(), mono_div(p.lcm, f.lm()));
        sp.add_scaled(g, K(0) - K(1) / g.lc(), mono_div(p.lcm, g.lm()));
        MPoly<K> r = normal_form(std::move(sp), G);
        if (!r.is_zero()) add_poly(std::move(r));
    }

    // interreduce to the reduced basis
    // first keep only elements with minimal leading terms
    std::vector<MPoly<K>> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || G[j].is_zero()) continue;
            if (mono_divides(G[j].lm(), G[i].lm()) &&
                (G[j].lm() != G[i].lm() || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MPoly<K>> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MPoly<K> r = normal_form(minimal[i], others);
            gb_normalize(r);
            if (!(r == minimal[i])) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + i);
                    --i;
                } else {
                    minimal[i] = std::move(r);
                }
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const MPoly<K>& a, const MPoly<K>& b) { return ord.greater(b.lm(), a.lm()); });
    Groebner<K> out;
    out.ord = ord;
    out.basis = std::move(minimal);
    if (gb_spoly_verification && !out.spoly_check())
        throw std::runtime_error("groebner: S-polynomial verification failed");
    return out;
}

template Groebner<Rat> groebner<Rat>(std::vector<MPoly<Rat>>, Ord);
template Groebner<GFp> groebner<GFp>(std::vector<MPoly<GFp>>, Ord);
template Groebner<Cyclo> groebner<Cyclo>(std::vector<MPoly<Cyclo>>, Ord);

// ---- Hilbert series ----------------------------------------------------------

namespace {

void poly_add_shifted(std::vector<Int>& a, const std::vector<Int>& b, int shift, int sign) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

std::vector<Mono> minimalize(std::vector<Mono> gens) {
    std::sort(gens.begin(), gens.end(),
              [](Mono a, Mono b) { return mono_deg(a) < mono_deg(b); });
    std::vector<Mono> out;
    for (Mono g : gens) {
        bool red = false;
        for (Mono h : out)
            if (mono_divides(h, g)) {
                red = true;
                break;
            }
        if (!red) out.push_back(g);
    }
    return out;
}

std::vector<Int> hilbert_rec(std::vector<Mono> gens, int nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {Int(1)};
    if (mono_deg(gens[0]) == 0) return {};  // ideal contains 1
    // closed form when all generators are powers of distinct variables
    bool pure = true;
    uint64_t support_seen = 0;
    for (Mono g : gens) {
        int nsup = 0, var = -1;
        for (int i = 0; i < nvars; ++i)
            if (mono_exp(g, i)) {
                ++nsup;
                var = i;
            }
        if (nsup != 1 || (support_seen >> var) & 1) {
            pure = false;
            break;
        }
        support_seen |= 1ull << var;
    }
    if (pure) {
        std::vector<Int> num{Int(1)};
        for (Mono g : gens) {
            std::vector<Int> f(mono_deg(g) + 1, 0);
            f[0] = 1;
            f[mono_deg(g)] = -1;
            std::vector<Int> prod(num.size() + f.size() - 1, 0);
            for (size_t i = 0; i < num.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) prod[i + j] += num[i] * f[j];
            num = std::move(prod);
        }
        return num;
    }
    // pivot: a variable occurring in the most generators
    int best_var = 0, best_count = -1;
    for (int v = 0; v < nvars; ++v) {
        int cnt = 0;
        for (Mono g : gens)
            if (mono_exp(g, v)) ++cnt;
        if (cnt > best_count) {
            best_count = cnt;
            best_var = v;
        }
    }
    Mono pivot = mono_var(best_var);
    // N(I) = N(I + (x)) + t * N(I : x)
    std::vector<Mono> plus, colon;
    plus.push_back(pivot);
    for (Mono g : gens) {
        if (mono_exp(g, best_var) == 0) plus.push_back(g);
        int e = mono_exp(g, best_var);
        colon.push_back(e ? mono_set(g, best_var, e - 1) : g);
    }
    std::vector<Int> a = hilbert_rec(std::move(plus), nvars);
    std::vector<Int> b = hilbert_rec(std::move(colon), nvars);
    std::vector<Int> out = a;
    poly_add_shifted(out, b, 1, +1);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

std::vector<Int> hilbert_numerator(std::vector<Mono> gens, int nvars) {
    return hilbert_rec(std::move(gens), nvars);
}

int monomial_krull_dim(const std::vector<Mono>& gens, int nvars) {
    std::vector<Int> num = hilbert_numerator(gens, nvars);
    if (num.empty()) return -1;  // zero ring
    // dim = nvars - multiplicity of (1-t) in the numerator
    int mult = 0;
    std::vector<Int> cur = num;
    for (;;) {
        Int val = 0;
        for (const auto& c : cur) val += c;
        if (val != 0) break;
        // divide by (1 - t): q(t) = cur / (1-t)
        std::vector<Int> q(cur.size() - 1, 0);
        Int carry = 0;
        // cur = (1 - t) q => q_0 = cur_0, q_i = cur_i + q_{i-1}
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            q[i] = cur[i] + (i ? q[i - 1] : Int(0));
        }
        cur = std::move(q);
        ++mult;
        if (cur.empty()) break;
    }
    return nvars - mult;
}

Int monomial_hilbert_constant(const std::vector<Mono>& gens, int nvars) {
    std::vector<Int> num = hilbert_numerator(gens, nvars);
    // write num = (1-t)^(nvars-1) * M(t); the Hilbert function is eventually M(1)
    std::vector<Int> cur = num;
    for (int k = 0; k < nvars - 1; ++k) {
        std::vector<Int> q(std::max<size_t>(cur.size(), 1) - 1, 0);
        for (size_t i = 0; i + 1 < cur.size(); ++i) q[i] = cur[i] + (i ? q[i - 1] : Int(0));
        // check exact division: sum of cur must be 0
        Int val = 0;
        for (const auto& c : cur) val += c;
        if (val != 0) throw std::domain_error("hilbert_constant: quotient not zero-dimensional");
        cur = std::move(q);
    }
    Int s = 0;
    for (const auto& c : cur) s += c;
    return s;
}

}  // namespace weylk3
