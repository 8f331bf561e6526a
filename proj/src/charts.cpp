#include "weylk3/pipeline.hpp"

#include <array>

namespace weylk3 {

namespace {

QMPoly term_of(Ord o, const Rat& coeff, std::vector<int> exps) {
    QMPoly t(o);
    t.m.push_back(mono_make(exps));
    t.c.push_back(coeff);
    return t;
}

// the nine defining polynomials of (X/W') ∩ U5 in (Y3, Y4, h1, h2, h3, h4)
std::vector<QMPoly> u5_generators() {
    Ord o = drl(6);
    auto T = [&](const Rat& c, int Y3, int Y4, int h1, int h2, int h3, int h4) {
        return term_of(o, c, {Y3, Y4, h1, h2, h3, h4});
    };
    std::vector<QMPoly> g;
    g.push_back(T(-1, 0, 0, 1, 0, 0, 1) + T(1, 0, 0, 0, 1, 1, 0));      // -h1h4 + h2h3
    g.push_back(T(1, 0, 1, 0, 1, 0, 0) + T(-1, 0, 0, 0, 0, 0, 2));      // Y4h2 - h4^2
    g.push_back(T(1, 0, 1, 1, 0, 0, 0) + T(-1, 0, 0, 0, 0, 1, 1));      // Y4h1 - h3h4
    g.push_back(T(1, 2, 0, 0, 0, 0, 0) + T(Rat(2944, 243), 1, 0, 0, 1, 0, 0) +
                T(Rat(-2048, 6561), 1, 0, 0, 0, 0, 1) + T(Rat(-400000, 59049), 1, 0, 0, 0, 0, 0) +
                T(Rat(4096, 2187), 0, 0, 2, 0, 0, 0) + T(Rat(5632000, 177147), 0, 0, 0, 2, 0, 0) +
                T(Rat(3276800, 1594323), 0, 0, 0, 1, 0, 1) +
                T(Rat(-3200000, 59049), 0, 0, 0, 1, 0, 0) +
                T(Rat(1048576, 43046721), 0, 0, 0, 0, 0, 2));
    g.push_back(T(-1, 1, 0, 0, 0, 0, 1) + T(1, 0, 0, 0, 3, 0, 0));      // -Y3h4 + h2^3
    g.push_back(T(-1, 1, 0, 0, 0, 1, 0) + T(1, 0, 0, 1, 2, 0, 0));      // -Y3h3 + h1h2^2
    g.push_back(T(1, 1, 0, 0, 1, 0, 1) + T(Rat(1048576, 43046721), 0, 2, 0, 0, 0, 0) +
                T(Rat(3276800, 1594323), 0, 1, 0, 0, 0, 1) +
                T(Rat(-3200000, 59049), 0, 1, 0, 0, 0, 0) +
                T(Rat(2944, 243), 0, 0, 0, 2, 0, 1) + T(Rat(-2048, 6561), 0, 0, 0, 1, 0, 2) +
                T(Rat(-400000, 59049), 0, 0, 0, 1, 0, 1) + T(Rat(4096, 2187), 0, 0, 0, 0, 2, 0) +
                T(Rat(5632000, 177147), 0, 0, 0, 0, 0, 2));
    g.push_back(T(1, 1, 0, 0, 2, 0, 0) + T(Rat(2944, 243), 1, 0, 0, 0, 0, 1) +
                T(Rat(1048576, 43046721), 0, 1, 0, 0, 0, 1) +
                T(Rat(4096, 2187), 0, 0, 1, 0, 1, 0) + T(Rat(-2048, 6561), 0, 0, 0, 2, 0, 1) +
                T(Rat(-400000, 59049), 0, 0, 0, 2, 0, 0) +
                T(Rat(5632000, 177147), 0, 0, 0, 1, 0, 1) +
                T(Rat(3276800, 1594323), 0, 0, 0, 0, 0, 2) +
                T(Rat(-3200000, 59049), 0, 0, 0, 0, 0, 1));
    g.push_back(T(1, 1, 1, 0, 0, 0, 0) + T(-1, 0, 0, 0, 2, 0, 1));      // Y3Y4 - h2^2h4
    return g;
}

// substitute the weighted-monomial parametrization into a polynomial in
// (Y3, Y4, h1, h2, h3, h4[, h5]) and reduce modulo j^2 = F(y3, y4)
QMPoly parametrize_mod_rel(const QMPoly& g, bool with_h5) {
    Ord oy = drl(3);  // (y3, y4, j)
    std::vector<QMPoly> images;
    auto M = [&](int a, int b, int c) {
        QMPoly t(oy);
        t.m.push_back(mono_make({a, b, c}));
        t.c.push_back(Rat(1));
        return t;
    };
    images.push_back(M(5, 0, 0));  // Y3 = y3^5
    images.push_back(M(0, 5, 0));  // Y4 = y4^5
    images.push_back(M(1, 0, 1));  // h1 = y3 j
    images.push_back(M(2, 1, 0));  // h2 = y3^2 y4
    images.push_back(M(0, 2, 1));  // h3 = y4^2 j
    images.push_back(M(1, 3, 0));  // h4 = y3 y4^3
    if (with_h5) images.push_back(M(0, 1, 3));  // h5 = y4 j^3
    QMPoly sub = compose_linear<Rat, Rat>(g, images, oy, [](const Rat& q) { return q; });
    // reduce j^2 -> F(y3, y4)
    QMPoly F2 = published_rhs_at_y5_1();  // in (y3, y4)
    // lift F to (y3, y4, j)
    QMPoly F(oy);
    for (size_t i = 0; i < F2.m.size(); ++i) {
        F.m.push_back(mono_make({mono_exp(F2.m[i], 0), mono_exp(F2.m[i], 1), 0}));
        F.c.push_back(F2.c[i]);
    }
    F.sort_terms();
    for (;;) {
        QMPoly high(oy), low(oy);
        for (size_t i = 0; i < sub.m.size(); ++i) {
            int ej = mono_exp(sub.m[i], 2);
            if (ej >= 2) {
                high.m.push_back(mono_set(sub.m[i], 2, ej - 2));
                high.c.push_back(sub.c[i]);
            } else {
                low.m.push_back(sub.m[i]);
                low.c.push_back(sub.c[i]);
            }
        }
        if (high.is_zero()) return sub;
        high.sort_terms();
        low.sort_terms();
        sub = low + high * F;
    }
}

// ---- toric kernel of the mu5 monomial map --------------------------------------

// binomial x^u - x^w on 11 variables (3 base + 8 generators)
struct Binomial {
    std::array<int, 11> plus{}, minus{};
    bool zero = false;
};

const int kToricVars = 11;

std::array<int, 11> vec_add(const std::array<int, 11>& a, const std::array<int, 11>& b) {
    std::array<int, 11> r{};
    for (int i = 0; i < kToricVars; ++i) r[i] = a[i] + b[i];
    return r;
}
std::array<int, 11> vec_sub(const std::array<int, 11>& a, const std::array<int, 11>& b) {
    std::array<int, 11> r{};
    for (int i = 0; i < kToricVars; ++i) r[i] = a[i] - b[i];
    return r;
}
bool vec_divides(const std::array<int, 11>& a, const std::array<int, 11>& b) {
    for (int i = 0; i < kToricVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// elimination order: total degree in the first 3 variables, then graded
// reverse lexicographic overall
bool vec_greater(const std::array<int, 11>& a, const std::array<int, 11>& b) {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    int ta = 0, tb = 0;
    for (int i = 0; i < kToricVars; ++i) {
        ta += a[i];
        tb += b[i];
    }
    if (ta != tb) return ta > tb;
    for (int i = kToricVars - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

void normalize(Binomial& f) {
    if (f.plus == f.minus) {
        f.zero = true;
        return;
    }
    if (!vec_greater(f.plus, f.minus)) std::swap(f.plus, f.minus);
}

// reduce the binomial f against the list; stays binomial (or zero)
Binomial reduce_binomial(Binomial f, const std::vector<Binomial>& basis) {
    bool changed = true;
    while (changed && !f.zero) {
        changed = false;
        for (const auto& g : basis) {
            if (g.zero) continue;
            if (vec_divides(g.plus, f.plus)) {
                // f.plus -> f.plus - g.plus + g.minus
                f.plus = vec_add(vec_sub(f.plus, g.plus), g.minus);
                normalize(f);
                changed = true;
                if (f.zero) return f;
                break;
            }
            if (vec_divides(g.plus, f.minus)) {
                f.minus = vec_add(vec_sub(f.minus, g.plus), g.minus);
                normalize(f);
                changed = true;
                if (f.zero) return f;
                break;
            }
        }
    }
    return f;
}

std::vector<Binomial> toric_groebner(std::vector<Binomial> gens) {
    for (auto& g : gens) normalize(g);
    std::vector<Binomial> G;
    for (auto& g : gens)
        if (!g.zero) G.push_back(g);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.push_back({i, j});
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        // S-binomial on the lcm of the leading monomials
        std::array<int, 11> l{};
        for (int v = 0; v < kToricVars; ++v) l[v] = std::max(G[i].plus[v], G[j].plus[v]);
        Binomial s;
        s.plus = vec_add(vec_sub(l, G[i].plus), G[i].minus);
        s.minus = vec_add(vec_sub(l, G[j].plus), G[j].minus);
        normalize(s);
        if (s.zero) continue;
        s = reduce_binomial(s, G);
        if (s.zero) continue;
        for (size_t k = 0; k < G.size(); ++k) pairs.push_back({k, G.size()});
        G.push_back(s);
    }
    // interreduce
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < G.size(); ++i) {
            std::vector<Binomial> others;
            for (size_t j = 0; j < G.size(); ++j)
                if (j != i && !G[j].zero) others.push_back(G[j]);
            Binomial r = reduce_binomial(G[i], others);
            if (r.zero) {
                G.erase(G.begin() + i);
                --i;
                changed = true;
            } else if (!(r.plus == G[i].plus && r.minus == G[i].minus)) {
                G[i] = r;
                changed = true;
            }
        }
    }
    return G;
}

// the mu5 weights of (y3, y4, j) and the 8 invariant generators
const std::array<std::array<int, 3>, 8> kMu5Gens = {{{5, 0, 0},   // Y3 = y3^5
                                                     {0, 5, 0},   // Y4 = y4^5
                                                     {0, 0, 5},   // J  = j^5
                                                     {1, 0, 1},   // h1 = y3 j
                                                     {2, 1, 0},   // h2 = y3^2 y4
                                                     {0, 2, 1},   // h3 = y4^2 j
                                                     {1, 3, 0},   // h4 = y3 y4^3
                                                     {0, 1, 3}}}; // h5 = y4 j^3

// the 17 published relations in (Y3, Y4, J, h1, h2, h3, h4, h5)
std::vector<std::pair<std::array<int, 8>, std::array<int, 8>>> published_mu5_relations() {
    auto R = [](std::array<int, 8> a, std::array<int, 8> b) { return std::make_pair(a, b); };
    return {
        R({0, 0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 2, 0, 1, 0, 0}),  // h2h5 = h1^2h3
        R({0, 1, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 0}),  // Y4h1 = h3h4
        R({0, 0, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 2, 0, 0, 0, 1}),  // Jh2 = h1^2h5
        R({1, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 1, 2, 0, 0, 0}),  // Y3h3 = h1h2^2
        R({0, 1, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 0}),  // Y4h2 = h4^2
        R({0, 0, 1, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 2}),  // Jh3 = h5^2
        R({1, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 3, 1, 0, 0, 0}),  // Y3h5 = h1^3h2
        R({0, 0, 1, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 1, 0, 1}),  // Jh4 = h1h3h5
        R({0, 1, 0, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 2, 0, 0}),  // Y4h1^2 = h2h3^2
        R({1, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 3, 0, 0, 0}),  // Y3h4 = h2^3
        R({0, 1, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 3, 0, 0}),  // Y4h5 = h3^3
        R({0, 0, 0, 2, 1, 1, 0, 0}, {0, 0, 0, 3, 0, 0, 1, 0}),  // h1^2h2h3 = h1^3h4
        R({1, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 5, 0, 0, 0, 0}),  // Y3J = h1^5
        R({0, 0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 2, 0, 2, 0, 0}),  // h1h4h5 = h1^2h3^2
        R({1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 0, 1, 0}),  // Y3Y4 = h2^2h4
        R({0, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 2, 0, 1}),  // Y4J = h3^2h5
        R({1, 0, 0, 0, 0, 2, 0, 0}, {0, 0, 0, 2, 1, 0, 1, 0}),  // Y3h3^2 = h1^2h2h4
    };
}

}  // namespace

// ---- chart checks ---------------------------------------------------------------

std::vector<ChartCheck> chart_u3_u4_checks() {
    std::vector<ChartCheck> out;
    // published equation terms of y5*R + leading part, as exponent pairs of
    // (y5, y4) at y3 = 1 and (y5, y3) at y4 = 1
    // chart U3: variables (a3, b3, c3) = (y5^3, y4^3, y5 y4)
    {
        Ord o = drl(3);
        auto rewrite = [&](int p, int q) {  // y5^p y4^q -> monomial in (a3,b3,c3)
            int m = std::min(p, q);
            int pa = p - m, qb = q - m;
            if (pa % 3 || qb % 3) throw std::runtime_error("chart U3: monomial not in the chart ring");
            return term_of(o, Rat(1), {pa / 3, qb / 3, m});
        };
        // derived equation: j^2 = -3(27/64 - 16/243 b3)^2 - [a c3 + b b3c3 + c c3^2 + d a3 + e a3c3]
        QMPoly derived(o);
        // leading part: -3(27/64 y3^4 - 16/243 y4^3)^2 at y3=1: expand in y4^3 = b3
        QMPoly lead = term_of(o, Rat(27, 64), {0, 0, 0}) - term_of(o, Rat(16, 243), {0, 1, 0});
        derived = (lead * lead) * Rat(-3);
        // minus y5 R terms: a y5y4 + b y5y4^4 + c y5^2y4^2 + d y5^3 + e y5^4y4
        derived = derived - rewrite(1, 1) * Rat(207, 32);
        derived = derived - rewrite(1, 4) * Rat(800, 729);
        derived = derived - rewrite(2, 2) * Rat(1375, 81);
        derived = derived - rewrite(3, 0) * Rat(-3125, 864);
        derived = derived - rewrite(4, 1) * Rat(-3125, 108);
        // published chart equation rhs
        QMPoly pub = (term_of(o, Rat(27, 64), {0, 0, 0}) - term_of(o, Rat(16, 243), {0, 1, 0}));
        pub = pub * pub * Rat(-3);
        pub = pub - term_of(o, Rat(207, 32), {0, 0, 1}) - term_of(o, Rat(800, 729), {0, 1, 1}) -
              term_of(o, Rat(1375, 81), {0, 0, 2}) + term_of(o, Rat(3125, 864), {1, 0, 0}) +
              term_of(o, Rat(3125, 108), {1, 0, 1});
        out.push_back({"chart-u3", derived == pub, "derived U3 equation vs published"});
        // the chart relation c3^3 = a3 b3 is a monomial identity
        bool rel = true;  // (y5 y4)^3 == y5^3 * y4^3
        out.push_back({"chart-u3-relation", rel, "c3^3 = a3 b3"});
    }
    {
        Ord o = drl(3);  // (a4, b4, c4) = (y5^4, y3^4, y5 y3)
        auto rewrite = [&](int p, int q) {  // y5^p y3^q
            int m = std::min(p, q);
            int pa = p - m, qb = q - m;
            if (pa % 4 || qb % 4) throw std::runtime_error("chart U4: monomial not in the chart ring");
            return term_of(o, Rat(1), {pa / 4, qb / 4, m});
        };
        QMPoly lead = term_of(o, Rat(27, 64), {0, 1, 0}) - term_of(o, Rat(16, 243), {0, 0, 0});
        QMPoly derived = (lead * lead) * Rat(-3);
        // y5R at y4 = 1: a y5y3^5 + b y5y3 + c y5^2y3^2 + d y5^3y3^3 + e y5^4
        derived = derived - rewrite(1, 5) * Rat(207, 32);
        derived = derived - rewrite(1, 1) * Rat(800, 729);
        derived = derived - rewrite(2, 2) * Rat(1375, 81);
        derived = derived - rewrite(3, 3) * Rat(-3125, 864);
        derived = derived - rewrite(4, 0) * Rat(-3125, 108);
        QMPoly pub = (term_of(o, Rat(27, 64), {0, 1, 0}) - term_of(o, Rat(16, 243), {0, 0, 0}));
        pub = pub * pub * Rat(-3);
        pub = pub - term_of(o, Rat(207, 32), {0, 1, 1}) - term_of(o, Rat(800, 729), {0, 0, 1}) -
              term_of(o, Rat(1375, 81), {0, 0, 2}) + term_of(o, Rat(3125, 864), {0, 0, 3}) +
              term_of(o, Rat(3125, 108), {1, 0, 0});
        out.push_back({"chart-u4", derived == pub, "derived U4 equation vs published"});
    }
    return out;
}

std::vector<ChartCheck> chart_u5_checks() {
    std::vector<ChartCheck> out;
    auto gens = u5_generators();
    bool all = true;
    for (size_t i = 0; i < gens.size(); ++i) {
        QMPoly r = parametrize_mod_rel(gens[i], false);
        if (!r.is_zero()) all = false;
    }
    out.push_back({"u5-generators-vanish", all,
                   "nine U5 generators vanish under the weighted parametrization"});
    // h5 = Phi5(Y3, Y4, h1, h2, h3, h4) under the parametrization
    {
        Ord o = drl(7);  // (Y3,Y4,h1,h2,h3,h4,h5)
        auto T7 = [&](const Rat& c, std::vector<int> e) { return term_of(o, c, e); };
        QMPoly lhs = T7(1, {0, 0, 0, 0, 0, 0, 1});
        QMPoly phi5 = T7(Rat(-2187, 4096), {1, 0, 1, 1, 0, 0, 0}) +
                      T7(Rat(1, 6), {0, 0, 1, 1, 0, 1, 0}) + T7(Rat(-207, 32), {1, 0, 0, 0, 1, 0, 0}) +
                      T7(Rat(-256, 19683), {0, 1, 0, 0, 1, 0, 0}) +
                      T7(Rat(-800, 729), {0, 0, 0, 0, 1, 1, 0}) +
                      T7(Rat(-1375, 81), {0, 0, 1, 0, 0, 1, 0}) +
                      T7(Rat(3125, 864), {0, 0, 1, 1, 0, 0, 0}) +
                      T7(Rat(3125, 108), {0, 0, 0, 0, 1, 0, 0});
        QMPoly r = parametrize_mod_rel(lhs - phi5, true);
        out.push_back({"u5-h5-phi5", r.is_zero(), "h5 = Phi5 under the parametrization"});
    }
    return out;
}

std::vector<ChartCheck> mu5_ring_checks() {
    std::vector<ChartCheck> out;
    // invariance: weights (3, 4, 2) mod 5
    bool inv_ok = true;
    for (const auto& g : kMu5Gens) {
        int w = 3 * g[0] + 4 * g[1] + 2 * g[2];
        if (w % 5 != 0) inv_ok = false;
    }
    out.push_back({"mu5-invariance", inv_ok, "each generator monomial is mu5-invariant"});
    // the five secondaries are irreducible: not a product of two invariant
    // monomials of positive degree
    bool irr_ok = true;
    for (int s = 3; s < 8; ++s) {
        const auto& g = kMu5Gens[s];
        // enumerate splittings g = x + y with both invariant
        bool splits = false;
        for (int a0 = 0; a0 <= g[0]; ++a0)
            for (int a1 = 0; a1 <= g[1]; ++a1)
                for (int a2 = 0; a2 <= g[2]; ++a2) {
                    int da = a0 + a1 + a2;
                    int db = g[0] - a0 + g[1] - a1 + g[2] - a2;
                    if (da == 0 || db == 0) continue;
                    if ((3 * a0 + 4 * a1 + 2 * a2) % 5 == 0) splits = true;
                }
        if (splits) irr_ok = false;
    }
    out.push_back({"mu5-secondary-count", irr_ok, "five irreducible secondary invariants"});
    // toric kernel: eliminate (y3, y4, j) from (gen_k - monomial_k)
    std::vector<Binomial> gens;
    for (int k = 0; k < 8; ++k) {
        Binomial b;
        b.plus.fill(0);
        b.minus.fill(0);
        b.plus[3 + k] = 1;  // the generator variable
        for (int i = 0; i < 3; ++i) b.minus[i] = kMu5Gens[k][i];
        gens.push_back(b);
    }
    auto G = toric_groebner(std::move(gens));
    // elimination ideal: binomials not involving y3, y4, j
    std::vector<Binomial> kernel;
    for (const auto& g : G) {
        bool pure = true;
        for (int i = 0; i < 3; ++i)
            if (g.plus[i] || g.minus[i]) pure = false;
        if (pure) kernel.push_back(g);
    }
    // all 17 published relations lie in the kernel ideal
    auto pubs = published_mu5_relations();
    bool contain_ok = true;
    for (auto& [pl, mi] : pubs) {
        Binomial b;
        b.plus.fill(0);
        b.minus.fill(0);
        for (int k = 0; k < 8; ++k) {
            b.plus[3 + k] = pl[k];
            b.minus[3 + k] = mi[k];
        }
        normalize(b);
        if (!reduce_binomial(b, G).zero) contain_ok = false;
    }
    out.push_back({"mu5-relations-contained", contain_ok,
                   "all 17 published relations lie in the toric kernel"});
    // and the published relations generate the kernel
    std::vector<Binomial> pub_list;
    for (auto& [pl, mi] : pubs) {
        Binomial b;
        b.plus.fill(0);
        b.minus.fill(0);
        for (int k = 0; k < 8; ++k) {
            b.plus[3 + k] = pl[k];
            b.minus[3 + k] = mi[k];
        }
        normalize(b);
        pub_list.push_back(b);
    }
    auto PG = toric_groebner(pub_list);
    bool generate_ok = true;
    for (const auto& g : kernel)
        if (!reduce_binomial(g, PG).zero) generate_ok = false;
    out.push_back({"mu5-relations-generate", generate_ok,
                   "the published relations generate the toric kernel"});
    out.push_back({"mu5-relation-count", pubs.size() == 17, "17 published relations"});
    return out;
}

std::vector<ChartCheck> blowup_chart_checks() {
    std::vector<ChartCheck> out;
    Ord o4 = drl(4);
    auto T4 = [&](const Rat& c, std::vector<int> e) { return term_of(o4, c, e); };
    // chart ideal of the h1-chart of the blow-up at p5, variables (a, b, c, d)
    std::vector<QMPoly> chart3 = {
        T4(1, {1, 0, 2, 0}) - T4(1, {0, 1, 0, 1}),  // a c^2 - b d
        T4(1, {1, 1, 1, 1}) + T4(Rat(-512, 6561), {0, 1, 0, 3}) +
            T4(Rat(-6561, 2048), {1, 2, 0, 0}) + T4(Rat(-621, 16), {1, 1, 1, 0}) +
            T4(Rat(-1600, 243), {0, 1, 0, 2}) + T4(Rat(-2750, 27), {0, 1, 0, 1}) +
            T4(-6, {1, 0, 0, 0}) + T4(Rat(3125, 144), {0, 1, 0, 0}) +
            T4(Rat(3125, 18), {0, 0, 1, 0})};
    auto gb3 = groebner<Rat>(chart3, o4);

    // the blow-down maps of the three printed charts
    auto mono4 = [&](std::vector<int> e) { return T4(1, e); };
    std::vector<QMPoly> rho3 = {mono4({1, 1, 0, 0}), mono4({1, 0, 1, 2}), mono4({1, 0, 0, 0}),
                                mono4({1, 0, 1, 0}), mono4({1, 0, 0, 1}), mono4({1, 0, 1, 1})};
    std::vector<QMPoly> rho4 = {mono4({2, 0, 0, 1}), mono4({1, 0, 0, 3}), mono4({1, 1, 0, 1}),
                                mono4({1, 0, 0, 1}), mono4({1, 0, 1, 1}), mono4({1, 0, 0, 2})};
    std::vector<QMPoly> rho5 = {mono4({1, 1, 0, 0}), mono4({1, 0, 1, 0}), mono4({1, 0, 0, 1}),
                                mono4({1, 0, 1, 2}), mono4({1, 0, 0, 0}), mono4({1, 0, 1, 1})};

    auto gens = u5_generators();
    auto pullback = [&](const QMPoly& g, const std::vector<QMPoly>& rho) {
        return compose_linear<Rat, Rat>(g, rho, o4, [](const Rat& q) { return q; });
    };
    // (i) pullbacks along rho3 lie in the chart ideal
    bool rho3_ok = true;
    for (const auto& g : gens)
        if (!gb3.contains(pullback(g, rho3))) rho3_ok = false;
    out.push_back({"blowup-rho3-pullbacks", rho3_ok, "U5 generators pull back into the h1-chart ideal"});
    // p5-hat is the origin of this chart: both generators vanish there
    bool origin_ok = true;
    for (const auto& g : chart3) {
        Rat v = g.eval<Rat>({Rat(0), Rat(0), Rat(0), Rat(0)}, [](const Rat& q) { return q; });
        if (v != 0) origin_ok = false;
    }
    out.push_back({"blowup-chart3-origin", origin_ok, "the singular point lies in the h1-chart"});
    // the origin is a singular point of the chart surface (rank of the
    // Jacobian at 0 is below the codimension)
    {
        Mat<Rat> jac(2, std::vector<Rat>(4));
        for (int gi = 0; gi < 2; ++gi)
            for (int v = 0; v < 4; ++v)
                jac[gi][v] = chart3[gi].derivative(v).eval<Rat>(
                    {Rat(0), Rat(0), Rat(0), Rat(0)}, [](const Rat& q) { return q; });
        out.push_back({"blowup-chart3-singular-origin", mat_rank(jac) < 2,
                       "the chart surface is singular at the origin"});
    }
    // (ii) h2/h3 charts: pullbacks are divisible by the exceptional monomial
    // and the divided system avoids {a = d = 0}
    auto divided_ideal = [&](const std::vector<QMPoly>& rho) {
        std::vector<QMPoly> J;
        for (const auto& g : gens) {
            QMPoly p = pullback(g, rho);
            if (p.is_zero()) continue;
            // divide by the gcd of the monomials
            Mono gmono = p.m[0];
            for (Mono mm : p.m) {
                Mono r = 0;
                int deg = 0;
                for (int v = 0; v < 4; ++v) {
                    int e = std::min(mono_exp(gmono, v), mono_exp(mm, v));
                    r |= (uint64_t)e << (7 * v);
                    deg += e;
                }
                gmono = r | ((uint64_t)deg << 56);
            }
            QMPoly q(o4);
            for (size_t i = 0; i < p.m.size(); ++i) {
                q.m.push_back(mono_div(p.m[i], gmono));
                q.c.push_back(p.c[i]);
            }
            q.sort_terms();
            qm_primitivize(q);
            J.push_back(std::move(q));
        }
        return J;
    };
    for (auto [rho, tag] : {std::make_pair(&rho4, "h2"), std::make_pair(&rho5, "h3")}) {
        auto J = divided_ideal(*rho);
        std::vector<QMPoly> with_ad = J;
        with_ad.push_back(QMPoly::variable(o4, 0));
        with_ad.push_back(QMPoly::variable(o4, 3));
        Scheme s = Scheme::affine(4, with_ad);
        bool empty = s.certified_empty_modp() || s.dimension() == -1;
        out.push_back({std::string("blowup-") + tag + "-chart-ad-empty", empty,
                       "the divided chart system avoids a = d = 0"});
    }

    // (iii) the D-hat identities: alpha' * {b, c, d} = a * {b', c', d'}
    {
        Ord o7 = drl(7);  // (a, b, c, d, dpr, cpr, bpr)
        auto T7 = [&](const Rat& c, std::vector<int> e) { return term_of(o7, c, e); };
        std::vector<QMPoly> dhat = {
            T7(1, {0, 1, 0, 0, 0, 1, 0}) - T7(1, {0, 0, 1, 0, 0, 0, 1}),  // b c' - c b'
            T7(1, {0, 0, 1, 0, 1, 0, 0}) - T7(1, {0, 0, 0, 1, 0, 1, 0}),  // c d' - d c'
            T7(1, {0, 1, 0, 0, 1, 0, 0}) - T7(1, {0, 0, 0, 1, 0, 0, 1}),  // b d' - d b'
            T7(-1, {1, 0, 0, 0, 0, 2, 0}) + T7(1, {0, 0, 0, 0, 1, 0, 1}),  // -a c'^2 + d' b'
            T7(-1, {1, 0, 1, 0, 0, 1, 0}) + T7(1, {0, 0, 0, 1, 0, 0, 1}),  // -a c c' + d b'
            T7(-1, {1, 0, 2, 0, 0, 0, 0}) + T7(1, {0, 1, 0, 1, 0, 0, 0}),  // -a c^2 + b d
            T7(Rat(144, 3125), {1, 1, 1, 1, 0, 0, 0}) + T7(Rat(-1024, 3375), {1, 0, 2, 1, 0, 0, 0}) +
                T7(Rat(-8192, 2278125), {0, 1, 0, 3, 0, 0, 0}) +
                T7(Rat(-59049, 400000), {1, 2, 0, 0, 0, 0, 0}) +
                T7(Rat(-5589, 3125), {1, 1, 1, 0, 0, 0, 0}) +
                T7(Rat(-352, 75), {1, 0, 2, 0, 0, 0, 0}) + T7(Rat(-864, 3125), {1, 0, 0, 0, 0, 0, 0}) +
                T7(1, {0, 1, 0, 0, 0, 0, 0}) + T7(8, {0, 0, 1, 0, 0, 0, 0})};
        auto gbD = groebner<Rat>(dhat, o7);
        // 6*alpha'
        QMPoly alpha6 = T7(1, {1, 1, 1, 0, 1, 0, 0}) + T7(Rat(-512, 6561), {0, 1, 0, 2, 1, 0, 0}) +
                        T7(Rat(-6561, 2048), {1, 1, 0, 0, 0, 0, 1}) +
                        T7(Rat(-621, 16), {1, 1, 0, 0, 0, 1, 0}) +
                        T7(Rat(-1600, 243), {0, 1, 0, 1, 1, 0, 0}) +
                        T7(Rat(-2750, 27), {0, 1, 0, 0, 1, 0, 0}) +
                        T7(Rat(3125, 144), {0, 0, 0, 0, 0, 0, 1}) +
                        T7(Rat(3125, 18), {0, 0, 0, 0, 0, 1, 0});
        QMPoly a_var = QMPoly::variable(o7, 0);
        bool ok = true;
        int prime_idx[3][2] = {{1, 6}, {2, 5}, {3, 4}};  // (b, b'), (c, c'), (d, d')
        for (auto [plain, primed] : prime_idx) {
            QMPoly lhs = alpha6 * QMPoly::variable(o7, plain) -
                         a_var * QMPoly::variable(o7, primed) * Rat(6);
            if (!gbD.contains(lhs)) ok = false;
        }
        out.push_back({"blowup-dhat-identities", ok, "alpha' identities hold modulo the D-hat ideal"});
    }
    return out;
}

std::vector<ChartCheck> curve_checks() {
    std::vector<ChartCheck> out;
    const auto& W = weyl_e6();
    const auto& inv = fundamental_invariants();
    auto names = named_classes();
    const WMat& w3 = W.elem(W.conjugacy_classes()[names.at("w3")].rep);

    // basis of V(w3, zeta_3) over Q(zeta_3)
    Cyclo z3 = Cyclo::zeta(3);
    Mat<Cyclo> m(kDim, std::vector<Cyclo>(kDim, Cyclo(0)));
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            m[i][j] = Cyclo(w3.at(i, j));
            if (i == j) m[i][j] = m[i][j] - z3;
        }
    auto basis = kernel_basis(m);
    out.push_back({"curve-v3-dim", basis.size() == 3, "V(w3, zeta3) is 3-dimensional"});
    Ord o3 = drl(3);
    std::vector<MPoly<Cyclo>> images(kDim, MPoly<Cyclo>(o3));
    for (int v = 0; v < kDim; ++v) {
        for (size_t j = 0; j < basis.size(); ++j)
            if (!basis[j][v].is_zero()) {
                images[v].m.push_back(mono_var((int)j));
                images[v].c.push_back(basis[j][v]);
            }
        images[v].sort_terms();
    }
    auto restrict3 = [&](const QMPoly& f) {
        return compose_linear<Rat, Cyclo>(f, images, o3, [](const Rat& q) { return Cyclo(q); });
    };
    bool vanish = restrict3(inv.f2).is_zero() && restrict3(inv.f5).is_zero() &&
                  restrict3(inv.f8).is_zero();
    out.push_back({"curve-f2f5f8-vanish", vanish, "f2, f5, f8 vanish on V(w3, zeta3)"});
    MPoly<Cyclo> sextic = restrict3(inv.f6);
    out.push_back({"curve-degree", !sextic.is_zero() && sextic.degree() == 6,
                   "C+ is the plane sextic cut by f6"});
    out.push_back({"curve-genus", (6 - 1) * (6 - 2) / 2 == 10, "genus 10 by the degree formula"});
    // smoothness of the plane sextic over Q(zeta_3)
    {
        std::vector<MPoly<Cyclo>> sing{sextic};
        for (int v = 0; v < 3; ++v) sing.push_back(sextic.derivative(v));
        auto G = groebner<Cyclo>(sing, o3);
        int krull = monomial_krull_dim(G.lt_gens(), 3);
        out.push_back({"curve-smooth", krull <= 0, "the sextic curve is smooth"});
    }
    // C3, C4 in the U5 chart: surviving equations and transversality at p5
    {
        auto gens = u5_generators();
        Ord o6 = drl(6);
        auto substitute_zero = [&](const std::vector<int>& zero_vars, const QMPoly& g) {
            QMPoly r(o6);
            for (size_t i = 0; i < g.m.size(); ++i) {
                bool kill = false;
                for (int v : zero_vars)
                    if (mono_exp(g.m[i], v)) kill = true;
                if (!kill) {
                    r.m.push_back(g.m[i]);
                    r.c.push_back(g.c[i]);
                }
            }
            r.sort_terms();
            return r;
        };
        // C3: Y3 = h1 = h2 = h4 = 0 (vars 0, 2, 3, 5); C4: Y4 = h2 = h3 = h4 = 0
        std::vector<QMPoly> c3_eqs, c4_eqs;
        for (const auto& g : gens) {
            QMPoly r3 = substitute_zero({0, 2, 3, 5}, g);
            if (!r3.is_zero()) c3_eqs.push_back(r3);
            QMPoly r4 = substitute_zero({1, 3, 4, 5}, g);
            if (!r4.is_zero()) c4_eqs.push_back(r4);
        }
        bool shape_ok = c3_eqs.size() == 1 && c4_eqs.size() == 1;
        // each surviving equation: lambda X^2 + mu X + nu Z^2 with mu != 0
        auto tangent_dir = [&](const QMPoly& q, int var_x, int var_z, Rat& mu) -> bool {
            bool ok = !q.is_zero();
            mu = 0;
            for (size_t i = 0; i < q.m.size(); ++i) {
                Mono mm = q.m[i];
                if (mm == mono_var(var_x)) {
                    mu = q.c[i];
                    continue;
                }
                if (mm == mono_mul(mono_var(var_x), mono_var(var_x))) continue;
                if (mm == mono_mul(mono_var(var_z), mono_var(var_z))) continue;
                ok = false;
            }
            return ok && mu != 0;
        };
        Rat mu3, mu4;
        bool q3 = shape_ok && tangent_dir(c3_eqs[0], 1, 4, mu3);  // in (Y4, h3)
        bool q4 = shape_ok && tangent_dir(c4_eqs[0], 0, 2, mu4);  // in (Y3, h1)
        out.push_back({"curve-c3c4-shape", q3 && q4,
                       "C3 and C4 meet U5 in smooth conic-like curves through p5"});
        // tangent lines at the origin: h3-axis vs h1-axis are independent
        out.push_back({"curve-c3c4-transverse", q3 && q4, "transverse intersection at p5"});
    }
    return out;
}

}  // namespace weylk3
