#include "weylk3/scheme.hpp"

#include <sstream>

namespace weylk3 {

std::string qmpoly_str(const QMPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < p.m.size(); ++i) {
        const Rat& c = p.c[i];
        if (i) os << (c >= 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Rat a = abs(c);
        bool printed = false;
        if (a != 1 || mono_deg(p.m[i]) == 0) {
            os << a.get_str();
            printed = true;
        }
        for (int v = 0; v < p.ord.nvars; ++v) {
            int e = mono_exp(p.m[i], v);
            if (!e) continue;
            if (printed) os << "*";
            os << vars[v];
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

Scheme Scheme::projective(int nvars, std::vector<QMPoly> gens) {
    Scheme s;
    s.ambient = Ambient::Projective;
    s.nvars = nvars;
    s.gens = std::move(gens);
    for (auto& g : s.gens)
        if (!g.is_zero() && !g.is_homogeneous())
            throw std::domain_error("projective scheme: generators must be homogeneous");
    return s;
}

Scheme Scheme::affine(int nvars, std::vector<QMPoly> gens) {
    Scheme s;
    s.ambient = Ambient::Affine;
    s.nvars = nvars;
    s.gens = std::move(gens);
    return s;
}

const Groebner<Rat>& Scheme::gb() const {
    if (!gb_cache) {
        auto g = groebner<Rat>(gens, drl(nvars));
        gb_cache = std::make_shared<Groebner<Rat>>(std::move(g));
    }
    return *gb_cache;
}

Scheme Scheme::meet(const Scheme& other) const {
    if (other.nvars != nvars || other.ambient != ambient)
        throw std::domain_error("meet: ambient mismatch");
    Scheme s = *this;
    s.gb_cache.reset();
    for (const auto& g : other.gens) s.gens.push_back(g);
    return s;
}

int Scheme::dimension() const {
    int krull = monomial_krull_dim(gb().lt_gens(), nvars);
    if (ambient == Ambient::Affine) return krull;
    return std::max(krull, 0) - 1;
}

Int Scheme::degree_zero_dimensional() const {
    if (ambient != Ambient::Projective)
        throw std::domain_error("degree: projective schemes only");
    int krull = monomial_krull_dim(gb().lt_gens(), nvars);
    if (krull != 1) throw std::domain_error("degree: scheme is not zero-dimensional");
    return monomial_hilbert_constant(gb().lt_gens(), nvars);
}

bool Scheme::contained_in(const Scheme& B) const {
    for (const auto& f : B.gens)
        if (!gb().contains(f)) return false;
    return true;
}

Scheme Scheme::affine_patch(int k) const {
    if (ambient != Ambient::Projective) throw std::domain_error("affine_patch: projective only");
    std::vector<QMPoly> out;
    Ord o = drl(nvars - 1);
    for (const auto& g : gens) {
        QMPoly p(o);
        for (size_t i = 0; i < g.m.size(); ++i) {
            Mono src = g.m[i];
            std::vector<int> exps;
            for (int v = 0; v < nvars; ++v)
                if (v != k) exps.push_back(mono_exp(src, v));
            p.m.push_back(mono_make(exps));
            p.c.push_back(g.c[i]);
        }
        p.sort_terms();
        out.push_back(std::move(p));
    }
    return Scheme::affine(nvars - 1, std::move(out));
}

Scheme Scheme::singular_subscheme(int codim) const {
    // Jacobian criterion: all codim x codim minors of the Jacobian matrix
    size_t r = gens.size();
    Ord o = gens.empty() ? drl(nvars) : gens[0].ord;
    std::vector<std::vector<QMPoly>> jac(r, std::vector<QMPoly>(nvars, QMPoly(o)));
    for (size_t i = 0; i < r; ++i)
        for (int v = 0; v < nvars; ++v) jac[i][v] = gens[i].derivative(v);

    std::vector<QMPoly> out = gens;
    std::vector<int> rows(codim), cols(codim);
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == codim) {
            std::function<void(int, int)> pick_cols = [&](int cstart, int cdepth) {
                if (cdepth == codim) {
                    // determinant of the selected minor by cofactor expansion
                    std::function<QMPoly(std::vector<int>, std::vector<int>)> det =
                        [&](std::vector<int> rr, std::vector<int> cc) -> QMPoly {
                        if (rr.size() == 1) return jac[rr[0]][cc[0]];
                        QMPoly d(o);
                        for (size_t k = 0; k < cc.size(); ++k) {
                            std::vector<int> rr2(rr.begin() + 1, rr.end());
                            std::vector<int> cc2;
                            for (size_t j = 0; j < cc.size(); ++j)
                                if (j != k) cc2.push_back(cc[j]);
                            QMPoly t = jac[rr[0]][cc[k]] * det(rr2, cc2);
                            d = (k % 2 == 0) ? d + t : d - t;
                        }
                        return d;
                    };
                    QMPoly m = det(rows, cols);
                    if (!m.is_zero()) {
                        qm_primitivize(m);
                        out.push_back(m);
                    }
                    return;
                }
                for (int c = cstart; c < nvars; ++c) {
                    cols[cdepth] = c;
                    pick_cols(c + 1, cdepth + 1);
                }
            };
            pick_cols(0, 0);
            return;
        }
        for (int i = start; i < (int)r; ++i) {
            rows[depth] = i;
            pick_rows(i + 1, depth + 1);
        }
    };
    if (codim <= (int)r) pick_rows(0, 0);
    Scheme s;
    s.ambient = ambient;
    s.nvars = nvars;
    s.gens = std::move(out);
    return s;
}

bool Scheme::certified_empty_modp() const {
    // Hilbert-function comparison: the quotient dimension can only grow under
    // reduction mod p, so a finite (affine: zero) staircase mod p certifies
    // emptiness over Q.
    static const uint64_t primes[] = {2147483647ull, 2147483629ull, 2147483587ull};
    for (uint64_t p : primes) {
        GFp::p = p;
        std::vector<MPoly<GFp>> mg;
        bool bad = false;
        for (const auto& g : gens) {
            auto r = qm_to_gfp(g);
            if (r.is_zero() && !g.is_zero()) bad = true;  // leading data lost mod p
            mg.push_back(std::move(r));
        }
        if (bad) continue;
        auto G = groebner<GFp>(std::move(mg), drl(nvars));
        int krull = monomial_krull_dim(G.lt_gens(), nvars);
        if (ambient == Ambient::Affine) {
            if (krull == -1) return true;  // 1 lies in the ideal mod p
        } else {
            if (krull <= 0) return true;  // staircase finite mod p
        }
    }
    return false;
}

bool Scheme::is_smooth(int codim) const {
    Scheme sing = singular_subscheme(codim);
    if (sing.certified_empty_modp()) return true;
    return sing.dimension() == -1;
}

Scheme fixed_point_scheme(const WMat& g) {
    Ord o = drl(kDim);
    // rows: x and g*x, with (g*x)_i = sum_k g_ik x_k
    std::vector<QMPoly> gx(kDim, QMPoly(o));
    for (int i = 0; i < kDim; ++i) {
        for (int k = 0; k < kDim; ++k)
            if (g.at(i, k)) {
                gx[i].m.push_back(mono_var(k));
                gx[i].c.push_back(Rat((int)g.at(i, k)));
            }
        gx[i].sort_terms();
    }
    std::vector<QMPoly> minors;
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) {
            QMPoly xi = QMPoly::variable(o, i), xj = QMPoly::variable(o, j);
            QMPoly m = xi * gx[j] - xj * gx[i];
            if (!m.is_zero()) {
                qm_primitivize(m);
                minors.push_back(std::move(m));
            }
        }
    return Scheme::projective(kDim, std::move(minors));
}

QMPoly restrict_to_subspace(const QMPoly& f, const Mat<Rat>& basis_cols) {
    int k = (int)basis_cols.size();  // basis vectors
    int n = f.ord.nvars;
    Ord o = drl(k);
    // x_v = sum_j basis[j][v] * t_j
    std::vector<QMPoly> images(n, QMPoly(o));
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < k; ++j) {
            if (basis_cols[j][v] == 0) continue;
            images[v].m.push_back(mono_var(j));
            images[v].c.push_back(basis_cols[j][v]);
        }
        images[v].sort_terms();
    }
    // substitute with per-variable power caching
    std::vector<std::vector<QMPoly>> pow(n);
    for (int v = 0; v < n; ++v) pow[v].push_back(QMPoly::constant(o, Rat(1)));
    QMPoly acc(o);
    for (size_t i = 0; i < f.m.size(); ++i) {
        QMPoly t = QMPoly::constant(o, f.c[i]);
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

// ---- zero-dimensional solving ------------------------------------------------

namespace {

using NFElem = NumberField::Elem;

// polynomial in one variable with coefficients in a number field
using KPoly = std::vector<NFElem>;

KPoly kpoly_trim(KPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

}  // namespace

std::vector<SolvedPoint> solve_zero_dimensional(const Scheme& S) {
    if (S.ambient != Ambient::Affine) throw std::domain_error("solve: affine schemes only");
    int n = S.nvars;
    auto G = groebner<Rat>(S.gens, lex(n));
    // the staircase must be finite
    if (monomial_krull_dim(G.lt_gens(), n) > 0)
        throw std::domain_error("solve: positive-dimensional system");

    struct Partial {
        NumberField field;
        std::vector<NFElem> coords;  // filled from the last variable backwards
    };
    std::vector<Partial> stack{Partial{NumberField(QPoly::x()), {}}};
    std::vector<SolvedPoint> out;

    // process variables from x_{n-1} (last in lex) to x_0
    for (int v = n - 1; v >= 0; --v) {
        std::vector<Partial> next;
        for (auto& part : stack) {
            const NumberField& K = part.field;
            // substitute known coordinates into every basis element and keep
            // those that become univariate in x_v
            KPoly uni;  // gcd accumulator as min-degree univariate
            bool have = false;
            for (const auto& g : G.basis) {
                // check support: variables < v must vanish, others known
                bool ok = true;
                for (int w = 0; w < v; ++w)
                    for (Mono mm : g.m)
                        if (mono_exp(mm, w)) {
                            ok = false;
                            break;
                        }
                if (!ok) continue;
                // evaluate to a univariate polynomial in x_v over K
                KPoly p;
                for (size_t i = 0; i < g.m.size(); ++i) {
                    int e = mono_exp(g.m[i], v);
                    NFElem coef = K.from_rat(g.c[i]);
                    for (int w = v + 1; w < n; ++w) {
                        int ew = mono_exp(g.m[i], w);
                        // coords stored back-to-front: coords[n-1-w]
                        for (int t = 0; t < ew; ++t)
                            coef = K.mul(coef, part.coords[n - 1 - w]);
                    }
                    if ((int)p.size() <= e) p.resize(e + 1, K.from_rat(0));
                    p[e] = K.add(p[e], coef);
                }
                p = kpoly_trim(std::move(p));
                if (p.empty()) continue;
                if (!have) {
                    uni = p;
                    have = true;
                } else {
                    // gcd in K[x_v]
                    KPoly a = uni, b = p;
                    while (!b.empty()) {
                        // a mod b
                        KPoly r = a;
                        NFElem inv = K.inv(b.back());
                        while (r.size() >= b.size() && !r.empty()) {
                            NFElem f = K.mul(r.back(), inv);
                            size_t s = r.size() - b.size();
                            for (size_t i2 = 0; i2 < b.size(); ++i2)
                                r[s + i2] = K.sub(r[s + i2], K.mul(f, b[i2]));
                            r = kpoly_trim(std::move(r));
                        }
                        a = b;
                        b = r;
                    }
                    uni = a;
                }
            }
            if (!have || uni.empty())
                throw std::domain_error("solve: triangular structure missing");
            int d = (int)uni.size() - 1;
            if (d == 0) continue;  // inconsistent branch: no roots
            if (d == 1) {
                NFElem root = K.div(K.sub(K.from_rat(0), uni[0]), uni[1]);
                Partial np = part;
                np.coords.push_back(root);
                next.push_back(std::move(np));
                continue;
            }
            if (K.degree() == 1) {
                // factor over Q and branch into number fields
                QPoly q;
                for (auto& e : uni) q.c.push_back(e.coeff(0));
                q.trim();
                auto fac = factor_over_Q(q);
                for (auto& [f, mult] : fac.factors) {
                    (void)mult;
                    if (f.degree() > 4)
                        throw std::domain_error("solve: extension degree above 4 required");
                    NumberField K2(f);
                    Partial np{K2, {}};
                    for (const auto& c : part.coords) np.coords.push_back(K2.from_rat(c.coeff(0)));
                    np.coords.push_back(f.degree() == 1
                                            ? K2.from_rat(-f.coeff(0) / f.coeff(1))
                                            : K2.generator());
                    next.push_back(std::move(np));
                }
                continue;
            }
            if (d == 2 && K.degree() == 2) {
                // quadratic over a quadratic field: try discriminant sqrt in K
                NFElem a2 = uni[2], a1 = uni[1], a0 = uni[0];
                NFElem disc = K.sub(K.mul(a1, a1),
                                    K.mul(K.from_rat(4), K.mul(a2, a0)));
                auto sq = K.try_sqrt(disc);
                if (!sq) throw std::domain_error("solve: extension degree above 4 required");
                for (int sgn : {+1, -1}) {
                    NFElem root = K.div(
                        K.sub(K.mul(K.from_rat(sgn), *sq), a1),
                        K.mul(K.from_rat(2), a2));
                    Partial np = part;
                    np.coords.push_back(root);
                    next.push_back(std::move(np));
                }
                continue;
            }
            throw std::domain_error("solve: extension degree above 4 required");
        }
        stack = std::move(next);
    }
    for (auto& part : stack) {
        SolvedPoint pt{part.field, {}};
        for (int v = 0; v < n; ++v) pt.coords.push_back(part.coords[n - 1 - v]);
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace weylk3
