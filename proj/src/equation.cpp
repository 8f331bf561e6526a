#include "weylk3/pipeline.hpp"

#include <sstream>

namespace weylk3 {

namespace {

// ---- finite quotient algebra of a 0-dimensional projective scheme -------------

struct FiniteQuotient {
    int nvars;                       // ambient projective variables
    int patch;                       // dehomogenized variable
    Groebner<Rat> gb;                // affine Groebner basis (nvars-1 vars)
    std::vector<Mono> basis;         // standard monomials
    int dim() const { return (int)basis.size(); }

    QMPoly reduce(const QMPoly& f) const { return gb.nf(f); }

    QMPoly from_homogeneous(const QMPoly& f) const {
        // dehomogenize at the patch variable
        Ord o = drl(nvars - 1);
        QMPoly p(o);
        for (size_t i = 0; i < f.m.size(); ++i) {
            std::vector<int> exps;
            for (int v = 0; v < nvars; ++v)
                if (v != patch) exps.push_back(mono_exp(f.m[i], v));
            p.m.push_back(mono_make(exps));
            p.c.push_back(f.c[i]);
        }
        p.sort_terms();
        return reduce(p);
    }
};

FiniteQuotient make_quotient(int nvars, const std::vector<QMPoly>& gens) {
    // pick a patch variable whose hyperplane misses the scheme
    for (int j = nvars - 1; j >= 0; --j) {
        std::vector<QMPoly> with_h = gens;
        with_h.push_back(QMPoly::variable(drl(nvars), j));
        auto G = groebner<Rat>(with_h, drl(nvars));
        if (monomial_krull_dim(G.lt_gens(), nvars) > 0) continue;
        FiniteQuotient q;
        q.nvars = nvars;
        q.patch = j;
        // affine ideal
        std::vector<QMPoly> aff;
        Ord o = drl(nvars - 1);
        for (const auto& g : gens) {
            QMPoly p(o);
            for (size_t i = 0; i < g.m.size(); ++i) {
                std::vector<int> exps;
                for (int v = 0; v < nvars; ++v)
                    if (v != j) exps.push_back(mono_exp(g.m[i], v));
                p.m.push_back(mono_make(exps));
                p.c.push_back(g.c[i]);
            }
            p.sort_terms();
            aff.push_back(std::move(p));
        }
        q.gb = groebner<Rat>(aff, o);
        // standard monomials
        auto lt = q.gb.lt_gens();
        if (monomial_krull_dim(lt, nvars - 1) != 0)
            throw std::runtime_error("make_quotient: patch is not finite");
        std::vector<Mono> todo{mono_one()};
        std::set<Mono> seen{mono_one()};
        while (!todo.empty()) {
            Mono m = todo.back();
            todo.pop_back();
            q.basis.push_back(m);
            for (int v = 0; v < nvars - 1; ++v) {
                Mono mv = mono_mul(m, mono_var(v));
                bool red = false;
                for (Mono l : lt)
                    if (mono_divides(l, mv)) {
                        red = true;
                        break;
                    }
                if (!red && !seen.count(mv)) {
                    seen.insert(mv);
                    todo.push_back(mv);
                }
            }
        }
        std::sort(q.basis.begin(), q.basis.end());
        return q;
    }
    throw std::runtime_error("make_quotient: no covering affine patch");
}

std::vector<Rat> to_vec(const FiniteQuotient& q, const QMPoly& f) {
    std::map<Mono, Rat> mm;
    for (size_t i = 0; i < f.m.size(); ++i) mm[f.m[i]] = f.c[i];
    std::vector<Rat> v;
    for (Mono b : q.basis) {
        auto it = mm.find(b);
        v.push_back(it == mm.end() ? Rat(0) : it->second);
    }
    return v;
}

// monic minimal polynomial of the fraction n/d in the quotient algebra
QPoly minpoly_fraction(const FiniteQuotient& q, const QMPoly& n, const QMPoly& d, int maxdeg) {
    // d must be invertible: check via its own minimal polynomial below
    std::vector<QMPoly> npow{QMPoly::constant(n.ord, Rat(1))};
    std::vector<QMPoly> dpow{QMPoly::constant(d.ord, Rat(1))};
    for (int k = 1; k <= maxdeg; ++k) {
        npow.push_back(q.reduce(npow.back() * n));
        dpow.push_back(q.reduce(dpow.back() * d));
    }
    for (int m = 1; m <= maxdeg; ++m) {
        // solve sum_j c_j * n^j d^(m-j) = 0 with c_m = 1
        Mat<Rat> A;  // columns j = 0..m-1, rows = algebra coordinates
        std::vector<Rat> rhs;
        std::vector<std::vector<Rat>> cols;
        for (int j = 0; j <= m; ++j) cols.push_back(to_vec(q, q.reduce(npow[j] * dpow[m - j])));
        A.assign(q.dim(), std::vector<Rat>(m, Rat(0)));
        rhs.assign(q.dim(), Rat(0));
        for (int r = 0; r < q.dim(); ++r) {
            for (int j = 0; j < m; ++j) A[r][j] = cols[j][r];
            rhs[r] = -cols[m][r];
        }
        std::vector<Rat> x;
        if (solve_linear(A, rhs, x)) {
            QPoly mp;
            for (int j = 0; j < m; ++j) mp.c.push_back(x[j]);
            mp.c.push_back(Rat(1));
            return mp;
        }
    }
    throw std::runtime_error("minpoly_fraction: degree above the cap");
}

// restrict the six fundamental forms to a rational subspace (columns basis)
std::vector<QMPoly> restrict_X_forms(const Mat<Rat>& basis) {
    const auto& inv = fundamental_invariants();
    return {restrict_to_subspace(inv.f2, basis), restrict_to_subspace(inv.f6, basis),
            restrict_to_subspace(inv.f8, basis)};
}

struct UVElems {
    QMPoly nu, du;  // u = nu/du
    QMPoly nv, dv;  // v = nv/dv
};

// u = f12^3/f9^4 and v = f5^3*f12/f9^3 restricted to the subspace, reduced in
// the quotient
UVElems uv_elements(const FiniteQuotient& q, const Mat<Rat>& basis) {
    const auto& inv = fundamental_invariants();
    QMPoly f5r = restrict_to_subspace(inv.f5, basis);
    QMPoly f9r = restrict_to_subspace(inv.f9, basis);
    QMPoly f12r = restrict_to_subspace(inv.f12, basis);
    QMPoly f5a = q.from_homogeneous(f5r), f9a = q.from_homogeneous(f9r),
           f12a = q.from_homogeneous(f12r);
    UVElems uv;
    QMPoly f12_2 = q.reduce(f12a * f12a);
    QMPoly f9_2 = q.reduce(f9a * f9a);
    uv.nu = q.reduce(f12_2 * f12a);
    uv.du = q.reduce(q.reduce(f9_2 * f9_2));
    QMPoly f5_2 = q.reduce(f5a * f5a);
    uv.nv = q.reduce(q.reduce(f5_2 * f5a) * f12a);
    uv.dv = q.reduce(f9_2 * f9a);
    return uv;
}

UVPair uv_minpolys(const FiniteQuotient& q, const UVElems& uv, int maxdeg) {
    UVPair out;
    out.min_u = minpoly_fraction(q, uv.nu, uv.du, maxdeg);
    out.min_v = minpoly_fraction(q, uv.nv, uv.dv, maxdeg);
    // u + v = (nu*dv + nv*du) / (du*dv)
    QMPoly n = q.reduce(q.reduce(uv.nu * uv.dv) + q.reduce(uv.nv * uv.du));
    QMPoly d = q.reduce(uv.du * uv.dv);
    out.min_upv = minpoly_fraction(q, n, d, 2 * maxdeg);
    out.points = out.min_u.degree();
    return out;
}

// paired (u, v) values in the number field defined by min_u
struct PairedUV {
    NumberField K;
    NumberField::Elem u, v;        // one Galois representative; the conjugate
                                   // pair is implicit
};

PairedUV pair_uv(const UVPair& d) {
    if (d.min_u.degree() == 1) {
        NumberField K(QPoly::x());
        if (d.min_v.degree() != 1) throw std::runtime_error("pair_uv: mixed degrees");
        PairedUV p{K, K.from_rat(-d.min_u.coeff(0)), K.from_rat(-d.min_v.coeff(0))};
        return p;
    }
    if (d.min_u.degree() != 2) throw std::runtime_error("pair_uv: unexpected degree");
    NumberField K(d.min_u);
    NumberField::Elem u = K.generator();
    std::vector<NumberField::Elem> v_candidates;
    if (d.min_v.degree() == 1) {
        v_candidates.push_back(K.from_rat(-d.min_v.coeff(0)));
    } else {
        // roots of min_v inside K
        Rat pv = d.min_v.coeff(1), qv = d.min_v.coeff(0);
        auto sq = K.try_sqrt(K.from_rat(pv * pv - 4 * qv));
        if (!sq) throw std::runtime_error("pair_uv: v does not live in Q(u)");
        for (int sgn : {+1, -1}) {
            NumberField::Elem root =
                K.mul(K.from_rat(Rat(1, 2)),
                      K.add(K.from_rat(-pv), K.mul(K.from_rat(sgn), *sq)));
            v_candidates.push_back(root);
        }
    }
    for (const auto& v : v_candidates) {
        NumberField::Elem s = K.add(u, v);
        // is u+v a root of min_upv?
        NumberField::Elem val = K.eval_poly(d.min_upv, s);
        if (val.is_zero()) return PairedUV{K, u, v};
    }
    throw std::runtime_error("pair_uv: pairing not resolved");
}

}  // namespace

// ---- the equation data ----------------------------------------------------------

const EquationData& surface_equation_data() {
    static EquationData data = [] {
        EquationData d;
        const auto& W = weyl_e6();
        const auto& inv = fundamental_invariants();
        const auto& jac = jacobian_product();
        auto names = named_classes();
        const auto& classes = W.conjugacy_classes();

        // eigenvector ratios at w9 and w12
        {
            const WMat& w9 = W.elem(classes[names.at("w9")].rep);
            auto v9 = eigenvector(w9, Cyclo::zeta(9));
            Cyclo f9v = inv.f9.eval<Cyclo>(v9, [](const Rat& q) { return Cyclo(q); });
            Cyclo jv = jac.eval<Cyclo>(v9);
            Cyclo ratio = (jv * jv) / f9v.pow(8);
            d.r9 = ratio.to_rational();
            // sanity: f5, f12 vanish at v9
            if (!inv.f5.eval<Cyclo>(v9, [](const Rat& q) { return Cyclo(q); }).is_zero() ||
                !inv.f12.eval<Cyclo>(v9, [](const Rat& q) { return Cyclo(q); }).is_zero())
                throw std::runtime_error("equation: f5/f12 do not vanish at v9");
        }
        {
            const WMat& w12 = W.elem(classes[names.at("w12")].rep);
            auto v12 = eigenvector(w12, Cyclo::zeta(12));
            Cyclo f12v = inv.f12.eval<Cyclo>(v12, [](const Rat& q) { return Cyclo(q); });
            Cyclo jv = jac.eval<Cyclo>(v12);
            Cyclo ratio = (jv * jv) / f12v.pow(6);
            d.r12 = ratio.to_rational();
            if (!inv.f5.eval<Cyclo>(v12, [](const Rat& q) { return Cyclo(q); }).is_zero() ||
                !inv.f9.eval<Cyclo>(v12, [](const Rat& q) { return Cyclo(q); }).is_zero())
                throw std::runtime_error("equation: f5/f9 do not vanish at v12");
        }

        // u at the point p (image of X^{v3}): computed on the rational piece
        // V(v3, 1) and cross-checked on the zeta_3 pieces
        {
            const WMat& v3 = W.elem(classes[names.at("v3")].rep);
            std::optional<Rat> u_val;
            EigenPieces pieces = eigen_pieces_of(v3);
            const auto& jacp = jacobian_product();
            for (const auto& piece : pieces.pieces) {
                if (piece.basis.size() != 2) continue;
                // binary forms over the field: restricted f2, f6, f8
                std::vector<UPoly<Cyclo>> uni;
                bool infinity_ok = false;
                for (const auto& f : piece.forms) {
                    UPoly<Cyclo> u;
                    for (size_t t = 0; t < f.m.size(); ++t) {
                        int e0 = mono_exp(f.m[t], 0);
                        if ((int)u.c.size() <= e0) u.c.resize(e0 + 1, Cyclo(0));
                        u.c[e0] = u.c[e0] + f.c[t];
                    }
                    u.trim();
                    if (!u.is_zero() && u.degree() == mono_deg(f.m[0]) && f.degree() >= 0)
                        infinity_ok = true;  // leading term survives: [1:0] not a zero
                    uni.push_back(u);
                }
                UPoly<Cyclo> g = uni[0];
                for (size_t t = 1; t < uni.size(); ++t) g = UPoly<Cyclo>::gcd(g, uni[t]);
                if (g.degree() <= 0) continue;
                if (!infinity_ok) throw std::runtime_error("equation: v3 piece has point at infinity");
                // restrict f5, f9, f12, Jac to the piece as univariate polys mod g
                auto restrict_uni = [&](const QMPoly& f) {
                    MPoly<Cyclo> r = compose_linear<Rat, Cyclo>(
                        f,
                        [&] {
                            std::vector<MPoly<Cyclo>> images(kDim, MPoly<Cyclo>(drl(2)));
                            for (int v = 0; v < kDim; ++v) {
                                for (int j = 0; j < 2; ++j)
                                    if (!piece.basis[j][v].is_zero()) {
                                        images[v].m.push_back(mono_var(j));
                                        images[v].c.push_back(piece.basis[j][v]);
                                    }
                                images[v].sort_terms();
                            }
                            return images;
                        }(),
                        drl(2), [](const Rat& q) { return Cyclo(q); });
                    UPoly<Cyclo> u;
                    for (size_t t = 0; t < r.m.size(); ++t) {
                        int e0 = mono_exp(r.m[t], 0);
                        if ((int)u.c.size() <= e0) u.c.resize(e0 + 1, Cyclo(0));
                        u.c[e0] = u.c[e0] + r.c[t];
                    }
                    u.trim();
                    return u;
                };
                UPoly<Cyclo> f5u = restrict_uni(inv.f5) % g;
                UPoly<Cyclo> f9u = restrict_uni(inv.f9) % g;
                UPoly<Cyclo> f12u = restrict_uni(inv.f12) % g;
                // f5 vanishes on the reduced points
                UPoly<Cyclo> gsf = g / UPoly<Cyclo>::gcd(g, g.derivative());
                if (!(restrict_uni(inv.f5) % gsf).is_zero())
                    throw std::runtime_error("equation: f5 does not vanish on X^{v3}");
                // Jac vanishes there too (product of restricted forms mod gsf)
                {
                    UPoly<Cyclo> prod(Cyclo(1));
                    for (const auto& form : jacp.forms) {
                        UPoly<Cyclo> lin;
                        lin.c.assign(2, Cyclo(0));
                        for (int j = 0; j < 2; ++j) {
                            Cyclo acc(0);
                            for (int i2 = 0; i2 < kDim; ++i2)
                                acc = acc + Cyclo((int)form[i2].get_si()) * piece.basis[j][i2];
                            lin.c[j] = acc;
                        }
                        lin.trim();
                        prod = (prod * lin) % gsf;
                    }
                    if (!prod.is_zero())
                        throw std::runtime_error("equation: Jac does not vanish on X^{v3}");
                }
                // u = f12^3 / f9^4 must be a rational constant mod g
                UPoly<Cyclo> n = (f12u * f12u % g) * f12u % g;
                UPoly<Cyclo> dd = (f9u * f9u % g);
                dd = (dd * dd) % g;
                UPoly<Cyclo> gg, s, t;
                UPoly<Cyclo>::xgcd(dd, g, gg, s, t);
                if (gg.degree() != 0) throw std::runtime_error("equation: f9 vanishes on X^{v3}");
                UPoly<Cyclo> val = (n * s) % g;
                if (val.degree() > 0) throw std::runtime_error("equation: u not constant on X^{v3}");
                Cyclo c = val.is_zero() ? Cyclo(0) : val.c[0];
                if (!c.is_rational()) throw std::runtime_error("equation: u not rational on X^{v3}");
                if (u_val && *u_val != c.to_rational())
                    throw std::runtime_error("equation: u differs between v3 pieces");
                u_val = c.to_rational();
            }
            if (!u_val) throw std::runtime_error("equation: X^{v3} has no 2-dim pieces");
            d.u_p = *u_val;
        }

        // consistency of the leading part: r9 = r12 * u_p^2
        if (d.r9 != d.r12 * d.u_p * d.u_p)
            throw std::runtime_error("equation: leading-part consistency fails");

        // p1 data from X^{v2} (96 points on the rational 4-space)
        {
            const WMat& v2 = W.elem(classes[names.at("v2")].rep);
            auto basis = rational_eigenspace_basis(v2, 1);
            if (basis.size() != 4) throw std::runtime_error("equation: V(v2,1) not 4-dim");
            auto q = make_quotient(4, restrict_X_forms(basis));
            if (q.dim() != 96) throw std::runtime_error("equation: X^{v2} patch is not 96-dim");
            auto uv = uv_elements(q, basis);
            d.p1_data = uv_minpolys(q, uv, 2);
        }

        // p2 data from the Jac-vanishing part of X^{u3} (72 points)
        {
            const WMat& u3 = W.elem(classes[names.at("u3")].rep);
            auto basis = rational_eigenspace_basis(u3, 1);
            if (basis.size() != 4) throw std::runtime_error("equation: V(u3,1) not 4-dim");
            auto gens = restrict_X_forms(basis);
            QMPoly jr = jacobian_product().expand_restricted(basis);
            qm_primitivize(jr);
            gens.push_back(jr);
            auto q = make_quotient(4, gens);
            if (q.dim() != 72)
                throw std::runtime_error("equation: Jac-vanishing part of X^{u3} is not 72 points");
            auto uv = uv_elements(q, basis);
            QPoly mu = minpoly_fraction(q, uv.nu, uv.du, 1);
            QPoly mv = minpoly_fraction(q, uv.nv, uv.dv, 1);
            d.p2_u = -mu.coeff(0);
            d.p2_v = -mv.coeff(0);
        }

        // r data from X^{s2} ∩ {x1 = 0}
        {
            auto s = e6_simple_reflections();
            // subspace: <x, e2> = 0 and x1 = 0
            Mat<Rat> rows;
            auto G2 = e6_gram_matrix();
            std::vector<Rat> grow(kDim);
            for (int j2 = 0; j2 < kDim; ++j2) grow[j2] = G2[1][j2];
            rows.push_back(grow);
            std::vector<Rat> e1(kDim, Rat(0));
            e1[0] = 1;
            rows.push_back(e1);
            auto basis = kernel_basis(rows);
            // primitive integer basis
            for (auto& v : basis) {
                Int l = 1;
                for (auto& qq : v) l = int_lcm(l, qq.get_den());
                Int g0 = 0;
                for (auto& qq : v) g0 = int_gcd(g0, Int(qq * Rat(l)));
                for (auto& qq : v) qq = qq * Rat(l) / Rat(g0);
            }
            if (basis.size() != 4) throw std::runtime_error("equation: s2 section not 4-dim");
            auto q = make_quotient(4, restrict_X_forms(basis));
            if (q.dim() != 96) throw std::runtime_error("equation: s2 section is not 96 points");
            auto uv = uv_elements(q, basis);
            d.r_data = uv_minpolys(q, uv, 2);
        }

        // the five-point linear system for (a, b, c, d, e)
        {
            Mat<Rat> A;
            std::vector<Rat> rhs;
            auto add_rows = [&](const PairedUV& p) {
                const NumberField& K = p.K;
                using E = NumberField::Elem;
                E u = p.u, v = p.v;
                E uv = K.mul(u, v);
                std::vector<E> cols{uv, K.mul(u, uv), K.mul(uv, v),
                                    K.mul(v, K.mul(v, v)), K.mul(K.mul(v, v), K.mul(v, v))};
                // rhs = r9 * u * (1 - u/u_p)^2
                E one = K.from_rat(1);
                E t = K.sub(one, K.mul(u, K.from_rat(Rat(1) / d.u_p)));
                E r = K.mul(K.from_rat(d.r9), K.mul(u, K.mul(t, t)));
                int deg = std::max(1, K.degree());
                for (int comp = 0; comp < deg; ++comp) {
                    std::vector<Rat> row;
                    for (auto& cc : cols) row.push_back(cc.coeff(comp));
                    A.push_back(row);
                    rhs.push_back(r.coeff(comp));
                }
            };
            add_rows(pair_uv(d.p1_data));
            add_rows(pair_uv(d.r_data));
            // p2 row (rational)
            {
                NumberField K(QPoly::x());
                PairedUV p{K, K.from_rat(d.p2_u), K.from_rat(d.p2_v)};
                add_rows(p);
            }
            std::vector<Rat> x;
            if (!solve_linear(A, rhs, x) || x.size() != 5)
                throw std::runtime_error("equation: singular linear system");
            // uniqueness: the coefficient matrix must have rank 5
            if (mat_rank(A) != 5) throw std::runtime_error("equation: underdetermined system");
            d.a = x[0];
            d.b = x[1];
            d.c = x[2];
            d.d = x[3];
            d.e = x[4];
        }
        return d;
    }();
    return data;
}

// ---- calibration ------------------------------------------------------------------

namespace {

// exponent valuation of a rational at a prime
int val_at(const Rat& q, const Int& prime) {
    int v = 0;
    Int n = q.get_num();
    while (n % prime == 0) {
        n /= prime;
        ++v;
    }
    Int dd = q.get_den();
    while (dd % prime == 0) {
        dd /= prime;
        --v;
    }
    return v;
}

std::vector<Int> prime_support(const Rat& q) {
    std::vector<Int> out;
    for (Int x : {abs(q.get_num()), q.get_den()}) {
        for (Int p = 2; p * p <= x; p = p + 1) {
            if (x % p == 0) {
                out.push_back(p);
                while (x % p == 0) x /= p;
            }
        }
        if (x > 1) out.push_back(x);
    }
    return out;
}

}  // namespace

const Calibration& surface_calibration() {
    static Calibration cal = [] {
        const EquationData& d = surface_equation_data();
        Calibration c;
        const Rat r9M(-2187, 4096), r12M(-256, 19683);
        const Rat aM(207, 32), bM(800, 729), cM(1375, 81), dM(-3125, 864), eM(-3125, 108);

        // kappa_j^2 / kappa_3^8 = R1, kappa_j^2 / kappa_4^6 = R2,
        // kappa_5^4 kappa_4 / kappa_j^2 = R3
        Rat R1 = r9M / d.r9, R2 = r12M / d.r12, R3 = d.e / eM;
        if (R1 <= 0 || R2 <= 0) {
            c.obstruction = "leading ratios have the wrong sign";
            return c;
        }
        std::set<std::string> prime_set;
        std::vector<Int> primes;
        for (const Rat* q : {&R1, &R2, &R3})
            for (const Int& p : prime_support(*q))
                if (prime_set.insert(p.get_str()).second) primes.push_back(p);
        std::sort(primes.begin(), primes.end());
        // solve 2xj - 8x3 = v1, 2xj - 6x4 = v2, 4x5 + x4 - 2xj = v3 per prime
        std::map<std::string, std::array<int, 4>> exps;  // prime -> (x5, x3, x4, xj)
        for (const Int& p : primes) {
            int v1 = val_at(R1, p), v2 = val_at(R2, p), v3 = val_at(R3, p);
            bool ok = false;
            for (int xj = -60; xj <= 60 && !ok; ++xj) {
                if ((2 * xj - v1) % 8 != 0) continue;
                if ((2 * xj - v2) % 6 != 0) continue;
                int x3 = (2 * xj - v1) / 8;
                int x4 = (2 * xj - v2) / 6;
                if ((v3 + 2 * xj - x4) % 4 != 0) continue;
                int x5 = (v3 + 2 * xj - x4) / 4;
                exps[p.get_str()] = {x5, x3, x4, xj};
                ok = true;
            }
            if (!ok) {
                c.obstruction = "no rational solution at prime " + p.get_str();
                return c;
            }
        }
        auto build = [&](int idx) {
            Rat r(1);
            for (const Int& p : primes) {
                int e = exps[p.get_str()][idx];
                r *= rat_pow(Rat(p), e);
            }
            return r;
        };
        c.k5 = build(0);
        c.k3 = build(1);
        c.k4 = build(2);
        c.kj = build(3);
        // sign of kappa_4 from R3 (kappa_5^4 is positive)
        if (R3 < 0) c.k4 = -c.k4;
        // residual sign sigma = sign(kappa_5 kappa_3) from the b-coefficient
        auto transform = [&](const Rat& coeff, int e5, int e3, int e4) {
            return coeff * c.kj * c.kj / (rat_pow(c.k5, e5) * rat_pow(c.k3, e3) * rat_pow(c.k4, e4));
        };
        Rat b_plus = transform(d.b, 1, 1, 4);
        int sigma = (b_plus == bM) ? +1 : -1;
        if (sigma < 0) c.k5 = -c.k5;  // put the sign on kappa_5
        c.solvable = true;

        c.a = transform(d.a, 1, 5, 1);
        c.b = transform(d.b, 1, 1, 4);
        c.c = transform(d.c, 2, 2, 2);
        c.d = transform(d.d, 3, 3, 0);
        c.e = transform(d.e, 4, 0, 1);
        // point data in the paper frame: u scales by k4^3/k3^4, v by k5 k4/k3^3
        Rat su = rat_pow(c.k4, 3) / rat_pow(c.k3, 4);
        Rat sv = c.k5 * c.k4 / rat_pow(c.k3, 3);
        c.u_p = d.u_p * su;
        c.r12_ratio = d.r12 * c.kj * c.kj / rat_pow(c.k4, 6);
        c.p2_u = d.p2_u * su;
        c.p2_v = d.p2_v * sv;
        auto scale_min = [&](const QPoly& mp, const Rat& s) {
            // minimal polynomial of s * root: m(x/s) * s^deg
            QPoly out;
            int n = mp.degree();
            for (int i = 0; i <= n; ++i) out.c.push_back(mp.coeff(i) * rat_pow(s, n - i));
            out.trim();
            return out;
        };
        c.p1_min_u = scale_min(d.p1_data.min_u, su);
        c.p1_min_v = scale_min(d.p1_data.min_v, sv);
        c.p1_min_upv = QPoly();  // pairing is checked in the unscaled frame
        return c;
    }();
    return cal;
}

QMPoly published_rhs_at_y5_1() {
    // j^2 = -3 (27/64 y3^4 - 16/243 y4^3)^2 - y5 R at y5 = 1, variables (y3, y4)
    Ord o = drl(2);
    auto term = [&](const Rat& coeff, int e3, int e4) {
        QMPoly t(o);
        t.m.push_back(mono_make({e3, e4}));
        t.c.push_back(coeff);
        return t;
    };
    QMPoly lead = term(Rat(27, 64), 4, 0) - term(Rat(16, 243), 0, 3);
    QMPoly rhs = (lead * lead) * Rat(-3);
    // R(1, y3, y4) = y3 y4 (a y3^4 + b y4^3) + c y3^2 y4^2 + d y3^3 + e y4
    QMPoly R = term(Rat(207, 32), 5, 1) + term(Rat(800, 729), 1, 4) + term(Rat(1375, 81), 2, 2) +
               term(Rat(-3125, 864), 3, 0) + term(Rat(-3125, 108), 0, 1);
    return rhs - R;
}

}  // namespace weylk3
