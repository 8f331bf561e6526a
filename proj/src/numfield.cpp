#include "weylk3/numfield.hpp"

namespace weylk3 {

std::optional<Rat> NumberField::rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    Int n = q.get_num(), d = q.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rat(rn) / Rat(rd);
    }
    return std::nullopt;
}

std::optional<NumberField::Elem> NumberField::try_sqrt(const Elem& dl) const {
    if (degree() == 1) {
        auto r = rat_sqrt(dl.coeff(0));
        if (!r) return std::nullopt;
        return from_rat(*r);
    }
    if (degree() != 2) throw std::domain_error("try_sqrt: only degree <= 2 supported");
    // minimal polynomial x^2 + p x + q, element d = u + v*alpha
    Rat p = m_.coeff(1), q0 = m_.coeff(0);
    Rat u = dl.coeff(0), v = dl.coeff(1);
    // (s + t*alpha)^2 = s^2 - q0 t^2 + (2 s t - p t^2) alpha
    if (v == 0) {
        if (auto s = rat_sqrt(u)) return from_rat(*s);
        // maybe sqrt(u) = t*alpha + s with t != 0: s^2 - q0 t^2 = u, 2st = p t^2
        // => s = p t / 2, t^2 (p^2/4 - q0) = u
        Rat disc = p * p / 4 - q0;
        if (disc != 0) {
            if (auto t2 = rat_sqrt(u / disc)) {
                Rat t = *t2;
                Rat s = p * t / 2;
                return reduce(QPoly::from({s, t}));
            }
        }
        return std::nullopt;
    }
    // t != 0: s = (v + p t^2) / (2 t), then (p^2 - 4 q0) T^2 + (2 p v - 4 u) T + v^2 = 0, T = t^2
    Rat A = p * p - 4 * q0, B = 2 * p * v - 4 * u, C = v * v;
    std::vector<Rat> Ts;
    if (A == 0) {
        if (B != 0) Ts.push_back(-C / B);
    } else {
        Rat disc = B * B - 4 * A * C;
        if (auto sd = rat_sqrt(disc)) {
            Ts.push_back((-B + *sd) / (2 * A));
            Ts.push_back((-B - *sd) / (2 * A));
        }
    }
    for (const Rat& T : Ts) {
        if (T < 0) continue;
        if (auto t = rat_sqrt(T)) {
            if (*t == 0) continue;
            Rat s = (v + p * T) / (2 * *t);
            Elem cand = reduce(QPoly::from({s, *t}));
            if (mul(cand, cand) == reduce(dl)) return cand;
        }
    }
    return std::nullopt;
}

// determinant of a square matrix of rational polynomials, by expansion
static QPoly det_poly_matrix(std::vector<std::vector<QPoly>> m) {
    size_t n = m.size();
    if (n == 0) return QPoly(Rat(1));
    if (n == 1) return m[0][0];
    QPoly det;
    for (size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero()) continue;
        std::vector<std::vector<QPoly>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<QPoly> row;
            for (size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        QPoly term = m[0][k] * det_poly_matrix(std::move(sub));
        det = (k % 2 == 0) ? det + term : det - term;
    }
    return det;
}

QPoly resultant_y(const QPoly& a, const std::vector<QPoly>& b) {
    // Sylvester matrix of a (constant coefficients) and b (poly coefficients)
    int da = a.degree();
    int db = (int)b.size() - 1;
    int n = da + db;
    std::vector<std::vector<QPoly>> S(n, std::vector<QPoly>(n));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) S[i][i + j] = QPoly(a.coeff(da - j));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) S[db + i][i + j] = b[db - j];
    return det_poly_matrix(std::move(S));
}

FieldTower field_tower(const std::vector<QPoly>& min_polys) {
    for (const auto& p : min_polys) {
        auto fac = factor_over_Q(p);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1)
            throw std::domain_error("field_tower: reducible minimal polynomial");
    }
    FieldTower tw{NumberField(QPoly::x()), {}};  // Q, min poly x (gamma = 0)
    for (const auto& p : min_polys) {
        const QPoly M = tw.field.min_poly();
        int d = M.degree();
        if (d == 1) {
            // first extension: gamma = root of p
            NumberField K(p);
            FieldTower next{K, {}};
            for (size_t i = 0; i < tw.gens.size(); ++i)
                next.gens.push_back(K.from_rat(tw.gens[i].coeff(0)));
            next.gens.push_back(K.generator());
            tw = std::move(next);
            continue;
        }
        int e = p.degree();
        bool done = false;
        for (int c = 1; c <= 40 && !done; ++c) {
            // candidate primitive element gamma' = b + c * gamma, where b is a
            // root of p and gamma the current primitive element.
            // min poly candidate: Res_y(M(y), p(x - c y)).
            std::vector<QPoly> pc(p.degree() + 1);  // p(x - c y) as poly in y
            // expand: p(x - cy) = sum_k p_k (x - cy)^k
            std::vector<std::vector<QPoly>> pow_xy;  // (x - cy)^k as poly in y
            pow_xy.push_back({QPoly(Rat(1))});
            for (int k = 1; k <= p.degree(); ++k) {
                // multiply previous by (x - c y)
                const auto& prev = pow_xy.back();
                std::vector<QPoly> cur(prev.size() + 1);
                QPoly x = QPoly::x();
                for (size_t i = 0; i < prev.size(); ++i) {
                    cur[i] = cur[i] + prev[i] * x;
                    cur[i + 1] = cur[i + 1] - prev[i] * Rat(c);
                }
                pow_xy.push_back(std::move(cur));
            }
            std::vector<QPoly> bpoly(1);  // p(x - cy) in y
            for (int k = 0; k <= p.degree(); ++k) {
                if (p.coeff(k) == 0) continue;
                const auto& pk = pow_xy[k];
                if (bpoly.size() < pk.size()) bpoly.resize(pk.size());
                for (size_t i = 0; i < pk.size(); ++i) bpoly[i] = bpoly[i] + pk[i] * p.coeff(k);
            }
            QPoly R = resultant_y(M, bpoly);
            if (R.degree() != d * e) continue;
            QPoly g = QPoly::gcd(R, R.derivative());
            if (g.degree() != 0) continue;  // not squarefree: unlucky shift
            auto fac = factor_over_Q(R);
            if (fac.factors.size() != 1) continue;  // compositum smaller than d*e
            NumberField K(fac.factors[0].first);
            // recover gamma (old primitive element) inside K:
            // gcd_y( M(y), p(gamma' - c y) ) is linear with root y = gamma.
            using E = NumberField::Elem;
            auto lift = [&](const QPoly& q) {  // constant in y
                return std::vector<E>{K.from_rat(Rat(0))};
            };
            (void)lift;
            // polynomials in y over K
            auto poly_mod = [&](std::vector<E> f) {
                while (!f.empty() && f.back().is_zero()) f.pop_back();
                return f;
            };
            std::vector<E> My;
            for (int i = 0; i <= M.degree(); ++i) My.push_back(K.from_rat(M.coeff(i)));
            std::vector<E> Py;  // p(gamma' - c y) in y over K
            {
                E gp = K.generator();
                std::vector<std::vector<E>> pw;  // (gamma' - cy)^k
                pw.push_back({K.from_rat(1)});
                for (int k2 = 1; k2 <= p.degree(); ++k2) {
                    const auto& prev = pw.back();
                    std::vector<E> cur(prev.size() + 1, K.from_rat(0));
                    for (size_t i = 0; i < prev.size(); ++i) {
                        cur[i] = K.add(cur[i], K.mul(prev[i], gp));
                        cur[i + 1] = K.sub(cur[i + 1], K.mul(prev[i], K.from_rat(Rat(c))));
                    }
                    pw.push_back(std::move(cur));
                }
                Py.assign(1, K.from_rat(0));
                for (int k2 = 0; k2 <= p.degree(); ++k2) {
                    if (p.coeff(k2) == 0) continue;
                    const auto& pk = pw[k2];
                    if (Py.size() < pk.size()) Py.resize(pk.size(), K.from_rat(0));
                    for (size_t i = 0; i < pk.size(); ++i)
                        Py[i] = K.add(Py[i], K.mul(pk[i], K.from_rat(p.coeff(k2))));
                }
                Py = poly_mod(Py);
            }
            // Euclid over K in y
            auto degy = [](const std::vector<E>& f) { return (int)f.size() - 1; };
            std::vector<E> A = My, B = Py;
            while (degy(B) > 0) {
                // A mod B
                std::vector<E> R2 = A;
                E invlc = K.inv(B.back());
                while (degy(R2) >= degy(B)) {
                    E f = K.mul(R2.back(), invlc);
                    int s = degy(R2) - degy(B);
                    for (int i = 0; i <= degy(B); ++i) R2[s + i] = K.sub(R2[s + i], K.mul(f, B[i]));
                    R2 = poly_mod(R2);
                    if (R2.empty()) break;
                }
                A = B;
                B = R2;
                if (B.empty()) break;
            }
            // expected: A linear in y after the loop ends with B constant-zero
            std::vector<E> lin = A;
            if (degy(lin) != 1) continue;
            E gamma_old = K.div(K.sub(K.from_rat(0), lin[0]), lin[1]);  // root of linear poly
            E b_new = K.div(K.sub(K.generator(), K.mul(gamma_old, K.from_rat(0))), K.from_rat(1));
            // b = gamma' - c*gamma
            b_new = K.sub(K.generator(), K.mul(K.from_rat(Rat(c)), gamma_old));
            FieldTower next{K, {}};
            for (const auto& g0 : tw.gens) next.gens.push_back(K.eval_poly(g0, gamma_old));
            next.gens.push_back(b_new);
            tw = std::move(next);
            done = true;
        }
        if (!done) throw std::runtime_error("field_tower: no primitive element found");
    }
    int total = 1;
    (void)total;
    return tw;
}

}  // namespace weylk3
