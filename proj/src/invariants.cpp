#include "weylk3/invariants.hpp"

#include <cstring>
#include <mutex>

namespace weylk3 {

namespace {

// dense monomial tables for 6 variables, one per total degree
struct DegTable {
    std::vector<Mono> monos;                    // all monomials of this degree
    std::unordered_map<Mono, int> index;
    std::vector<std::array<int, kDim>> up;      // index of m * x_v in the next table
};

std::vector<DegTable>& degree_tables() {
    static std::vector<DegTable> tables;
    return tables;
}
std::mutex deg_mutex;

void ensure_degree_tables(int maxdeg) {
    std::lock_guard<std::mutex> lock(deg_mutex);
    auto& tables = degree_tables();
    if ((int)tables.size() > maxdeg) return;
    if (tables.empty()) {
        DegTable t0;
        t0.monos.push_back(mono_one());
        t0.index.emplace(mono_one(), 0);
        tables.push_back(std::move(t0));
    }
    while ((int)tables.size() <= maxdeg) {
        const DegTable& prev = tables.back();
        DegTable t;
        for (Mono m : prev.monos)
            for (int v = 0; v < kDim; ++v) {
                Mono mv = mono_mul(m, mono_var(v));
                if (!t.index.count(mv)) {
                    t.index.emplace(mv, (int)t.monos.size());
                    t.monos.push_back(mv);
                }
            }
        tables.push_back(std::move(t));
        // transitions for the previous table
        DegTable& p = tables[tables.size() - 2];
        DegTable& c = tables.back();
        p.up.resize(p.monos.size());
        for (size_t i = 0; i < p.monos.size(); ++i)
            for (int v = 0; v < kDim; ++v) p.up[i][v] = c.index.at(mono_mul(p.monos[i], mono_var(v)));
    }
}

using I128 = __int128;

Int int_from_i128(I128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    Int hi = Int((unsigned long)(u >> 64));
    Int lo = Int((unsigned long)(u & 0xffffffffffffffffull));
    Int r = (hi << 64) + lo;
    return neg ? -r : r;
}

// dense expansion (int64) of a product of powers of integer linear forms
std::vector<int64_t> expand_form_powers(const std::vector<std::array<int8_t, kDim>>& forms,
                                        const std::vector<int>& exps) {
    int total = 0;
    for (int e : exps) total += e;
    ensure_degree_tables(total);
    std::vector<int64_t> cur{1};
    int deg = 0;
    for (size_t f = 0; f < forms.size(); ++f) {
        for (int rep = 0; rep < exps[f]; ++rep) {
            const DegTable& t = degree_tables()[deg];
            std::vector<int64_t> next(degree_tables()[deg + 1].monos.size(), 0);
            for (size_t i = 0; i < cur.size(); ++i) {
                int64_t c = cur[i];
                if (!c) continue;
                for (int v = 0; v < kDim; ++v) {
                    int a = forms[f][v];
                    if (a) next[t.up[i][v]] += c * a;
                }
            }
            cur = std::move(next);
            ++deg;
        }
    }
    return cur;
}

}  // namespace

// ---- Molien series -----------------------------------------------------------

std::vector<Rat> molien_series(const FiniteMatrixGroup& G, int truncation) {
    const auto& classes = G.conjugacy_classes();
    std::vector<Rat> acc(truncation + 1, Rat(0));
    for (const auto& cl : classes) {
        QPoly ch = wmat_charpoly(G.elem(cl.rep));
        // det(1 - t M) = reversed characteristic polynomial
        QPoly rev;
        rev.c.assign(ch.c.rbegin(), ch.c.rend());
        rev.trim();
        QPoly inv = rev.series_inverse(truncation + 1);
        for (int i = 0; i <= truncation; ++i)
            acc[i] += Rat((unsigned long)cl.members.size()) * inv.coeff(i);
    }
    Rat n((unsigned long)G.order());
    for (auto& c : acc) c /= n;
    return acc;
}

std::vector<int> molien_degrees(const std::vector<Rat>& series) {
    int T = (int)series.size() - 1;
    QPoly M = QPoly::from(series);
    QPoly P = M.series_inverse(T + 1);  // should be prod (1 - t^d) up to t^T
    std::vector<int> degrees;
    std::vector<Rat> p(P.c);
    p.resize(T + 1, Rat(0));
    for (int k = 1; k <= T; ++k) {
        while (p[k] != 0) {
            if (p[k].get_den() != 1 || p[k] > 0)
                throw std::domain_error("molien_degrees: series is not a degree product");
            degrees.push_back(k);
            // divide by (1 - t^k): q[j] = p[j] + q[j-k]
            std::vector<Rat> q(T + 1, Rat(0));
            for (int j = 0; j <= T; ++j) q[j] = p[j] + (j >= k ? q[j - k] : Rat(0));
            if (q[0] != 1) throw std::domain_error("molien_degrees: bad division");
            p = std::move(q);
        }
    }
    return degrees;
}

// ---- Reynolds operator --------------------------------------------------------

const std::unordered_map<std::string, uint64_t>& ReynoldsOperator::tuples(uint8_t mask) const {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::unordered_map<std::string, uint64_t> agg;
    agg.reserve(G_.order());
    std::string key;
    for (const auto& w : G_.elements()) {
        key.clear();
        for (int i = 0; i < kDim; ++i) {
            if (!((mask >> i) & 1)) continue;
            for (int j = 0; j < kDim; ++j) key.push_back((char)w.at(i, j));
        }
        ++agg[key];
    }
    return cache_.emplace(mask, std::move(agg)).first->second;
}

QMPoly ReynoldsOperator::apply_monomial(Mono m, Ord o) const {
    int deg = mono_deg(m);
    ensure_degree_tables(deg);
    uint8_t mask = 0;
    std::vector<int> vars, exps;
    for (int v = 0; v < kDim; ++v)
        if (mono_exp(m, v)) {
            mask |= (uint8_t)(1 << v);
            vars.push_back(v);
            exps.push_back(mono_exp(m, v));
        }
    const auto& agg = tuples(mask);
    const DegTable& T = degree_tables()[deg];
    std::vector<I128> acc(T.monos.size(), 0);
    for (const auto& [key, count] : agg) {
        std::vector<std::array<int8_t, kDim>> forms(vars.size());
        for (size_t f = 0; f < vars.size(); ++f)
            for (int j = 0; j < kDim; ++j) forms[f][j] = (int8_t)key[f * kDim + j];
        auto dense = expand_form_powers(forms, exps);
        for (size_t i = 0; i < dense.size(); ++i)
            if (dense[i]) acc[i] += (I128)dense[i] * (I128)count;
    }
    QMPoly r(o);
    Rat n((unsigned long)G_.order());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == 0) continue;
        r.m.push_back(T.monos[i]);
        r.c.push_back(Rat(int_from_i128(acc[i])) / n);
    }
    r.sort_terms();
    return r;
}

QMPoly ReynoldsOperator::apply(const QMPoly& p) const {
    QMPoly acc(p.ord);
    for (size_t i = 0; i < p.m.size(); ++i) acc = acc + apply_monomial(p.m[i], p.ord) * p.c[i];
    return acc;
}

// ---- group action on polynomials ----------------------------------------------

QMPoly group_action(const QMPoly& f, const WMat& w) {
    Ord o = f.ord;
    std::vector<QMPoly> images(kDim, QMPoly(o));
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j)
            if (w.at(i, j)) {
                images[i].m.push_back(mono_var(j));
                images[i].c.push_back(Rat((int)w.at(i, j)));
            }
        images[i].sort_terms();
    }
    return compose_linear<Rat, Rat>(f, images, o, [](const Rat& q) { return q; });
}

bool is_invariant(const QMPoly& f, const WMat& w) { return group_action(f, w) == f; }

// ---- fundamental invariants ----------------------------------------------------

const QMPoly& InvariantSet::of_degree(int d) const {
    switch (d) {
        case 2: return f2;
        case 5: return f5;
        case 6: return f6;
        case 8: return f8;
        case 9: return f9;
        case 12: return f12;
    }
    throw std::domain_error("InvariantSet: no invariant of that degree");
}

namespace {

// monomials of degree d in lex-descending order on exponent vectors
void lex_monomials_rec(int d, int var, std::vector<int>& exps, std::vector<Mono>& out) {
    if (var == kDim - 1) {
        exps[var] = d;
        out.push_back(mono_make(exps));
        exps[var] = 0;
        return;
    }
    for (int e = d; e >= 0; --e) {
        exps[var] = e;
        lex_monomials_rec(d - e, var + 1, exps, out);
    }
    exps[var] = 0;
}

std::vector<Mono> lex_monomials(int d) {
    std::vector<int> exps(kDim, 0);
    std::vector<Mono> out;
    lex_monomials_rec(d, 0, exps, out);
    return out;
}

// rank of the Jacobian of the given polynomials at a rational test point
int jacobian_rank_at(const std::vector<const QMPoly*>& polys, const std::vector<Rat>& pt) {
    Mat<Rat> m;
    for (const QMPoly* p : polys) {
        std::vector<Rat> row;
        for (int v = 0; v < kDim; ++v)
            row.push_back(p->derivative(v).eval<Rat>(pt, [](const Rat& q) { return q; }));
        m.push_back(std::move(row));
    }
    return mat_rank(m);
}

}  // namespace

const InvariantSet& fundamental_invariants() {
    static InvariantSet inv = [] {
        const auto& W = weyl_e6();
        ReynoldsOperator R(W);
        std::vector<std::vector<Rat>> test_points = {
            {Rat(1), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)},
            {Rat(1), Rat(-1), Rat(2), Rat(-3), Rat(5), Rat(-7)},
            {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13)}};
        InvariantSet s;
        s.provenance = "deterministic-reynolds";
        std::vector<const QMPoly*> chosen;
        for (int d : {2, 5, 6, 8, 9, 12}) {
            QMPoly* slot = nullptr;
            switch (d) {
                case 2: slot = &s.f2; break;
                case 5: slot = &s.f5; break;
                case 6: slot = &s.f6; break;
                case 8: slot = &s.f8; break;
                case 9: slot = &s.f9; break;
                case 12: slot = &s.f12; break;
            }
            bool found = false;
            for (Mono m : lex_monomials(d)) {
                QMPoly r = R.apply_monomial(m, drl(kDim));
                if (r.is_zero()) continue;
                qm_primitivize(r);
                *slot = r;
                // the candidate must be independent from the lower-degree choices
                auto cand = chosen;
                cand.push_back(slot);
                bool indep = false;
                for (const auto& pt : test_points)
                    if (jacobian_rank_at(cand, pt) == (int)cand.size()) {
                        indep = true;
                        break;
                    }
                if (!indep) continue;
                found = true;
                break;
            }
            if (!found) throw std::runtime_error("fundamental_invariants: scan failed");
            chosen.push_back(slot);
        }
        return s;
    }();
    return inv;
}

// ---- Jacobian product -----------------------------------------------------------

const JacobianProduct& jacobian_product() {
    static JacobianProduct J = [] {
        const auto& W = weyl_e6();
        std::vector<std::vector<Int>> roots;
        for (const auto& w : W.elements()) {
            // reflections: order 2 with trace 4 (eigenvalues {-1, 1^5})
            int tr = 0;
            for (int i = 0; i < kDim; ++i) tr += w.at(i, i);
            if (tr != 4) continue;
            if (!(w * w == WMat::identity()) || w == WMat::identity()) continue;
            // (-1)-eigenvector
            auto basis = rational_eigenspace_basis(w, -1);
            if (basis.size() != 1) continue;
            std::vector<Int> r;
            for (const auto& q : basis[0]) r.push_back(Int(q));
            // sign normalization: first nonzero entry positive
            for (const auto& x : r) {
                if (x == 0) continue;
                if (x < 0)
                    for (auto& y : r) y = -y;
                break;
            }
            roots.push_back(std::move(r));
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        if (roots.size() != 36) throw std::runtime_error("jacobian_product: expected 36 roots");
        // forms alpha_H = 2*G*r, primitive
        auto G2 = e6_gram_matrix();
        for (auto& row : G2)
            for (auto& q : row) q *= 2;
        JacobianProduct out;
        out.forms.reserve(36);
        for (const auto& r : roots) {
            std::vector<Int> a(kDim, 0);
            for (int i = 0; i < kDim; ++i) {
                Rat v(0);
                for (int j = 0; j < kDim; ++j) v += G2[i][j] * Rat(r[j]);
                a[i] = Int(v);
            }
            Int g = 0;
            for (const auto& x : a) g = int_gcd(g, x);
            for (auto& x : a) x /= g;
            out.forms.push_back(std::move(a));
        }
        out.roots_ = roots;
        return out;
    }();
    return J;
}

int JacobianProduct::action_sign(const WMat& w) const {
    // w . Jac = sign * Jac, computed from the permutation action on root lines
    std::map<std::vector<Int>, size_t> index;
    for (size_t i = 0; i < roots_.size(); ++i) index.emplace(roots_[i], i);
    int sign = 1;
    std::vector<bool> seen(roots_.size(), false);
    for (const auto& r : roots_) {
        std::vector<Int> img(kDim, 0);
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) img[i] += Int((int)w.at(i, j)) * r[j];
        // normalize sign
        int s = 1;
        for (const auto& x : img) {
            if (x == 0) continue;
            if (x < 0) {
                s = -1;
                for (auto& y : img) y = -y;
            }
            break;
        }
        auto it = index.find(img);
        if (it == index.end()) throw std::runtime_error("action_sign: roots not permuted");
        if (seen[it->second]) throw std::runtime_error("action_sign: not a permutation");
        seen[it->second] = true;
        sign *= s;
    }
    return sign;
}

QMPoly JacobianProduct::expand_restricted(const Mat<Rat>& basis_cols) const {
    int k = (int)basis_cols.size();
    Ord o = drl(k);
    QMPoly acc = QMPoly::constant(o, Rat(1));
    for (const auto& f : forms) {
        QMPoly lin(o);
        for (int j = 0; j < k; ++j) {
            Rat v(0);
            for (int i = 0; i < kDim; ++i) v += Rat(f[i]) * basis_cols[j][i];
            if (v != 0) {
                lin.m.push_back(mono_var(j));
                lin.c.push_back(v);
            }
        }
        lin.sort_terms();
        acc = acc * lin;
    }
    return acc;
}

// ---- certified invariant dimensions ---------------------------------------------

int invariant_space_dim_certified(int degree) {
    ensure_degree_tables(degree);
    const auto& T = degree_tables()[degree];
    size_t N = T.monos.size();
    FpCtx F(2147483647ull);
    // upper bound: kernel of the stacked (action - id) for the 6 generators
    auto gens = e6_simple_reflections();
    std::vector<std::vector<uint64_t>> rows;
    Ord o = drl(kDim);
    for (const auto& s : gens) {
        // columns indexed by monomials; the image of each monomial is expanded
        std::vector<std::vector<std::pair<int, int64_t>>> cols(N);
        for (size_t i = 0; i < N; ++i) {
            std::vector<std::array<int8_t, kDim>> forms;
            std::vector<int> exps;
            for (int v = 0; v < kDim; ++v) {
                int e = mono_exp(T.monos[i], v);
                if (!e) continue;
                std::array<int8_t, kDim> f{};
                for (int j = 0; j < kDim; ++j) f[j] = s.at(v, j);
                forms.push_back(f);
                exps.push_back(e);
            }
            auto dense = expand_form_powers(forms, exps);
            for (size_t r = 0; r < dense.size(); ++r)
                if (dense[r]) cols[i].push_back({(int)r, dense[r]});
        }
        // rows of (action - id): row r, col i
        std::vector<std::vector<uint64_t>> mat(N, std::vector<uint64_t>(N, 0));
        for (size_t i = 0; i < N; ++i) {
            for (auto& [r, v] : cols[i]) {
                int64_t m = v % (int64_t)F.p;
                if (m < 0) m += F.p;
                mat[r][i] = F.add(mat[r][i], (uint64_t)m);
            }
            mat[i][i] = F.sub(mat[i][i], 1);
        }
        for (auto& r : mat) rows.push_back(std::move(r));
    }
    // rank of the stacked matrix mod p
    size_t rank = 0;
    for (size_t c = 0; c < N && rank < rows.size(); ++c) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        uint64_t inv = F.inv(rows[rank][c]);
        for (size_t j = c; j < N; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            uint64_t f = rows[i][c];
            for (size_t j = c; j < N; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    int upper = (int)(N - rank);

    // lower bound: products of the fundamental invariants of this total degree
    const auto& inv = fundamental_invariants();
    std::vector<int> degs{2, 5, 6, 8, 9, 12};
    std::vector<QMPoly> products;
    std::function<void(size_t, int, QMPoly)> rec = [&](size_t i, int rem, QMPoly cur) {
        if (rem == 0) {
            products.push_back(cur);
            return;
        }
        if (i == degs.size()) return;
        rec(i + 1, rem, cur);
        if (degs[i] <= rem) rec(i, rem - degs[i], cur * inv.of_degree(degs[i]));
    };
    rec(0, degree, QMPoly::constant(o, Rat(1)));
    // rank of their coefficient vectors mod p
    std::vector<std::vector<uint64_t>> pm;
    for (const auto& p : products) {
        std::vector<uint64_t> row(N, 0);
        for (size_t i = 0; i < p.m.size(); ++i) row[T.index.at(p.m[i])] = F.from_rat(p.c[i]);
        pm.push_back(std::move(row));
    }
    int lower = 0;
    {
        size_t rk = 0;
        for (size_t c = 0; c < N && rk < pm.size(); ++c) {
            size_t sel = rk;
            while (sel < pm.size() && pm[sel][c] == 0) ++sel;
            if (sel == pm.size()) continue;
            std::swap(pm[sel], pm[rk]);
            uint64_t iv = F.inv(pm[rk][c]);
            for (size_t j = c; j < N; ++j) pm[rk][j] = F.mul(pm[rk][j], iv);
            for (size_t i = 0; i < pm.size(); ++i) {
                if (i == rk || pm[i][c] == 0) continue;
                uint64_t f = pm[i][c];
                for (size_t j = c; j < N; ++j) pm[i][j] = F.sub(pm[i][j], F.mul(f, pm[rk][j]));
            }
            ++rk;
        }
        lower = (int)rk;
    }
    if (lower != upper)
        throw std::runtime_error("invariant_space_dim_certified: bounds disagree");
    return upper;
}

}  // namespace weylk3
