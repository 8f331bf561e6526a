#include "weylk3/chartable.hpp"

#include <numeric>

namespace weylk3 {

namespace {

using FpVecV = std::vector<uint64_t>;

// characteristic polynomial mod p (Faddeev-LeVerrier)
FpVecV fp_charpoly(const std::vector<FpVecV>& M, const FpCtx& F) {
    size_t n = M.size();
    FpVecV c(n + 1, 0);
    c[n] = 1;
    std::vector<FpVecV> A = M;
    for (size_t k = 1; k <= n; ++k) {
        uint64_t tr = 0;
        for (size_t i = 0; i < n; ++i) tr = F.add(tr, A[i][i]);
        c[n - k] = F.mul(F.sub(0, tr), F.inv(k % F.p));
        if (k == n) break;
        for (size_t i = 0; i < n; ++i) A[i][i] = F.add(A[i][i], c[n - k]);
        // A = M * A
        std::vector<FpVecV> B(n, FpVecV(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (!M[i][l]) continue;
                for (size_t j = 0; j < n; ++j) B[i][j] = F.add(B[i][j], F.mul(M[i][l], A[l][j]));
            }
        A = std::move(B);
    }
    return c;
}

// kernel basis mod p
std::vector<FpVecV> fp_kernel(std::vector<FpVecV> m, const FpCtx& F) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<int> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && !m[sel][c]) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        uint64_t inv = F.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            uint64_t f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        pivots.push_back((int)c);
        ++r;
    }
    std::vector<bool> isp(cols, false);
    for (int c : pivots) isp[c] = true;
    std::vector<FpVecV> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (isp[fc]) continue;
        FpVecV v(cols, 0);
        v[fc] = 1;
        for (size_t rr = 0; rr < pivots.size(); ++rr) v[pivots[rr]] = F.sub(0, m[rr][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Rat CharacterTable::inner(const ClassFunction& f, int row) const {
    const auto& classes = group->conjugacy_classes();
    Rat s(0);
    for (size_t j = 0; j < classes.size(); ++j)
        s += Rat((unsigned long)classes[j].members.size()) * Rat(f.values[j]) *
             Rat(rows[row].values[inverse_class[j]]);
    return s / Rat((unsigned long)group->order());
}

std::vector<Int> CharacterTable::decompose(const ClassFunction& f) const {
    std::vector<Int> mult;
    for (int r = 0; r < num_classes(); ++r) {
        Rat m = inner(f, r);
        if (m.get_den() != 1)
            throw std::domain_error("decompose: non-integral multiplicity (not a virtual character)");
        mult.push_back(m.get_num());
    }
    return mult;
}

int CharacterTable::row_of_db(const Int& d, int b) const {
    for (size_t r = 0; r < db.size(); ++r)
        if (db[r].first == d && db[r].second == b) return (int)r;
    throw std::domain_error("row_of_db: no such label");
}

ClassFunction CharacterTable::trivial_character() const {
    return ClassFunction{std::vector<Int>(num_classes(), 1)};
}

ClassFunction CharacterTable::det_character() const {
    ClassFunction f;
    for (const auto& cl : group->conjugacy_classes()) f.values.push_back(cl.det);
    return f;
}

ClassFunction CharacterTable::natural_character() const {
    ClassFunction f;
    for (const auto& cl : group->conjugacy_classes()) {
        int tr = 0;
        for (int i = 0; i < kDim; ++i) tr += group->elem(cl.rep).at(i, i);
        f.values.push_back(tr);
    }
    return f;
}

ClassFunction CharacterTable::regular_character() const {
    ClassFunction f;
    f.values.assign(num_classes(), 0);
    f.values[0] = Int((unsigned long)group->order());
    return f;
}

bool CharacterTable::check_orthogonality() const {
    const auto& classes = group->conjugacy_classes();
    for (int a = 0; a < num_classes(); ++a)
        for (int b = 0; b < num_classes(); ++b) {
            Int s = 0;
            for (size_t j = 0; j < classes.size(); ++j)
                s += Int((unsigned long)classes[j].members.size()) * rows[a].values[j] *
                     rows[b].values[inverse_class[j]];
            if (a == b && s != Int((unsigned long)group->order())) return false;
            if (a != b && s != 0) return false;
        }
    return true;
}

CharacterTable character_table(const FiniteMatrixGroup& G) {
    CharacterTable T;
    T.group = &G;
    const auto& classes = G.conjugacy_classes();
    size_t d = classes.size();

    // inverse-class map
    T.inverse_class.resize(d);
    for (size_t i = 0; i < d; ++i)
        T.inverse_class[i] = (int)G.class_of(G.inverse_index(classes[i].rep));

    // class-algebra structure constants: B[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}
    std::vector<std::vector<std::vector<uint64_t>>> B(
        d, std::vector<std::vector<uint64_t>>(d, std::vector<uint64_t>(d, 0)));
    for (size_t k = 0; k < d; ++k) {
        uint32_t zk = classes[k].rep;
        for (size_t i = 0; i < d; ++i)
            for (uint32_t x : classes[i].members) {
                uint32_t y = G.product_index(G.inverse_index(x), zk);
                B[i][G.class_of(y)][k] += 1;
            }
    }

    // Dixon prime: p = 1 (mod exponent), p > 2 sqrt(|G|)
    int e = G.exponent();
    uint64_t p = e + 1;
    double bound = 2.0 * std::sqrt((double)G.order());
    while (p <= (uint64_t)bound || !is_prime_u64(p) || G.order() % p == 0) p += e;
    T.dixon_prime = p;
    FpCtx F(p);

    // split the common eigenspaces of the structure-constant matrices
    std::vector<std::vector<FpVecV>> spaces;  // each: list of basis vectors
    {
        std::vector<FpVecV> full;
        for (size_t i = 0; i < d; ++i) {
            FpVecV v(d, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (size_t i = 1; i < d; ++i) {
        // matrix of B_i acting on coordinates: (B_i v)_j = sum_k B[i][j][k] v_k
        std::vector<FpVecV> Bi(d, FpVecV(d, 0));
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) Bi[j][k] = B[i][j][k] % p;
        std::vector<std::vector<FpVecV>> next;
        for (auto& S : spaces) {
            if (S.size() == 1) {
                next.push_back(std::move(S));
                continue;
            }
            size_t m = S.size();
            // images of the basis vectors
            std::vector<FpVecV> img;
            for (auto& v : S) {
                FpVecV w(d, 0);
                for (size_t r = 0; r < d; ++r)
                    for (size_t c = 0; c < d; ++c)
                        if (Bi[r][c] && v[c]) w[r] = F.add(w[r], F.mul(Bi[r][c], v[c]));
                img.push_back(std::move(w));
            }
            // restriction matrix R: img[j] = sum_r R[r][j] S[r]
            // solve via elimination on the transposed system
            std::vector<FpVecV> aug(d, FpVecV(m + m, 0));
            for (size_t r = 0; r < d; ++r) {
                for (size_t c = 0; c < m; ++c) aug[r][c] = S[c][r];
                for (size_t c = 0; c < m; ++c) aug[r][m + c] = img[c][r];
            }
            // row-reduce [S | img]
            size_t rank = 0;
            for (size_t c = 0; c < m && rank < d; ++c) {
                size_t sel = rank;
                while (sel < d && !aug[sel][c]) ++sel;
                if (sel == d) continue;
                std::swap(aug[sel], aug[rank]);
                uint64_t inv = F.inv(aug[rank][c]);
                for (size_t j = c; j < m + m; ++j) aug[rank][j] = F.mul(aug[rank][j], inv);
                for (size_t r2 = 0; r2 < d; ++r2) {
                    if (r2 == rank || !aug[r2][c]) continue;
                    uint64_t f = aug[r2][c];
                    for (size_t j = c; j < m + m; ++j)
                        aug[r2][j] = F.sub(aug[r2][j], F.mul(f, aug[rank][j]));
                }
                ++rank;
            }
            std::vector<FpVecV> R(m, FpVecV(m, 0));  // R[row][col]: img_col in basis
            for (size_t rr = 0; rr < m; ++rr)
                for (size_t cc = 0; cc < m; ++cc) R[rr][cc] = aug[rr][m + cc];
            // eigenvalues of R via its characteristic polynomial, root scan
            FpVecV ch = fp_charpoly(R, F);
            std::vector<uint64_t> roots;
            for (uint64_t x = 0; x < p; ++x) {
                uint64_t val = 0;
                for (size_t k2 = ch.size(); k2-- > 0;) val = F.add(F.mul(val, x), ch[k2]);
                if (!val) roots.push_back(x);
            }
            for (uint64_t lam : roots) {
                std::vector<FpVecV> Rl = R;
                for (size_t r2 = 0; r2 < m; ++r2) Rl[r2][r2] = F.sub(Rl[r2][r2], lam);
                auto ker = fp_kernel(Rl, F);
                std::vector<FpVecV> sub;
                for (auto& kv : ker) {
                    FpVecV w(d, 0);
                    for (size_t r2 = 0; r2 < m; ++r2)
                        for (size_t j = 0; j < d; ++j)
                            if (kv[r2] && S[r2][j]) w[j] = F.add(w[j], F.mul(kv[r2], S[r2][j]));
                    sub.push_back(std::move(w));
                }
                if (!sub.empty()) next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
        bool all_one = true;
        for (auto& S : spaces) all_one = all_one && S.size() == 1;
        if (all_one) break;
    }
    if (spaces.size() != d) throw std::runtime_error("character_table: eigenspace split failed");

    // class-algebra characters omega, normalized at the identity class
    std::vector<FpVecV> omega;
    for (auto& S : spaces) {
        FpVecV v = S[0];
        if (!v[0]) throw std::runtime_error("character_table: eigenvector vanishes at identity");
        uint64_t inv = F.inv(v[0]);
        for (auto& x : v) x = F.mul(x, inv);
        omega.push_back(std::move(v));
    }

    // degrees and character values mod p
    std::vector<uint64_t> class_size_mod(d), class_size_inv(d);
    for (size_t j = 0; j < d; ++j) {
        class_size_mod[j] = classes[j].members.size() % p;
        class_size_inv[j] = F.inv(class_size_mod[j]);
    }
    uint64_t order_mod = G.order() % p;
    std::vector<FpVecV> chi_mod;
    std::vector<uint64_t> degrees_mod;
    for (auto& w : omega) {
        uint64_t t = 0;
        for (size_t j = 0; j < d; ++j)
            t = F.add(t, F.mul(F.mul(w[j], w[T.inverse_class[j]]), class_size_inv[j]));
        uint64_t deg2 = F.mul(order_mod, F.inv(t));
        uint64_t deg = 0;
        for (uint64_t s = 1; s <= (p - 1) / 2; ++s)
            if (F.mul(s, s) == deg2) {
                deg = s;
                break;
            }
        if (!deg) throw std::runtime_error("character_table: degree not a square mod p");
        degrees_mod.push_back(deg);
        FpVecV chi(d);
        for (size_t j = 0; j < d; ++j) chi[j] = F.mul(F.mul(w[j], deg), class_size_inv[j]);
        chi_mod.push_back(std::move(chi));
    }

    // power maps: class of rep^l
    std::vector<std::vector<int>> power_class(d);
    for (size_t j = 0; j < d; ++j) {
        uint32_t cur = 0;  // identity index
        power_class[j].push_back((int)G.class_of(cur));
        for (int l = 1; l < classes[j].order; ++l) {
            cur = G.product_index(cur, classes[j].rep);
            power_class[j].push_back((int)G.class_of(cur));
        }
    }

    // integer lift by eigenvalue multiplicities: theta = fixed element of
    // order e in F_p; m_k = (1/e) sum_l chi(g^l) theta^(-kl)
    uint64_t gen = 2;
    for (;; ++gen) {
        bool ok = true;
        // gen is a generator iff gen^((p-1)/q) != 1 for all prime divisors q
        uint64_t n = p - 1;
        std::vector<uint64_t> qs;
        uint64_t nn = n;
        for (uint64_t q = 2; q * q <= nn; ++q)
            if (nn % q == 0) {
                qs.push_back(q);
                while (nn % q == 0) nn /= q;
            }
        if (nn > 1) qs.push_back(nn);
        for (uint64_t q : qs)
            if (F.pow(gen, n / q) == 1) ok = false;
        if (ok) break;
    }
    uint64_t theta = F.pow(gen, (p - 1) / e);
    uint64_t e_inv = F.inv(e % p);
    auto divisors_e = divisors(e);

    for (size_t r = 0; r < d; ++r) {
        ClassFunction row;
        row.values.resize(d);
        for (size_t j = 0; j < d; ++j) {
            int o = classes[j].order;
            // multiplicities of the eigenvalues zeta_e^k
            std::vector<Int> mult(e, 0);
            Int total = 0;
            for (int k = 0; k < e; ++k) {
                uint64_t s = 0;
                uint64_t th = F.pow(theta, (uint64_t)((((int64_t)-k % e) + e) % e));
                uint64_t tpow = 1;
                for (int l = 0; l < e; ++l) {
                    s = F.add(s, F.mul(chi_mod[r][power_class[j][l % o]], tpow));
                    tpow = F.mul(tpow, th);
                }
                uint64_t mk = F.mul(s, e_inv);
                if (mk > degrees_mod[r] && mk > 300)
                    throw std::runtime_error("character_table: eigenvalue multiplicity too large");
                mult[k] = Int((unsigned long)mk);
                total += mult[k];
            }
            // rationality: multiplicity constant on exponents of equal gcd
            Int value = 0;
            for (int dd : divisors_e) {
                // exponents with gcd(k, e) = e/dd give the primitive dd-th roots
                Int m0 = -1;
                for (int k = 0; k < e; ++k) {
                    int g = (int)std::gcd((long)(k == 0 ? e : k), (long)e);
                    if (g != e / dd) continue;
                    if (m0 < 0)
                        m0 = mult[k];
                    else if (mult[k] != m0)
                        throw std::runtime_error("character_table: non-rational value");
                }
                if (m0 < 0) m0 = 0;
                value += m0 * moebius_mu(dd);
            }
            row.values[j] = value;
        }
        T.rows.push_back(std::move(row));
    }

    // exact verification
    for (auto& row : T.rows)
        if (row.values[0] <= 0) throw std::runtime_error("character_table: nonpositive degree");
    Int sum_sq = 0;
    for (auto& row : T.rows) sum_sq += row.values[0] * row.values[0];
    if (sum_sq != Int((unsigned long)G.order()))
        throw std::runtime_error("character_table: Burnside identity fails");
    if (!T.check_orthogonality()) throw std::runtime_error("character_table: orthogonality fails");
    return T;
}

QPoly fake_degree(const CharacterTable& T, int row, const std::vector<int>& degrees) {
    const auto& G = *T.group;
    const auto& classes = G.conjugacy_classes();
    int trunc = 0;
    for (int d : degrees) trunc += d;  // 42 for W(E6)
    trunc += 1;
    std::vector<Rat> acc(trunc, Rat(0));
    for (size_t j = 0; j < classes.size(); ++j) {
        QPoly ch = wmat_charpoly(G.elem(classes[j].rep));
        QPoly rev;
        rev.c.assign(ch.c.rbegin(), ch.c.rend());
        rev.trim();
        QPoly inv = rev.series_inverse(trunc);
        Rat f = Rat((unsigned long)classes[j].members.size()) *
                Rat(T.rows[row].values[T.inverse_class[j]]);
        for (int i = 0; i < trunc; ++i) acc[i] += f * inv.coeff(i);
    }
    QPoly series = QPoly::from(acc);
    QPoly poincare(Rat(1));
    for (int d : degrees) {
        QPoly f;
        f.c.assign(d + 1, Rat(0));
        f.c[0] = 1;
        f.c[d] = -1;
        poincare = poincare * f;
    }
    QPoly prod = poincare * series;
    // truncate and verify polynomiality
    QPoly out;
    Rat n((unsigned long)G.order());
    for (int i = 0; i < trunc; ++i) {
        Rat c = prod.coeff(i) / n;
        out.c.push_back(c);
    }
    out.trim();
    for (const auto& c : out.c) {
        if (c.get_den() != 1 || c < 0)
            throw std::runtime_error("fake_degree: non-polynomial result (bad character table)");
    }
    if (out.degree() > trunc - 1 - 6)
        throw std::runtime_error("fake_degree: degree exceeds the coinvariant socle");
    // F(1) = chi(1)
    Rat at1(0);
    for (const auto& c : out.c) at1 += c;
    if (at1 != Rat(T.rows[row].values[0])) throw std::runtime_error("fake_degree: F(1) != chi(1)");
    return out;
}

void finalize_with_fake_degrees(CharacterTable& T, const std::vector<int>& degrees) {
    T.fake_degrees.clear();
    for (int r = 0; r < T.num_classes(); ++r) T.fake_degrees.push_back(fake_degree(T, r, degrees));
    // sort rows by (degree, b)
    std::vector<int> b(T.num_classes());
    for (int r = 0; r < T.num_classes(); ++r) {
        int v = 0;
        while (T.fake_degrees[r].coeff(v) == 0) ++v;
        b[r] = v;
    }
    std::vector<int> perm(T.num_classes());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
        if (T.rows[x].values[0] != T.rows[y].values[0])
            return T.rows[x].values[0] < T.rows[y].values[0];
        return b[x] < b[y];
    });
    std::vector<ClassFunction> rows;
    std::vector<QPoly> fakes;
    std::vector<std::pair<Int, int>> db;
    for (int i : perm) {
        rows.push_back(std::move(T.rows[i]));
        fakes.push_back(std::move(T.fake_degrees[i]));
        db.push_back({rows.back().values[0], b[i]});
    }
    T.rows = std::move(rows);
    T.fake_degrees = std::move(fakes);
    T.db = std::move(db);
}

std::vector<int> codegrees_from_fake(const CharacterTable& T) {
    // natural character row
    ClassFunction nat = T.natural_character();
    int row = -1;
    for (int r = 0; r < T.num_classes(); ++r)
        if (T.rows[r].values == nat.values) row = r;
    if (row < 0) throw std::runtime_error("codegrees: natural character is not irreducible?");
    const QPoly& f = T.fake_degrees[row];
    std::vector<int> out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (f.coeff(i) != 1) throw std::runtime_error("codegrees: unexpected fake degree");
        out.push_back(i - 1);
    }
    return out;
}

const CharacterTable& e6_character_table() {
    static CharacterTable T = [] {
        CharacterTable t = character_table(weyl_e6());
        finalize_with_fake_degrees(t, {2, 5, 6, 8, 9, 12});
        return t;
    }();
    return T;
}

}  // namespace weylk3
