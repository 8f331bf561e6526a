#include "weylk3/lattice.hpp"

#include <algorithm>

namespace weylk3 {

const IncidenceGraph& curve_incidence_graph() {
    static IncidenceGraph g = [] {
        IncidenceGraph gr;
        gr.labels = {"D5_4",  "D5_3",  "D5_2",  "D5_1",   "C3t",    "D12_3",
                     "D12_2", "D12_1", "C5p",   "D9_1",   "D9_2",   "C4t",
                     "sD9_2", "sD9_1", "C5m",   "sD12_1", "sD12_2", "sD12_3"};
        // adjacency of the big connected configuration
        const int adj[18][3] = {{2, 0, 0},   {1, 3, 12},  {2, 4, 0},  {3, 5, 0},  {4, 6, 18},
                                {5, 7, 0},   {6, 8, 0},   {7, 9, 0},  {8, 10, 15}, {9, 11, 0},
                                {10, 12, 0}, {2, 11, 13}, {12, 14, 0}, {13, 15, 0}, {9, 14, 16},
                                {15, 17, 0}, {16, 18, 0}, {5, 17, 0}};
        for (int i = 1; i <= 18; ++i)
            for (int j : adj[i - 1])
                if (j > i) gr.edges.push_back({i, j});
        return gr;
    }();
    return g;
}

std::vector<std::set<int>> IncidenceGraph::adjacency() const {
    std::vector<std::set<int>> adj(labels.size() + 1);
    for (auto [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return adj;
}

Mat<Int> curve_gram(const IncidenceGraph& g) {
    size_t n = g.labels.size();
    Mat<Int> m(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = -2;
    for (auto [a, b] : g.edges) {
        m[a - 1][b - 1] = 1;
        m[b - 1][a - 1] = 1;
    }
    return m;
}

Int matrix_minor(const Mat<Int>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat<Int> sub;
    for (int r : rows) {
        std::vector<Int> row;
        for (int c : cols) {
            if (r < 1 || r > (int)m.size() || c < 1 || c > (int)m.size())
                throw std::domain_error("matrix_minor: index out of range");
            row.push_back(m[r - 1][c - 1]);
        }
        sub.push_back(std::move(row));
    }
    return bareiss_det(std::move(sub));
}

Int diagonal_minor_gcd(const Mat<Int>& m, int size) {
    int n = (int)m.size();
    Int g = 0;
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            g = int_gcd(g, matrix_minor(m, idx, idx));
            return;
        }
        for (int i = start; i <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(1, 0);
    return g;
}

Mat<Int> picard_gram() {
    // A1 + A1 + A2 + (the 16-node block: graph nodes {2,4,5,...,18})
    const auto& g = curve_incidence_graph();
    Mat<Int> curves = curve_gram(g);
    std::vector<int> nodes;
    for (int i = 1; i <= 18; ++i)
        if (i != 1 && i != 3) nodes.push_back(i);
    int n = 4 + (int)nodes.size();
    Mat<Int> m(n, std::vector<Int>(n, 0));
    m[0][0] = -2;  // D1
    m[1][1] = -2;  // D1'
    m[2][2] = -2;  // D2^1
    m[3][3] = -2;  // D2^2
    m[2][3] = m[3][2] = 1;
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j) m[4 + i][4 + j] = curves[nodes[i] - 1][nodes[j] - 1];
    return m;
}

DiscriminantGroup discriminant_form(const Mat<Int>& gram, int sign) {
    size_t n = gram.size();
    SmithResult snf = smith_normal_form(gram);
    if (snf.rank != (int)n) throw std::domain_error("discriminant_form: degenerate lattice");
    // generators of L*/L: pi_i = M^{-1} U^{-1} e_i, of order d_i
    // compute M^{-1} over Q
    Mat<Rat> mi(n, std::vector<Rat>(n, Rat(0)));
    {
        Mat<Rat> aug(n, std::vector<Rat>(2 * n, Rat(0)));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) aug[i][j] = Rat(gram[i][j]);
            aug[i][n + i] = 1;
        }
        rref(aug);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) mi[i][j] = aug[i][n + j];
    }
    // U^{-1}: solve U X = I
    Mat<Rat> ui(n, std::vector<Rat>(n, Rat(0)));
    {
        Mat<Rat> aug(n, std::vector<Rat>(2 * n, Rat(0)));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) aug[i][j] = Rat(snf.U[i][j]);
            aug[i][n + i] = 1;
        }
        rref(aug);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) ui[i][j] = aug[i][n + j];
    }
    DiscriminantGroup D;
    std::vector<size_t> nontrivial;
    for (size_t i = 0; i < n; ++i)
        if (snf.d[i] != 1) {
            D.invariant_factors.push_back(snf.d[i]);
            nontrivial.push_back(i);
        }
    for (size_t idx : nontrivial) {
        std::vector<Rat> col(n, Rat(0));
        for (size_t r = 0; r < n; ++r) col[r] = ui[r][idx];
        D.gens.push_back(mat_apply(mi, col));
    }
    // enumerate the group and collect 114 * sign * q mod 228
    std::vector<long> counters(D.gens.size(), 0);
    auto q_of = [&](const std::vector<Rat>& x) {
        Rat s(0);
        for (size_t i = 0; i < n; ++i) {
            Rat mx(0);
            for (size_t j = 0; j < n; ++j)
                if (gram[i][j] != 0) mx += Rat(gram[i][j]) * x[j];
            s += x[i] * mx;
        }
        return s;
    };
    for (;;) {
        std::vector<Rat> x(n, Rat(0));
        for (size_t g2 = 0; g2 < D.gens.size(); ++g2)
            for (size_t i = 0; i < n; ++i) x[i] += Rat(counters[g2]) * D.gens[g2][i];
        Rat v = Rat(114 * sign) * q_of(x);
        if (v.get_den() != 1) throw std::domain_error("discriminant_form: 114*q not integral");
        Int r = v.get_num() % 228;
        if (r < 0) r += 228;
        D.value_set_scaled.insert((int)r.get_si());
        // increment mixed-radix counters
        size_t pos = 0;
        for (; pos < counters.size(); ++pos) {
            counters[pos]++;
            if (counters[pos] < D.invariant_factors[pos].get_si()) break;
            counters[pos] = 0;
        }
        if (pos == counters.size()) break;
        if (counters.empty()) break;
    }
    return D;
}

std::vector<BinaryForm> reduced_even_forms(const Int& D) {
    std::vector<BinaryForm> out;
    for (Int a = 1; 3 * a * a <= D; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = D + b * b;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;  // normalized representative
            out.push_back(BinaryForm{a, b, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const BinaryForm& x, const BinaryForm& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    });
    return out;
}

BinaryForm gauss_reduce(BinaryForm f) {
    for (;;) {
        if (f.c < f.a) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.b > f.a) {  // translate by -1: (a, b-2a, a-b+c)
            f.c += f.a - f.b;
            f.b -= 2 * f.a;
            continue;
        }
        if (f.b <= -f.a) {  // translate by +1: (a, b+2a, a+b+c)
            f.c += f.a + f.b;
            f.b += 2 * f.a;
            continue;
        }
        if (f.a == f.c && f.b < 0) {
            f.b = -f.b;
            continue;
        }
        return f;
    }
}

int genus_match(const std::set<int>& picard_values, const std::vector<BinaryForm>& candidates,
                std::vector<bool>* match_flags) {
    int found = -1;
    if (match_flags) match_flags->assign(candidates.size(), false);
    for (size_t i = 0; i < candidates.size(); ++i) {
        DiscriminantGroup D = discriminant_form(candidates[i].gram(), +1);
        bool eq = D.value_set_scaled == picard_values;
        if (match_flags) (*match_flags)[i] = eq;
        if (eq) {
            if (found >= 0) throw std::domain_error("genus_match: multiple matches");
            found = (int)i;
        }
    }
    if (found < 0) throw std::domain_error("genus_match: no match");
    return found;
}

int fiber_euler_number(const std::string& t) {
    if (t == "E7") return 9;
    if (t == "E6") return 8;
    if (t == "I3") return 3;
    if (t == "I2") return 2;
    if (t == "smooth") return 0;
    throw std::domain_error("fiber_euler_number: unknown Kodaira type " + t);
}

int fiber_euler_sum(const std::vector<std::string>& types) {
    int s = 0;
    for (const auto& t : types) s += fiber_euler_number(t);
    return s;
}

int mordell_weil_rank(int picard_rank, const std::vector<int>& fiber_component_counts) {
    int s = 0;
    for (int m : fiber_component_counts) {
        if (m < 1) throw std::domain_error("mordell_weil_rank: bad component count");
        s += m - 1;
    }
    return picard_rank - 2 - s;
}

}  // namespace weylk3
