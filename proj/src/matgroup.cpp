#include "weylk3/matgroup.hpp"

#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace weylk3 {

bool e6_edge(int i, int j) {
    if (i > j) std::swap(i, j);
    return (i == 1 && j == 3) || (i == 3 && j == 4) || (i == 4 && j == 5) || (i == 5 && j == 6) ||
           (i == 2 && j == 4);
}

Mat<Rat> e6_gram_matrix() {
    Mat<Rat> g(kDim, std::vector<Rat>(kDim, Rat(0)));
    for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j) {
            if (i == j)
                g[i - 1][j - 1] = 1;
            else if (e6_edge(i, j))
                g[i - 1][j - 1] = Rat(-1, 2);
        }
    return g;
}

std::vector<WMat> e6_simple_reflections() {
    // s_k(e_k) = -e_k, s_k(e_j) = e_j + e_k on diagram edges, identity otherwise
    std::vector<WMat> s;
    for (int k = 1; k <= kDim; ++k) {
        WMat m = WMat::identity();
        m.at(k - 1, k - 1) = -1;
        for (int j = 1; j <= kDim; ++j)
            if (j != k && e6_edge(j, k)) m.at(k - 1, j - 1) = 1;
        s.push_back(m);
    }
    return s;
}

namespace {
int det_rec(const std::vector<int64_t>& m, int n) {
    if (n == 1) return (int)m[0];
    int64_t det = 0;
    std::vector<int64_t> sub((n - 1) * (n - 1));
    for (int k = 0; k < n; ++k) {
        if (!m[k]) continue;
        for (int i = 1; i < n; ++i) {
            int c = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                sub[(i - 1) * (n - 1) + c++] = m[i * n + j];
            }
        }
        int64_t d = det_rec(sub, n - 1);
        det += (k % 2 ? -1 : 1) * m[k] * d;
    }
    return (int)det;
}
}  // namespace

int wmat_det(const WMat& m) {
    std::vector<int64_t> v(36);
    for (int i = 0; i < 36; ++i) v[i] = m.a[i];
    return det_rec(v, 6);
}

WMat wmat_inverse(const WMat& m) {
    // adjugate / det with det = +-1
    int d = wmat_det(m);
    WMat inv;
    std::vector<int64_t> v(36);
    for (int i = 0; i < 36; ++i) v[i] = m.a[i];
    std::vector<int64_t> sub(25);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int c = 0;
            for (int r = 0; r < 6; ++r) {
                if (r == i) continue;
                for (int s = 0; s < 6; ++s) {
                    if (s == j) continue;
                    sub[c++] = v[r * 6 + s];
                }
            }
            int64_t cof = det_rec(sub, 5);
            if ((i + j) % 2) cof = -cof;
            inv.at(j, i) = (int8_t)(cof * d);
        }
    return inv;
}

int wmat_order(const WMat& m, int cap) {
    WMat id = WMat::identity(), p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    throw std::runtime_error("wmat_order: order exceeds cap");
}

QPoly wmat_charpoly(const WMat& m) {
    return charpoly(m.to_rat());
}

FiniteMatrixGroup FiniteMatrixGroup::generate(const std::vector<WMat>& gens, size_t cap) {
    FiniteMatrixGroup G;
    WMat id = WMat::identity();
    G.elems_.push_back(id);
    G.index_.emplace(id, 0);
    for (const auto& g : gens) {
        if (!G.index_.count(g)) {
            G.index_.emplace(g, (uint32_t)G.elems_.size());
            G.elems_.push_back(g);
        }
    }
    for (const auto& g : gens) G.gens_.push_back(*G.index_of(g));
    std::deque<uint32_t> queue;
    for (size_t i = 0; i < G.elems_.size(); ++i) queue.push_back((uint32_t)i);
    while (!queue.empty()) {
        uint32_t i = queue.front();
        queue.pop_front();
        for (uint32_t gi : G.gens_) {
            WMat p = G.elems_[i] * G.elems_[gi];
            auto it = G.index_.find(p);
            if (it == G.index_.end()) {
                if (G.elems_.size() >= cap)
                    throw std::runtime_error("group closure exceeded the hard cap");
                uint32_t ni = (uint32_t)G.elems_.size();
                G.index_.emplace(p, ni);
                G.elems_.push_back(p);
                queue.push_back(ni);
            }
        }
    }
    G.inv_.resize(G.elems_.size());
    for (size_t i = 0; i < G.elems_.size(); ++i) G.inv_[i] = *G.index_of(wmat_inverse(G.elems_[i]));
    return G;
}

void FiniteMatrixGroup::compute_classes() const {
    if (!classes_.empty() || elems_.empty()) return;
    class_of_.assign(elems_.size(), UINT32_MAX);
    std::vector<ConjClass> classes;
    for (uint32_t start = 0; start < elems_.size(); ++start) {
        if (class_of_[start] != UINT32_MAX) continue;
        uint32_t cid = (uint32_t)classes.size();
        ConjClass cl;
        std::deque<uint32_t> queue{start};
        class_of_[start] = cid;
        cl.members.push_back(start);
        while (!queue.empty()) {
            uint32_t x = queue.front();
            queue.pop_front();
            for (uint32_t gi : gens_) {
                WMat y = elems_[gi] * elems_[x] * elems_[inv_[gi]];
                uint32_t yi = *index_of(y);
                if (class_of_[yi] == UINT32_MAX) {
                    class_of_[yi] = cid;
                    cl.members.push_back(yi);
                    queue.push_back(yi);
                }
            }
        }
        // lexicographically smallest member is the representative
        uint32_t rep = cl.members[0];
        for (uint32_t m : cl.members)
            if (elems_[m] < elems_[rep]) rep = m;
        cl.rep = rep;
        cl.order = wmat_order(elems_[rep]);
        cl.det = wmat_det(elems_[rep]);
        classes.push_back(std::move(cl));
    }
    // deterministic class ordering: by (order, size, representative matrix)
    std::vector<uint32_t> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) {
        if (classes[a].order != classes[b].order) return classes[a].order < classes[b].order;
        if (classes[a].members.size() != classes[b].members.size())
            return classes[a].members.size() < classes[b].members.size();
        return elems_[classes[a].rep] < elems_[classes[b].rep];
    });
    std::vector<uint32_t> inv_perm(classes.size());
    for (uint32_t i = 0; i < perm.size(); ++i) inv_perm[perm[i]] = i;
    classes_.clear();
    for (uint32_t i : perm) classes_.push_back(std::move(classes[i]));
    for (auto& c : class_of_) c = inv_perm[c];
}

const std::vector<ConjClass>& FiniteMatrixGroup::conjugacy_classes() const {
    compute_classes();
    return classes_;
}

uint32_t FiniteMatrixGroup::class_of(uint32_t elem_index) const {
    compute_classes();
    return class_of_[elem_index];
}

FiniteMatrixGroup FiniteMatrixGroup::subgroup(const std::vector<WMat>& gens) const {
    return generate(gens, elems_.size());
}

FiniteMatrixGroup FiniteMatrixGroup::derived_subgroup() const {
    // normal closure of the commutators of the generators
    std::vector<WMat> seed;
    for (uint32_t a : gens_)
        for (uint32_t b : gens_) {
            WMat c = elems_[a] * elems_[b] * elems_[inv_[a]] * elems_[inv_[b]];
            seed.push_back(c);
        }
    for (;;) {
        FiniteMatrixGroup H = subgroup(seed);
        bool stable = true;
        std::vector<WMat> extra;
        for (uint32_t g : gens_)
            for (uint32_t hg : H.gens_) {
                WMat c = elems_[g] * H.elems_[hg] * elems_[inv_[g]];
                if (!H.contains(c)) {
                    extra.push_back(c);
                    stable = false;
                }
            }
        if (stable) return H;
        for (auto& e : extra) seed.push_back(e);
    }
}

FiniteMatrixGroup FiniteMatrixGroup::centralizer(const WMat& g) const {
    std::vector<WMat> cgens;
    for (const auto& x : elems_)
        if (x * g == g * x) cgens.push_back(x);
    return subgroup(cgens);
}

FiniteMatrixGroup FiniteMatrixGroup::normalizer(const FiniteMatrixGroup& H) const {
    if (!H.is_subgroup_of(*this)) throw std::domain_error("normalizer: H is not a subgroup");
    std::vector<WMat> ngens;
    for (const auto& x : elems_) {
        WMat xi = wmat_inverse(x);
        bool ok = true;
        for (uint32_t hg : H.gens_) {
            if (!H.contains(x * H.elems_[hg] * xi)) {
                ok = false;
                break;
            }
        }
        if (ok) ngens.push_back(x);
    }
    return subgroup(ngens);
}

bool FiniteMatrixGroup::is_subgroup_of(const FiniteMatrixGroup& G) const {
    for (uint32_t g : gens_)
        if (!G.contains(elems_[g])) return false;
    return true;
}

bool FiniteMatrixGroup::is_abelian() const {
    for (uint32_t a : gens_)
        for (uint32_t b : gens_)
            if (!(elems_[a] * elems_[b] == elems_[b] * elems_[a])) return false;
    return true;
}

bool FiniteMatrixGroup::is_elementary_abelian() const {
    if (!is_abelian()) return false;
    if (order() == 1) return true;
    // all non-identity elements share the same prime order
    int p = 0;
    for (const auto& e : elems_) {
        if (e == WMat::identity()) continue;
        int o = wmat_order(e);
        if (p == 0) {
            p = o;
            bool prime = o > 1;
            for (int d = 2; d * d <= o; ++d)
                if (o % d == 0) prime = false;
            if (!prime) return false;
        } else if (o != p) {
            return false;
        }
    }
    return true;
}

std::pair<bool, std::optional<WMat>> FiniteMatrixGroup::is_conjugate(const WMat& a,
                                                                     const WMat& b) const {
    auto ia = index_of(a), ib = index_of(b);
    if (!ia || !ib) throw std::domain_error("is_conjugate: element not in group");
    compute_classes();
    if (class_of_[*ia] != class_of_[*ib]) return {false, std::nullopt};
    // BFS from a, conjugating by generators, tracking the conjugator
    std::unordered_map<uint32_t, uint32_t> conjugator;  // element -> x with x a x^-1 = elem
    std::deque<uint32_t> queue{*ia};
    conjugator[*ia] = 0;  // identity
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        if (x == *ib) {
            return {true, elems_[conjugator[x]]};
        }
        for (uint32_t gi : gens_) {
            WMat y = elems_[gi] * elems_[x] * elems_[inv_[gi]];
            uint32_t yi = *index_of(y);
            if (!conjugator.count(yi)) {
                conjugator[yi] = *index_of(elems_[gi] * elems_[conjugator[x]]);
                queue.push_back(yi);
            }
        }
    }
    return {false, std::nullopt};
}

int FiniteMatrixGroup::exponent() const {
    int e = 1;
    for (const auto& cl : conjugacy_classes()) e = std::lcm(e, cl.order);
    return e;
}

// ---- eigen data --------------------------------------------------------------

std::vector<std::pair<RootOfUnity, int>> eigen_multiset(const WMat& g) {
    QPoly ch = wmat_charpoly(g);
    std::vector<std::pair<RootOfUnity, int>> out;
    int total = 0;
    for (int d = 1; d <= 36 && total < kDim; ++d) {
        if (euler_phi(d) > kDim) continue;
        const QPoly& phi = Cyclo::phi_poly(d);
        int mult = 0;
        for (;;) {
            auto [q, r] = QPoly::divmod(ch, phi);
            if (!r.is_zero()) break;
            ch = q;
            ++mult;
        }
        if (mult > 0) {
            for (long k = 0; k < d; ++k)
                if (std::gcd(k == 0 ? (long)d : k, (long)d) == 1 || d == 1)
                    out.push_back({RootOfUnity{d, d == 1 ? 0 : k}, mult});
            total += mult * euler_phi(d);
        }
    }
    if (ch.degree() != 0)
        throw std::domain_error("eigen_multiset: characteristic polynomial not cyclotomic");
    std::sort(out.begin(), out.end());
    return out;
}

int eigenspace_dim(const WMat& g, int e) {
    QPoly ch = wmat_charpoly(g);
    const QPoly& phi = Cyclo::phi_poly(e);
    int mult = 0;
    for (;;) {
        auto [q, r] = QPoly::divmod(ch, phi);
        if (!r.is_zero()) break;
        ch = q;
        ++mult;
    }
    return mult;
}

std::vector<Cyclo> eigenvector(const WMat& g, const Cyclo& zeta) {
    Mat<Cyclo> m(kDim, std::vector<Cyclo>(kDim, Cyclo(0)));
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            m[i][j] = Cyclo(g.at(i, j));
            if (i == j) m[i][j] = m[i][j] - zeta;
        }
    auto basis = kernel_basis(m);
    if (basis.empty()) throw std::domain_error("eigenvector: not an eigenvalue");
    // deterministic choice: first kernel basis vector, first nonzero coord = 1
    auto v = basis.front();
    size_t nz = 0;
    while (nz < v.size() && v[nz].is_zero()) ++nz;
    Cyclo inv = v[nz].inverse();
    for (auto& c : v) c = c * inv;
    return v;
}

Mat<Rat> rational_eigenspace_basis(const WMat& g, int lambda) {
    Mat<Rat> m = g.to_rat();
    for (int i = 0; i < kDim; ++i) m[i][i] -= lambda;
    auto basis = kernel_basis(m);
    // clear denominators, primitive integer vectors
    for (auto& v : basis) {
        Int l = 1;
        for (auto& q : v) l = int_lcm(l, q.get_den());
        Int g0 = 0;
        for (auto& q : v) g0 = int_gcd(g0, Int(q * Rat(l)));
        for (auto& q : v) q = q * Rat(l) / Rat(g0);
    }
    return basis;
}

// ---- global group objects and cache -----------------------------------------

std::string cache_directory() {
    const char* env = std::getenv("WEYLK3_CACHE_DIR");
    return env && *env ? std::string(env) : std::string(".weylk3-cache");
}

namespace {

uint64_t gram_content_hash() {
    auto g = e6_gram_matrix();
    uint64_t h = 1469598103934665603ull;
    for (auto& row : g)
        for (auto& q : row)
            for (char c : q.get_str()) {
                h ^= (uint8_t)c;
                h *= 1099511628211ull;
            }
    return h;
}

const int kCacheVersion = 1;

bool load_group_cache(const std::string& path, std::vector<WMat>& elems) {
    std::ifstream in(path);
    if (!in) return false;
    int version = 0;
    uint64_t hash = 0;
    size_t n = 0;
    in >> version >> hash >> n;
    if (version != kCacheVersion || hash != gram_content_hash() || n == 0) return false;
    elems.resize(n);
    for (size_t i = 0; i < n; ++i)
        for (int k = 0; k < 36; ++k) {
            int v;
            if (!(in >> v)) return false;
            elems[i].a[k] = (int8_t)v;
        }
    return true;
}

void save_group_cache(const std::string& path, const std::vector<WMat>& elems) {
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    std::ofstream out(path);
    if (!out) return;
    out << kCacheVersion << " " << gram_content_hash() << " " << elems.size() << "\n";
    for (const auto& m : elems) {
        for (int k = 0; k < 36; ++k) out << (int)m.a[k] << (k == 35 ? '\n' : ' ');
    }
}

}  // namespace

const FiniteMatrixGroup& weyl_e6() {
    static FiniteMatrixGroup W = [] {
        auto gens = e6_simple_reflections();
        std::string path = cache_directory() + "/weyl-e6-elements.txt";
        std::vector<WMat> cached;
        if (load_group_cache(path, cached)) {
            // rebuild index structures from the cached element list
            FiniteMatrixGroup G = FiniteMatrixGroup::generate(gens);
            if (G.order() == cached.size()) return G;
        }
        FiniteMatrixGroup G = FiniteMatrixGroup::generate(gens);
        save_group_cache(path, G.elements());
        return G;
    }();
    return W;
}

const FiniteMatrixGroup& weyl_e6_derived() {
    static FiniteMatrixGroup D = weyl_e6().derived_subgroup();
    return D;
}

}  // namespace weylk3
