#pragma once

#include "weylk3/cyclo.hpp"
#include "weylk3/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>

namespace weylk3 {

constexpr int kDim = 6;

// 6x6 integer matrix, row-major; group elements of W(E6) in the simple-root
// basis have entries in [-3, 3]
struct WMat {
    std::array<int8_t, 36> a{};

    static WMat identity() {
        WMat m;
        for (int i = 0; i < kDim; ++i) m.at(i, i) = 1;
        return m;
    }
    int8_t& at(int i, int j) { return a[i * kDim + j]; }
    int8_t at(int i, int j) const { return a[i * kDim + j]; }

    friend WMat operator*(const WMat& x, const WMat& y) {
        WMat r;
        for (int i = 0; i < kDim; ++i)
            for (int k = 0; k < kDim; ++k) {
                int v = x.at(i, k);
                if (!v) continue;
                for (int j = 0; j < kDim; ++j) r.a[i * kDim + j] += (int8_t)(v * y.at(k, j));
            }
        return r;
    }
    WMat transpose() const {
        WMat r;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    bool operator==(const WMat& o) const { return a == o.a; }
    bool operator<(const WMat& o) const { return a < o.a; }  // flattened row order

    Mat<Rat> to_rat() const {
        Mat<Rat> m(kDim, std::vector<Rat>(kDim));
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) m[i][j] = at(i, j);
        return m;
    }
};

struct WMatHash {
    size_t operator()(const WMat& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int8_t v : m.a) {
            h ^= (uint8_t)v;
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};

// E6 Gram matrix: 1 on the diagonal, -1/2 on diagram edges (Bourbaki node
// numbering: edges 1-3, 3-4, 4-5, 5-6, 2-4)
Mat<Rat> e6_gram_matrix();
bool e6_edge(int i, int j);  // 1-based nodes

int wmat_det(const WMat& m);    // +-1 for group elements
WMat wmat_inverse(const WMat& m);
int wmat_order(const WMat& m, int cap = 64);
QPoly wmat_charpoly(const WMat& m);  // det(t*I - M), integer coefficients

struct ConjClass {
    uint32_t rep;                   // element index (lexicographically smallest member)
    std::vector<uint32_t> members;  // element indices
    int order;                      // order of the representative
    int det;
};

class FiniteMatrixGroup {
  public:
    static constexpr size_t kClosureCap = 60000;

    // breadth-first closure of the generating set
    static FiniteMatrixGroup generate(const std::vector<WMat>& gens, size_t cap = kClosureCap);

    size_t order() const { return elems_.size(); }
    const std::vector<WMat>& elements() const { return elems_; }
    const WMat& elem(uint32_t i) const { return elems_[i]; }
    const std::vector<uint32_t>& generators() const { return gens_; }

    bool contains(const WMat& m) const { return index_.count(m) != 0; }
    std::optional<uint32_t> index_of(const WMat& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    uint32_t inverse_index(uint32_t i) const { return inv_[i]; }
    uint32_t product_index(uint32_t i, uint32_t j) const {
        return *index_of(elems_[i] * elems_[j]);
    }

    // conjugacy classes, deterministic representatives, sorted by (order,
    // class size, representative matrix)
    const std::vector<ConjClass>& conjugacy_classes() const;
    uint32_t class_of(uint32_t elem_index) const;

    FiniteMatrixGroup derived_subgroup() const;
    FiniteMatrixGroup subgroup(const std::vector<WMat>& gens) const;
    FiniteMatrixGroup centralizer(const WMat& g) const;
    FiniteMatrixGroup normalizer(const FiniteMatrixGroup& H) const;

    bool is_subgroup_of(const FiniteMatrixGroup& G) const;
    bool is_abelian() const;
    bool is_elementary_abelian() const;

    // conjugacy with witness: returns x with x a x^-1 = b when conjugate
    std::pair<bool, std::optional<WMat>> is_conjugate(const WMat& a, const WMat& b) const;

    int exponent() const;  // lcm of element orders

  private:
    std::vector<WMat> elems_;
    std::unordered_map<WMat, uint32_t, WMatHash> index_;
    std::vector<uint32_t> gens_;
    std::vector<uint32_t> inv_;
    mutable std::vector<ConjClass> classes_;
    mutable std::vector<uint32_t> class_of_;
    void compute_classes() const;
};

// the Weyl group of type E6 built from the Gram matrix reflections;
// cached on disk under cache_dir (WEYLK3_CACHE_DIR or .weylk3-cache)
const FiniteMatrixGroup& weyl_e6();
const FiniteMatrixGroup& weyl_e6_derived();
std::string cache_directory();

// simple reflections s_1..s_6 (0-indexed access s[k])
std::vector<WMat> e6_simple_reflections();

// eigenvalue multiset as (root of unity, multiplicity) pairs, via cyclotomic
// factorization of the characteristic polynomial
std::vector<std::pair<RootOfUnity, int>> eigen_multiset(const WMat& g);

// dim of the zeta_e-eigenspace = multiplicity of Phi_e in charpoly
int eigenspace_dim(const WMat& g, int e);

// kernel vector of (g - zeta*I), first nonzero coordinate normalized to 1
std::vector<Cyclo> eigenvector(const WMat& g, const Cyclo& zeta);

// rational basis (integer, primitive columns) of ker(g - I) type spaces:
// kernel of (g - lambda*I) for lambda = +-1
Mat<Rat> rational_eigenspace_basis(const WMat& g, int lambda);

}  // namespace weylk3
