#include "weylk3/springer.hpp"

namespace weylk3 {

SpringerDatum springer_data(int e, const std::vector<int>& degrees,
                            const std::vector<int>& codegrees) {
    SpringerDatum d;
    d.e = e;
    for (int deg : degrees)
        if (deg % e == 0) ++d.delta;
    for (int cod : codegrees)
        if (cod % e == 0) ++d.delta_star;
    const auto& W = weyl_e6();
    const auto& classes = W.conjugacy_classes();
    int maxdim = 0;
    for (const auto& cl : classes) maxdim = std::max(maxdim, eigenspace_dim(W.elem(cl.rep), e));
    if (maxdim != d.delta) throw std::runtime_error("springer_data: delta mismatch with eigenspaces");
    if (d.delta == 0) return d;
    d.empty = false;
    // minimal order among classes attaining the maximum; lexicographic tiebreak
    // is inherited from the deterministic class ordering
    bool found = false;
    for (uint32_t ci = 0; ci < classes.size(); ++ci) {
        if (eigenspace_dim(W.elem(classes[ci].rep), e) != d.delta) continue;
        if (!found || classes[ci].order < classes[d.we_class].order) {
            d.we_class = ci;
            found = true;
        }
    }
    d.we = W.elem(classes[d.we_class].rep);
    d.eigen = eigen_multiset(d.we);
    return d;
}

std::vector<RootOfUnity> tangent_eigenvalues(const std::vector<RootOfUnity>& eigen,
                                             const std::vector<int>& degrees, int chosen_index) {
    if (chosen_index < 0 || chosen_index >= (int)eigen.size())
        throw std::domain_error("tangent_eigenvalues: bad index");
    RootOfUnity xi = eigen[chosen_index];
    auto root_mul = [](const RootOfUnity& a, const RootOfUnity& b) {
        int n = std::lcm(a.d, b.d);
        long k = (long)a.k * (n / a.d) + (long)b.k * (n / b.d);
        k %= n;
        if (k < 0) k += n;
        int g = (int)std::gcd(k == 0 ? (long)n : k, (long)n);
        return RootOfUnity{n / g, k / g};
    };
    auto root_pow = [&](const RootOfUnity& a, long e) {
        long k = a.k * e;
        long n = a.d;
        k %= n;
        if (k < 0) k += n;
        long g = std::gcd(k == 0 ? n : k, n);
        return RootOfUnity{(int)(n / g), k / g};
    };
    RootOfUnity xi_inv = root_pow(xi, -1);
    std::vector<RootOfUnity> pool;
    for (int i = 0; i < (int)eigen.size(); ++i) {
        if (i == chosen_index) continue;
        pool.push_back(root_mul(xi_inv, eigen[i]));
    }
    for (int deg : degrees) {
        RootOfUnity target = root_pow(xi, -(long)deg);
        auto it = std::find(pool.begin(), pool.end(), target);
        if (it == pool.end())
            throw std::domain_error("tangent_eigenvalues: containment fails (singular point?)");
        pool.erase(it);
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace weylk3
