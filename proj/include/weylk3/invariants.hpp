#pragma once

#include "weylk3/matgroup.hpp"
#include "weylk3/multipoly.hpp"
#include "weylk3/scheme.hpp"

namespace weylk3 {

// Molien series of the invariant ring, exact coefficients c_0..c_T, summed
// per conjugacy class
std::vector<Rat> molien_series(const FiniteMatrixGroup& G, int truncation);

// factor a Molien series as prod 1/(1-t^d); returns the multiset of degrees
std::vector<int> molien_degrees(const std::vector<Rat>& series);

// Reynolds operator (group average); exact, aggregated over row tuples
class ReynoldsOperator {
  public:
    explicit ReynoldsOperator(const FiniteMatrixGroup& G) : G_(G) {}
    QMPoly apply(const QMPoly& p) const;
    QMPoly apply_monomial(Mono m, Ord o) const;

  private:
    const FiniteMatrixGroup& G_;
    // aggregated multiset of row tuples per variable-support mask
    mutable std::map<uint8_t, std::unordered_map<std::string, uint64_t>> cache_;
    const std::unordered_map<std::string, uint64_t>& tuples(uint8_t support_mask) const;
};

struct InvariantSet {
    QMPoly f2, f5, f6, f8, f9, f12;
    std::string provenance;  // "deterministic-reynolds" or loaded fixture
    const QMPoly& of_degree(int d) const;
    std::vector<const QMPoly*> all() const { return {&f2, &f5, &f6, &f8, &f9, &f12}; }
};

// deterministic fundamental invariants: Reynolds image of the
// lexicographically first monomial of each degree with nonzero image,
// primitive integer coefficients
const InvariantSet& fundamental_invariants();

// product of the 36 reflection linear forms, kept factored
struct JacobianProduct {
    std::vector<std::vector<Int>> forms;   // 36 integer linear forms alpha_H
    std::vector<std::vector<Int>> roots_;  // the matching reflection roots
    int degree() const { return (int)forms.size(); }

    // sign of w acting on the product: w . Jac = sign * Jac
    int action_sign(const WMat& w) const;

    template <class K2>
    K2 eval(const std::vector<K2>& point) const {
        K2 r(1);
        for (const auto& f : forms) {
            K2 v(0);
            for (int i = 0; i < kDim; ++i)
                if (f[i] != 0) v = v + point[i] * K2((int)f[i].get_si());
            r = r * v;
        }
        return r;
    }

    // expand the product restricted to the span of basis columns (k <= 4 vars)
    QMPoly expand_restricted(const Mat<Rat>& basis_cols) const;
};

const JacobianProduct& jacobian_product();

// w acting on polynomials: (w . f)(x) = f(w x)
QMPoly group_action(const QMPoly& f, const WMat& w);
bool is_invariant(const QMPoly& f, const WMat& w);

// dimension of the degree-d invariant subspace certified by exact modular
// linear algebra in both directions (generator kernels vs invariant products)
int invariant_space_dim_certified(int degree);

}  // namespace weylk3
