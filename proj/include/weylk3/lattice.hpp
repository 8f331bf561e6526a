#pragma once

#include "weylk3/linalg.hpp"

#include <set>
#include <string>

namespace weylk3 {

// the 18-curve incidence graph of the big connected configuration, nodes
// numbered 1..18; labels name the curves
struct IncidenceGraph {
    std::vector<std::string> labels;                 // size 18
    std::vector<std::pair<int, int>> edges;          // 1-based
    std::vector<std::set<int>> adjacency() const;    // 1-based neighbour sets
};

const IncidenceGraph& curve_incidence_graph();

// Gram matrix of smooth rational curves: adjacency - 2*identity
Mat<Int> curve_gram(const IncidenceGraph& g);

Int matrix_minor(const Mat<Int>& m, const std::vector<int>& rows, const std::vector<int>& cols);
Int diagonal_minor_gcd(const Mat<Int>& m, int size);

// rank-20 Picard Gram matrix assembled as A1 + A1 + A2 + the named rank-16
// block of the curve lattice
Mat<Int> picard_gram();

struct DiscriminantGroup {
    std::vector<Int> invariant_factors;    // nontrivial ones
    std::vector<std::vector<Rat>> gens;    // generators of L*/L in lattice coordinates
    std::set<int> value_set_scaled;        // {114*q mod 228}, after optional negation
};

// discriminant group with the value set of (sign * q) scaled by 114 mod 228
DiscriminantGroup discriminant_form(const Mat<Int>& gram, int sign);

struct BinaryForm {
    Int a, b, c;  // matrix ((2a, b), (b, 2c)), discriminant 4ac - b^2
    Int disc() const { return 4 * a * c - b * b; }
    Mat<Int> gram() const { return {{2 * a, b}, {b, 2 * c}}; }
    bool operator==(const BinaryForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

// reduced positive definite even binary forms of the given discriminant
std::vector<BinaryForm> reduced_even_forms(const Int& D);

// Gauss reduction of a positive definite even form
BinaryForm gauss_reduce(BinaryForm f);

// the unique candidate whose 114*q value set matches the given set
int genus_match(const std::set<int>& picard_values, const std::vector<BinaryForm>& candidates,
                std::vector<bool>* match_flags = nullptr);

// Euler numbers of Kodaira fibers
int fiber_euler_number(const std::string& kodaira_type);
int fiber_euler_sum(const std::vector<std::string>& types);

// Shioda-Tate: rho - 2 - sum (components - 1)
int mordell_weil_rank(int picard_rank, const std::vector<int>& fiber_component_counts);

}  // namespace weylk3
