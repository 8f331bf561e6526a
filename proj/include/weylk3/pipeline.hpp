#pragma once

#include "weylk3/chartable.hpp"
#include "weylk3/invariants.hpp"
#include "weylk3/lattice.hpp"
#include "weylk3/scheme.hpp"

#include <map>
#include <optional>

namespace weylk3 {

// ---- the surface and the fixed-point census ----------------------------------

Scheme build_X();
Scheme build_Y(const Rat& lambda, const Rat& mu);

struct CensusEntry {
    uint32_t class_index;  // class index in W
    int order;
    int det;
    bool in_derived;       // class meets W' (det = 1)
    std::string name;      // paper name (w2, v2, w3, v3, u3, ...) when assigned
    int dim;               // dim of X^w; -1 empty
    Int degree;            // for dim == 0
    bool certified;        // dim obtained by the modular certificate route
};

struct Census {
    std::vector<CensusEntry> entries;  // one per class of W
    const CensusEntry& by_name(const std::string& n) const;
    int euler_chi(uint32_t class_index) const;  // Lefschetz value of that class
};

// per-class fixed schemes of X, cached on disk
const Census& fixed_point_census();

// class names per the order/eigenvalue conventions (w2/v2, w3/v3/u3, w4/v4,
// w5, w6, w9, w12); assigned on W-classes
std::map<std::string, uint32_t> named_classes();

// containment X^w ⊆ Z(f5, f9) for the named class
bool census_contained_in_f5f9(const std::string& name);

// stabilizer-type scans (common fixed points of two group elements on X)
struct EigenPieces {
    // pieces of P(V(g, lambda)) with restricted defining forms of X
    struct Piece {
        Cyclo lambda;
        Mat<Cyclo> basis;                  // basis vectors of V(g, lambda) (rows)
        std::vector<MPoly<Cyclo>> forms;   // f2,f6,f8 restricted (k vars)
        bool has_points;                   // X ∩ P(V) nonempty
    };
    std::vector<Piece> pieces;
};

EigenPieces eigen_pieces_of(const WMat& g);
bool common_fixed_point_on_X(const EigenPieces& pieces, const WMat& w);

// G(v3): elements of W' whose fixed locus meets X^{v3}; expect order 9
FiniteMatrixGroup stabilizer_group_v3();
// G_B for the u3 analysis; expect order 27
FiniteMatrixGroup stabilizer_group_u3();
// the exhaustive scan of X^{v2} (extended tier): elements of W' fixing a
// point of X^{v2} are exactly {1, v2}
bool club_scan_v2();

// ---- weighted-projective data and the surface equation ------------------------

// weight-0 invariant coordinates used throughout: u = y4^3/y3^4, v = y5*y4/y3^3
// with (y5, y3, y4, j) = (f5^3, f9, f12, Jac)
struct UVPair {
    QPoly min_u;              // minimal polynomial of u over Q
    QPoly min_v;
    QPoly min_upv;            // of u + v (pairing resolution)
    int points;               // number of distinct values
};

struct EquationData {
    // eigenvector ratios
    Rat r9;    // Jac(v9)^2 / f9(v9)^8
    Rat r12;   // Jac(v12)^2 / f12(v12)^6
    Rat u_p;   // u at the C5+ ∩ C5- point (from X^{v3})
    // (u, v) data of the constraint points in our normalization
    UVPair p1_data;   // over Q(sqrt 19), from X^{v2}
    Rat p2_u, p2_v;   // rational, from the Jac-vanishing part of X^{u3}
    UVPair r_data;    // over Q(sqrt 6), from X^{s2} ∩ {x1 = 0}
    // solved coefficients of j^2 = r9 (y3^4 - y4^3/u_p)^2 - y5 R in our frame
    Rat a, b, c, d, e;
};

struct Calibration {
    // y_paper = kappa * y_ours, solved from the pinned constants
    Rat k5, k3, k4, kj;   // magnitudes with the resolved signs on k3*k5
    bool solvable = false;
    std::string obstruction;
    // transformed coefficients (should match the published quintuple)
    Rat a, b, c, d, e;
    Rat u_p, r12_ratio;
    Rat p2_u, p2_v;
    QPoly p1_min_u, p1_min_v, p1_min_upv;  // after calibration
};

const EquationData& surface_equation_data();
const Calibration& surface_calibration();

// the published equation as exact polynomials: leading part and R, in
// variables (y5, y3, y4) with weights (5, 3, 4)
QMPoly published_rhs_at_y5_1();  // F(y3, y4, j-free): rhs of j^2 with y5 = 1

// ---- charts -------------------------------------------------------------------

struct ChartCheck {
    std::string id;
    bool pass;
    std::string detail;
};

std::vector<ChartCheck> chart_u3_u4_checks();  // derived vs published
std::vector<ChartCheck> chart_u5_checks();     // 9 generators vanish under parametrization
std::vector<ChartCheck> mu5_ring_checks();     // 5 secondaries, 17 relations
std::vector<ChartCheck> blowup_chart_checks(); // appendix chart data
std::vector<ChartCheck> curve_checks();        // genus-10 curves, C3/C4 transversality

// ---- topology and the Lefschetz character --------------------------------------

struct HodgePair {
    Int h20, h11, euler;
};
HodgePair hodge_ci(const std::vector<int>& degrees, int ambient_dim);

// chi_X as a class function on W (Euler characteristics of the fixed loci)
ClassFunction lefschetz_character();

// multiplicities of chi_X^(2) = chi_X - 2*trivial in the irreducible rows,
// keyed by the (degree, b) labels
std::map<std::pair<long, int>, long> lefschetz_decomposition();

}  // namespace weylk3
