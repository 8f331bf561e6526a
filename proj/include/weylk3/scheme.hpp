#pragma once

#include "weylk3/groebner.hpp"
#include "weylk3/matgroup.hpp"
#include "weylk3/numfield.hpp"

#include <memory>

namespace weylk3 {

enum class Ambient { Affine, Projective };

// closed subscheme of affine or projective n-space over Q
struct Scheme {
    Ambient ambient = Ambient::Projective;
    int nvars = 6;
    std::vector<QMPoly> gens;

    mutable std::shared_ptr<Groebner<Rat>> gb_cache;

    const Groebner<Rat>& gb() const;

    static Scheme projective(int nvars, std::vector<QMPoly> gens);
    static Scheme affine(int nvars, std::vector<QMPoly> gens);

    Scheme meet(const Scheme& other) const;  // union of generator sets

    // Krull-combinatorial dimension from the Groebner staircase, with the
    // projective shift; -1 means empty
    int dimension() const;

    // Hilbert-polynomial constant of a 0-dimensional projective scheme
    Int degree_zero_dimensional() const;

    // true iff every generator of B reduces to zero against this scheme's
    // Groebner basis (i.e. B's equations hold on this scheme: this ⊆ B)
    bool contained_in(const Scheme& B) const;

    // dehomogenize at variable k (set x_k = 1), dropping that variable
    Scheme affine_patch(int k) const;

    // add the c x c minors of the Jacobian of the generators (c = codim)
    Scheme singular_subscheme(int codim) const;
    bool is_smooth(int codim) const;

    // sound one-sided emptiness certificate: a finite Groebner staircase
    // modulo a prime forces emptiness in characteristic zero
    bool certified_empty_modp() const;
};

// the subscheme of P^5 of eigenvector lines of g: 2x2 minors of the matrix
// stacking (x_1..x_6) over the coordinates of g*x
Scheme fixed_point_scheme(const WMat& g);

// restrict homogeneous forms to the column span of an integer basis (k
// columns): returns polynomials in k variables
QMPoly restrict_to_subspace(const QMPoly& f, const Mat<Rat>& basis_cols);

// ---- zero-dimensional solving ------------------------------------------------

// a solution point with coordinates in a number field
struct SolvedPoint {
    NumberField field;                    // Q[x]/(m)
    std::vector<NumberField::Elem> coords;
};

// all points of a 0-dimensional affine scheme whose coordinates live in
// extensions of degree <= 4; throws when a larger extension would be needed
std::vector<SolvedPoint> solve_zero_dimensional(const Scheme& affine_scheme);

}  // namespace weylk3
