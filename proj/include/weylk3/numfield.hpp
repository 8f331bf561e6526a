#pragma once

#include "weylk3/unipoly.hpp"

#include <optional>

namespace weylk3 {

// Number field Q[x]/(m) in primitive-element representation.  Elements are
// residue classes stored as polynomials of degree < deg m.
class NumberField {
  public:
    using Elem = QPoly;  // degree < deg(min_poly)

    explicit NumberField(QPoly min_poly) : m_(min_poly.monic()) {}

    const QPoly& min_poly() const { return m_; }
    int degree() const { return m_.degree(); }

    Elem from_rat(const Rat& q) const { return QPoly(q); }
    Elem generator() const { return reduce(QPoly::x()); }
    Elem reduce(const QPoly& p) const { return p % m_; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw std::domain_error("NumberField: division by zero");
        QPoly g, s, t;
        QPoly::xgcd(a, m_, g, s, t);
        if (g.degree() != 0) throw std::domain_error("NumberField: element not invertible");
        return reduce(s * (Rat(1) / g.c[0]));
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, unsigned long e) const {
        Elem r = from_rat(1);
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // evaluate a rational polynomial at an element
    Elem eval_poly(const QPoly& p, const Elem& x) const {
        Elem r;
        for (int i = p.degree(); i >= 0; --i) r = add(mul(r, x), from_rat(p.coeff(i)));
        return r;
    }

    // square root, degree <= 2 fields only; nullopt if no root in the field
    std::optional<Elem> try_sqrt(const Elem& d) const;

    static std::optional<Rat> rat_sqrt(const Rat& q);

  private:
    QPoly m_;
};

// Composite field handle: primitive element gamma with images of each
// adjoined generator expressed in gamma.
struct FieldTower {
    NumberField field;                    // Q(gamma)
    std::vector<NumberField::Elem> gens;  // gens[i] = image of the i-th input root
};

// Builds Q(a_1, ..., a_k) from irreducible minimal polynomials by repeated
// primitive-element search gamma' = a + c*gamma (minimal polynomial found by
// resultants, c the smallest positive integer that works).
FieldTower field_tower(const std::vector<QPoly>& min_polys);

// resultant with respect to y of a(y) and b(x, y) given as polynomials in y
// whose coefficients are rational polynomials in x
QPoly resultant_y(const QPoly& a, const std::vector<QPoly>& b_coeffs_in_y);

}  // namespace weylk3
