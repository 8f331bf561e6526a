#pragma once

#include "weylk3/matgroup.hpp"

namespace weylk3 {

// class function with rational-integer values (all characters of W(E6) are
// integer-valued; the lift asserts this exactly)
struct ClassFunction {
    std::vector<Int> values;  // indexed by conjugacy classes
};

struct CharacterTable {
    const FiniteMatrixGroup* group = nullptr;
    std::vector<ClassFunction> rows;      // irreducible characters
    std::vector<int> inverse_class;       // class index of the inverse elements
    std::vector<QPoly> fake_degrees;      // per row
    std::vector<std::pair<Int, int>> db;  // (degree, b) per row
    uint64_t dixon_prime = 0;

    int num_classes() const { return (int)rows.size(); }
    Int degree(int row) const { return rows[row].values[0]; }

    // exact inner product <f, chi_row>
    Rat inner(const ClassFunction& f, int row) const;

    // multiplicities of f in the irreducible characters; throws on
    // non-integral multiplicities
    std::vector<Int> decompose(const ClassFunction& f) const;

    // row index with the given (degree, b) label
    int row_of_db(const Int& d, int b) const;

    ClassFunction trivial_character() const;
    ClassFunction det_character() const;
    ClassFunction natural_character() const;  // traces
    ClassFunction regular_character() const;

    bool check_orthogonality() const;  // exact, all pairs
};

// Dixon's method: exact class-algebra structure constants, simultaneous
// eigenvectors modulo the smallest admissible prime, lifted to Z by the
// eigenvalue-multiplicity transform
CharacterTable character_table(const FiniteMatrixGroup& G);

// fake degree of the character: prod(1-t^d) / |W| * sum_w chi(w^-1)/det(1-tw)
QPoly fake_degree(const CharacterTable& T, int row, const std::vector<int>& degrees);

// fill fake degrees, sort rows by (degree, b), build the DB labels
void finalize_with_fake_degrees(CharacterTable& T, const std::vector<int>& degrees);

// codegrees read from the fake degree of the natural character (exponents - 1)
std::vector<int> codegrees_from_fake(const CharacterTable& T);

const CharacterTable& e6_character_table();

}  // namespace weylk3
