#pragma once

#include <vector>

#include "monocat/field.hpp"

namespace monocat {

// Dense matrix over the coefficient field k, used for the finite-dimensional
// linear algebra behind stable Hom computations.
struct KMatrix {
    FieldSpec field;
    size_t rows = 0, cols = 0;
    std::vector<Coeff> a; // row-major

    KMatrix(FieldSpec f, size_t r, size_t c) : field(f), rows(r), cols(c), a(r * c, Coeff(0)) {}

    Coeff& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Coeff& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

size_t k_rank(KMatrix m); // by value: elimination is destructive

// Basis of the right nullspace {v : M v = 0}, each vector of length cols.
std::vector<std::vector<Coeff>> k_nullspace(KMatrix m);

} // namespace monocat
