#pragma once

#include <vector>

#include "framelat/matrix.hpp"

namespace framelat {

struct ColumnHnf {
    IntMatrix h;        // A * u = h, column Hermite form
    IntMatrix u;        // unimodular n x n
    std::size_t rank = 0;
};

// Column-style Hermite normal form with nonnegative pivots. Deterministic:
// pivot = smallest absolute value, lowest column index on ties.
ColumnHnf hnfColumns(const IntMatrix& a);

struct SmithForm {
    IntMatrix s;        // v * A * w = s, diagonal with s|ii| dividing s[i+1][i+1]
    IntMatrix v;        // unimodular rows transform
    IntMatrix vInverse; // maintained alongside v
    IntMatrix w;        // unimodular cols transform
};

SmithForm smithNormalForm(const IntMatrix& a);

// Z-basis of {x integer : M x = 0}, saturated (primitive): equals ker(M) over Q
// intersected with Z^n. Columns are sign-normalized (first nonzero positive)
// and ordered deterministically.
IntMatrix integerKernel(const RatMatrix& m);

// Given K (n x r) with Z-independent, saturated columns, returns U in GL_n(Z)
// whose first r columns span the same lattice as K; the remaining columns
// project to a basis of Z^n / colspan(K). Rejects non-saturated K.
IntMatrix hnfComplete(const IntMatrix& k, std::size_t n);

// det of an integer matrix via exact rational elimination (test/support use).
Int determinant(const IntMatrix& m);

} // namespace framelat
