#pragma once

#include "framelat/frame.hpp"

namespace framelat {

// k+1 unit vectors in R^k with pairwise inner product -1/k (Gram form).
GramFrame constructSimplex(std::size_t k);

// n unit vectors at angles 2*pi*j/n in the plane. Coordinates are emitted
// for n in {3,4,6,8,12}, where both cosine and sine lie in one Q(sqrt d);
// for n in {5,10} only the cosines do, so the system is returned Gram-only.
FrameInput constructHarmonic2d(std::size_t n);

// The (6,3) equiangular tight frame. The unit Gram has entries 1 and
// +-1/sqrt(5); no coordinate matrix over Q(sqrt 5) realizes the unit
// version, so the coordinate variant uses the icosahedron diagonals with
// common squared norm (5+sqrt(5))/2 instead.
GramFrame constructIcosahedronGram();
Frame constructIcosahedronCoords();

// The (28,7) system indexed by pairs {i,j} of an 8-set; Gram is rational
// with off-diagonal entries +-1/3.
GramFrame constructEtf28();

// Gram I + S/5 from a validated 276 x 276 Seidel matrix.
GramFrame constructEtf276(const IntMatrix& seidel);

// Seidel validation used by constructEtf276: square of the stated size,
// symmetric, zero diagonal, entries in {-1,+1}, and S^2 = 50 S + 275 I.
// Throws ValidationError naming the first violated condition.
void validateSeidel276(const IntMatrix& seidel);

} // namespace framelat
