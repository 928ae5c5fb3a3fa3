#pragma once

#include "framelat/matrix.hpp"

namespace framelat {

struct LllResult {
    RatMatrix reducedGram;  // U^T * gram * U
    IntMatrix transform;    // U, unimodular
};

// Exact Gram-based LLL with parameter delta in (1/4, 1). The output satisfies
// the size-reduction and Lovasz conditions; pivot order is fixed, so the
// result is deterministic. Rejects non-positive-definite input.
LllResult lllReduce(const RatMatrix& gram, const Rational& delta = Rational(3, 4));

} // namespace framelat
