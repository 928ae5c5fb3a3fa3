#pragma once

#include <cstddef>
#include <vector>

#include "framelat/matrix.hpp"

namespace framelat {

struct LdlResult {
    bool positiveDefinite = false;
    std::size_t failingMinor = 0;       // 1-based index of the first non-positive pivot
    RatMatrix l;                        // unit lower triangular
    std::vector<Rational> d;            // positive diagonal when PD
};

// Exact Gram = L * diag(d) * L^T. No pivoting; pivot order is the input order.
LdlResult ldlDecompose(const RatMatrix& gram);

// Throwing wrapper for callers that require positive definiteness.
LdlResult ldlDecomposeOrThrow(const RatMatrix& gram);

} // namespace framelat
