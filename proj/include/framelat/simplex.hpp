#pragma once

#include <vector>

#include "framelat/matrix.hpp"

namespace framelat {

enum class NonnegFeasibility {
    Infeasible,        // no c >= 0 with A c = b
    FeasibleBoundary,  // c >= 0 exists, but every such c has a zero entry
    FeasibleStrict,    // some c with all entries > 0
};

struct NonnegClassification {
    NonnegFeasibility kind = NonnegFeasibility::Infeasible;
    std::vector<Rational> witness;  // satisfies A c = b with the claimed signs
    Rational maxMinEntry;           // optimum of max t s.t. A c = b, c_i >= t (t capped at 1)
};

// Exact two-phase simplex with Bland's anti-cycling rule. Decides whether
// A c = b admits a nonnegative solution and, if so, whether a strictly
// positive one exists (by maximizing the smallest entry, capped at 1).
NonnegClassification lpClassifyNonneg(const RatMatrix& a, const std::vector<Rational>& b);

} // namespace framelat
