#pragma once

#include <vector>

#include "framelat/quad.hpp"

namespace framelat {

// Continued fraction of a rational or quadratic-irrational number.
// quotients(): a0, preperiod..., then the period repeating forever.
// period is empty exactly when the value is rational.
struct ContinuedFraction {
    Int integerPart;
    std::vector<Int> preperiod;
    std::vector<Int> period;

    bool isPeriodic() const { return !period.empty(); }
    // m-th partial quotient, m >= 0 (m = 0 is the integer part).
    Int quotient(std::size_t m) const;
};

ContinuedFraction cfExpand(const QuadScalar& x);

// Convergents p_m / q_m of a continued fraction, on demand.
class ConvergentStream {
public:
    explicit ConvergentStream(const ContinuedFraction& cf) : cf_(cf) {}
    // Returns (p_m, q_m) for m = 0, 1, ... on successive calls.
    std::pair<Int, Int> next();
    bool exhausted() const;  // true when a finite expansion has been consumed

private:
    const ContinuedFraction& cf_;
    std::size_t m_ = 0;
    Int pPrev_ = 1, qPrev_ = 0;   // p_{-1}, q_{-1}
    Int pPrev2_ = 0, qPrev2_ = 1; // p_{-2}, q_{-2}
};

} // namespace framelat
