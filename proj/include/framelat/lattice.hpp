#pragma once

#include <cstdint>
#include <optional>

#include "framelat/frame.hpp"
#include "framelat/intlattice.hpp"

namespace framelat {

inline constexpr std::uint64_t kDefaultNodeBudget = 100000000;  // 1e8

// Rank-k lattice extracted from a spanning system: reduced basis Gram plus
// the integer coordinates of the basis in terms of the original generators.
struct QuadraticLattice {
    std::size_t k = 0;
    RatMatrix basisGram;    // k x k, positive definite, LLL-reduced
    IntMatrix embed;        // n x k; basis vector j is sum_i embed(i,j) * f_i
    Rational detGram;
    // k x n projection: maps generator coordinates a to the coordinates of
    // the lattice point G a in the reduced basis (kernel components vanish).
    IntMatrix classProject;
};

struct LatticeDetectReport {
    bool isLattice = false;
    std::size_t k = 0;  // callers know the k in {2,3} equivalence applies
    std::vector<std::size_t> pivotColumns;
    // location of the first irrational transformed entry, when not a lattice:
    // (pivot row index, generator column)
    std::optional<std::pair<std::size_t, std::size_t>> irrationalEntry;
};

// Rationality test for the integral span: pick the leftmost invertible
// column subset G0 and ask whether all G0^-1 f_i are rational. Computed
// through the Gram matrix (G0^-1 f_i solves M_JJ x = M_{J,i}), so both
// coordinate and Gram-only inputs are accepted. Requires a tight frame.
LatticeDetectReport latticeDetect(const FrameInput& input);

// Z^n / ker(M) realized as a lattice: kernel + unimodular completion, then
// exact LLL on the quotient Gram. Input must be rational.
QuadraticLattice spanToLattice(const GramFrame& gf, const Rational& lllDelta = Rational(3, 4));

struct MinimalVectorSet {
    Rational minNormSq;
    // integer generator combinations attaining minNormSq: negation closed,
    // deduplicated, lexicographically sorted
    std::vector<std::vector<Int>> vectors;
};

// All shortest vectors of a positive definite Gram, in basis coordinates.
// Exact Fincke-Pohst: depth-first from the last coordinate, children in
// increasing order, interval bounds decided by rational comparisons.
// Throws BudgetError when nodeBudget is exhausted.
struct GramEnumeration {
    Rational minNormSq;
    std::vector<std::vector<Int>> vectors;
};
GramEnumeration shortestVectorsOfGram(const RatMatrix& gram,
                                      std::uint64_t nodeBudget = kDefaultNodeBudget);

MinimalVectorSet minimalVectors(const QuadraticLattice& lattice,
                                std::uint64_t nodeBudget = kDefaultNodeBudget);

struct MinNormBound {
    bool alphaGramIntegral = false;  // alpha * M has integer entries
    bool holds = false;              // minNormSq >= 1/alpha
    Rational margin;                 // minNormSq - 1/alpha
};

// Minimal-norm bound for unit ETFs with integer alpha; rejects non-integer
// alpha. The integrality of alpha*M is the quantization step behind it.
MinNormBound minNormBoundCheck(const GramFrame& gf, const QuadScalar& alpha,
                               const Rational& minNormSq);

// alpha * <M a, a> must be a nonnegative integer for every integer vector a;
// spot-checks `samples` random vectors with entries in [-3, 3] and verifies
// Q(a) >= 1/alpha whenever nonzero. Deterministic in `seed`.
bool normFormQuantizationCheck(const GramFrame& gf, const Int& alpha, std::size_t samples,
                               std::uint64_t seed);

enum class MinvecVsFrame { EqualsPlusMinusFrame, StrictSuperset, Other };

// Compare the minimal vectors against +-(frame vectors), both taken modulo
// ker(M): frame vector f_i corresponds to the class of e_i.
MinvecVsFrame minvecVsFrame(const MinimalVectorSet& s, const QuadraticLattice& lattice);
std::string minvecVsFrameName(MinvecVsFrame v);

} // namespace framelat
