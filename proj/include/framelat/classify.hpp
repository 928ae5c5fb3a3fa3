#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "framelat/frame.hpp"
#include "framelat/lattice.hpp"

namespace framelat {

// Q(a) = <M a, a>, exact.
QuadScalar normFormEval(const QuadMatrix& m, const std::vector<Int>& a);
Rational normFormEval(const RatMatrix& m, const std::vector<Int>& a);

enum class EutaxyClass {
    NotWeaklyEutactic,
    WeaklyEutactic,
    SemiEutactic,
    Eutactic,
    StronglyEutactic,
};
std::string eutaxyClassName(EutaxyClass c);

struct EutaxyReport {
    EutaxyClass cls = EutaxyClass::NotWeaklyEutactic;
    // One coefficient per vector of S (same order), when a witness exists.
    // For a and -a the symmetric witness splits the pair weight evenly.
    std::vector<Rational> coefficients;
    std::optional<Rational> strongCoefficient;
};

// Eutaxy of the normalized minimal vectors, solved entirely on the Gram
// side: sum_i c_i (M a_i)(M a_i)^T = minNormSq * M, which conjugates to
// sum_i c_i x_i x_i^T = I_k for the unit vectors x_i = G a_i / |G a_i|.
// S must be negation-closed.
EutaxyReport eutaxyClassify(const MinimalVectorSet& s, const GramFrame& gf);

struct PerfectionReport {
    std::size_t spanRank = 0;
    std::size_t required = 0;  // k(k+1)/2
    bool isPerfect = false;
    bool usedClosedForm = false;
};

// Rank of the span of the outer products x_i x_i^T via their Gram matrix
// P_ij = <M a_i, a_j>^2 / minNormSq^2 (one representative per +- pair).
// Maximal unit ETFs with S = +-F take the closed form (1-1/a^2) I + (1/a^2) J,
// whose eigenvalue identities are verified exactly instead of eliminating.
PerfectionReport perfectionCheck(const MinimalVectorSet& s, const GramFrame& gf);

// Voronoi: extreme <=> perfect and (at least) eutactic.
bool extremeVerdict(const EutaxyReport& e, const PerfectionReport& p);

struct SeparationReport {
    long radius = 0;
    QuadScalar minPositiveGap;
    std::vector<Int> witnessA, witnessB;  // |Q(a)-Q(b)| equals the gap
    bool provablySeparated = false;       // rational M: values are quantized globally
    std::optional<Rational> quantizationFloor;  // 1/D for rational M
};

// Enumerates Q over the box |a|_inf <= radius and reports the smallest
// positive difference between attained values. A falsifier for irrational
// forms: it can only exhibit small gaps, never certify separation.
SeparationReport separationSearch(const QuadMatrix& m, long radius,
                                  std::uint64_t valueBudget = 4000000);

// Smallest-index convergent p/q of xi with (p - q xi)^2 < eps, returned as
// (a1, a2) = (p, -q). xi must be a quadratic irrational.
std::pair<Int, Int> xiGapWitness(const QuadScalar& xi, const Rational& eps);

} // namespace framelat
