#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framelat/matrix.hpp"

namespace framelat {

// Vector system given by coordinates: the columns of g are the vectors.
struct Frame {
    std::size_t n = 0, k = 0;
    long d = 0;        // field discriminant shared by all entries (0 = rational)
    QuadMatrix g;      // k x n
};

// Vector system given only through its Gram matrix. Entries are rational
// when d == 0; the (6,3) system and the degree-5 harmonic systems need a
// quadratic Gram, so d > 0 is allowed here as well.
struct GramFrame {
    std::size_t n = 0, k = 0;
    long d = 0;
    QuadMatrix m;      // n x n symmetric, PSD of rank k
};

using FrameInput = std::variant<Frame, GramFrame>;

// Validating constructors: reject rank/shape/symmetry/PSD violations.
Frame makeFrame(std::size_t n, std::size_t k, long d, QuadMatrix g);
GramFrame makeGramFrame(std::size_t n, std::size_t k, QuadMatrix m);

QuadMatrix gramOf(const Frame& f);
GramFrame toGramFrame(const FrameInput& input);

std::size_t frameN(const FrameInput& input);
std::size_t frameK(const FrameInput& input);
long frameD(const FrameInput& input);

struct TightnessReport {
    bool isTight = false;
    QuadScalar frameConstant;  // A with G G^T = A * I (equivalently M^2 = A M)
    QuadScalar gamma;          // 1/A, the scale in the analysis identity
};

// Coordinate form tests G G^T = A I with A = trace(G G^T)/k. Gram-only form
// tests M^2 = A M with A = trace(M)/k, which is equivalent for a rank-k Gram.
TightnessReport tightnessCheck(const FrameInput& input);

struct EtfWitness {
    std::string reason;  // "non-common-norm" | "non-equiangular" | "not-tight" | "angle-identity"
    std::size_t i = 0, j = 0;
};

struct EtfReport {
    bool isEtf = false;       // equiangular tight frame with a common vector norm
    bool isUnitEtf = false;   // additionally the common norm is exactly 1
    QuadScalar commonNormSq;
    QuadScalar c;             // cosine of the common angle in (0,1)
    QuadScalar alpha;         // 1/c
    bool alphaIsInteger = false;
    bool isMaximal = false;   // n == k(k+1)/2
    std::optional<EtfWitness> witness;  // set when isEtf is false
};

EtfReport etfCheck(const FrameInput& input);

enum class GerzonClass { BelowRange, InRange, Maximal, AboveRange };
GerzonClass gerzonCheck(std::size_t n, std::size_t k);
std::string gerzonClassName(GerzonClass g);

struct RationalityClass {
    enum Kind { Rational, ScaledRational, Irrational } kind = Rational;
    // For ScaledRational: the canonical positive scale with muSquared * M a
    // primitive integer matrix. It lives in Q(sqrt d), not in Q, whenever M
    // itself is non-rational.
    QuadScalar muSquared;
};

RationalityClass rationalityClass(const FrameInput& input);
std::string rationalityKindName(RationalityClass::Kind k);

} // namespace framelat
