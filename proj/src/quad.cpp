#include "framelat/quad.hpp"

#include <utility>

namespace framelat {

namespace {

// Pull square factors out of d so the stored discriminant is squarefree:
// sqrt(s^2 * d') = s * sqrt(d').
std::pair<long, Int> squarefreePart(long d) {
    Int scale = 1;
    long rest = d;
    for (long p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            scale *= p;
        }
    }
    return {rest, scale};
}

} // namespace

QuadScalar::QuadScalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw ValidationError("negative discriminant");
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0) {
        b_ = 0;
        return;
    }
    auto [rest, scale] = squarefreePart(d_);
    d_ = rest;
    if (scale != 1) b_ *= Rational(scale);
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

const Rational& QuadScalar::asRational() const {
    if (!isRational()) throw ValidationError("quadratic scalar is not rational: " + toString());
    return a_;
}

int QuadScalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decided by squaring (exact since
    // d is squarefree >= 2, so equality cannot occur for nonzero parts).
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    int c = cmp(lhs, rhs);
    if (c == 0) throw InternalError("a^2 == b^2 d with squarefree d");
    return c > 0 ? sa : sb;
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadScalar QuadScalar::conjugate() const {
    QuadScalar r = *this;
    r.b_ = -r.b_;
    return r;
}

QuadScalar QuadScalar::inverse() const {
    if (isZero()) throw ValidationError("division by zero quadratic scalar");
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero
    // because d is squarefree.
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    if (norm == 0) throw InternalError("zero field norm for nonzero scalar");
    return QuadScalar(a_ / norm, -b_ / norm, d_);
}

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    long d = combineDiscriminants(x.d_, y.d_);
    return QuadScalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    long d = combineDiscriminants(x.d_, y.d_);
    return QuadScalar(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    long d = combineDiscriminants(x.d_, y.d_);
    Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadScalar(a, b, d);
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
    return x * y.inverse();
}

std::string QuadScalar::toString() const {
    if (isRational()) return rationalToString(a_);
    return rationalToString(a_) + "|" + rationalToString(b_);
}

long combineDiscriminants(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0) return d1;
    if (d1 != d2)
        throw ValidationError("mismatched quadratic fields: sqrt(" + std::to_string(d1) +
                              ") vs sqrt(" + std::to_string(d2) + ")");
    return d1;
}

} // namespace framelat
