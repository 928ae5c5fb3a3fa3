#pragma once

#include <string>

#include "framelat/rational.hpp"

namespace framelat {

// Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
// Canonical form: d squarefree; b == 0 forces d = 0, so every rational
// value has exactly one representation and equality is component-wise.
class QuadScalar {
public:
    QuadScalar() : d_(0) {}
    QuadScalar(const Rational& a) : a_(a), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadScalar(long a) : a_(a), d_(0) {}             // NOLINT(google-explicit-constructor)
    QuadScalar(Rational a, Rational b, long d);

    const Rational& rationalPart() const { return a_; }
    const Rational& surdPart() const { return b_; }
    long discriminant() const { return d_; }

    bool isRational() const { return d_ == 0; }
    bool isZero() const { return a_ == 0 && b_ == 0; }
    // Exact rational value; throws unless isRational().
    const Rational& asRational() const;

    int sign() const;

    QuadScalar operator-() const;
    QuadScalar conjugate() const;   // a - b*sqrt(d)
    QuadScalar inverse() const;

    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);

    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
    QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }
    friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() >= 0; }

    QuadScalar abs() const { return sign() < 0 ? -*this : *this; }

    std::string toString() const;   // "p/q" or "p/q|r/s"

    static QuadScalar sqrtOf(long d) { return QuadScalar(Rational(0), Rational(1), d); }

private:
    Rational a_;
    Rational b_;
    long d_;
};

// Shared discriminant for mixed arithmetic: rational values (d=0) combine
// with anything; two distinct nonzero d's are an error.
long combineDiscriminants(long d1, long d2);

} // namespace framelat
