#pragma once

#include <gmpxx.h>

#include <string>

#include "framelat/errors.hpp"

namespace framelat {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class arithmetic keeps values canonical (gcd(num,den)=1, den>0);
// only raw num/den construction needs an explicit canonicalize.
inline Rational makeRational(const Int& num, const Int& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational makeRational(long num, long den = 1) {
    return makeRational(Int(num), Int(den));
}

inline bool isInteger(const Rational& r) { return r.get_den() == 1; }

inline Int floorOf(const Rational& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceilOf(const Rational& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Nearest integer, ties toward +infinity: floor(r + 1/2).
inline Int roundNearest(const Rational& r) {
    return floorOf(r + Rational(1, 2));
}

inline Int lcmOf(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcdOf(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// max(|num|, den); used for canonical "smallest" choices.
inline Int heightOf(const Rational& r) {
    Int n = abs(r.get_num());
    return n > r.get_den() ? n : Int(r.get_den());
}

inline Rational powRational(const Rational& base, unsigned long e) {
    Rational acc(1);
    Rational b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// "p" or "p/q" with gcd(p,q)=1 and q>1; anything else is rejected.
Rational parseRationalToken(const std::string& tok);
std::string rationalToString(const Rational& r);

} // namespace framelat
