#include "framelat/contfrac.hpp"

#include <map>
#include <tuple>

namespace framelat {

namespace {

Int floorDiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor((p + sqrt(dd)) / q) for non-square dd > 0, q != 0.
Int floorSurd(const Int& p, const Int& dd, const Int& q) {
    Int s = isqrt(dd);
    if (q > 0) return floorDiv(p + s, q);
    // (p + sqrt(dd))/q = -(p + sqrt(dd))/(-q); floor(-y) = -floor(y) - 1
    // for irrational y.
    return -floorDiv(p + s, -q) - 1;
}

ContinuedFraction expandRational(const Rational& x) {
    ContinuedFraction cf;
    Int p = x.get_num(), q = x.get_den();
    cf.integerPart = floorDiv(p, q);
    Int rem = p - cf.integerPart * q;
    // Euclid: x = a0 + rem/q, continue on q/rem.
    p = q;
    q = rem;
    while (q != 0) {
        Int a = floorDiv(p, q);
        cf.preperiod.push_back(a);
        Int r = p - a * q;
        p = q;
        q = r;
    }
    return cf;
}

} // namespace

Int ContinuedFraction::quotient(std::size_t m) const {
    if (m == 0) return integerPart;
    --m;
    if (m < preperiod.size()) return preperiod[m];
    m -= preperiod.size();
    if (period.empty()) throw ValidationError("finite continued fraction has no quotient at that index");
    return period[m % period.size()];
}

ContinuedFraction cfExpand(const QuadScalar& x) {
    if (x.isRational()) return expandRational(x.asRational());

    // Surd state (P + sqrt(DD)) / Q with the classical invariant Q | DD - P^2.
    // Clear denominators: x = (A + B sqrt(d)) / C with integers A, B, C, then
    // fold B into the radicand. B < 0 flips the sign of both A and C.
    const Rational& a = x.rationalPart();
    const Rational& b = x.surdPart();
    Int c = lcmOf(a.get_den(), b.get_den());
    Int na = a.get_num() * (c / a.get_den());
    Int nb = b.get_num() * (c / b.get_den());
    Int p, q, dd;
    if (nb > 0) {
        p = na;
        q = c;
    } else {
        p = -na;
        q = -c;
    }
    dd = nb * nb * Int(x.discriminant());

    if ((dd - p * p) % q != 0) {
        // Scale by |Q| to establish the divisibility invariant.
        Int aq = abs(q);
        p *= aq;
        dd *= aq * aq;
        q *= aq;
    }

    ContinuedFraction cf;
    cf.integerPart = floorSurd(p, dd, q);
    p = cf.integerPart * q - p;  // state after the first step: 1/(x - a0) = (P' + sqrt(DD))/Q'
    q = (dd - p * p) / q;

    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::vector<Int> quots;
    while (true) {
        auto key = std::make_pair(p, q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            cf.preperiod.assign(quots.begin(), quots.begin() + static_cast<long>(it->second));
            cf.period.assign(quots.begin() + static_cast<long>(it->second), quots.end());
            break;
        }
        seen.emplace(key, quots.size());
        Int aq = floorSurd(p, dd, q);
        quots.push_back(aq);
        Int pNext = aq * q - p;
        if ((dd - pNext * pNext) % q != 0) throw InternalError("surd recurrence lost divisibility invariant");
        Int qNext = (dd - pNext * pNext) / q;
        p = pNext;
        q = qNext;
    }
    return cf;
}

std::pair<Int, Int> ConvergentStream::next() {
    if (exhausted()) throw ValidationError("convergent stream exhausted");
    Int a = cf_.quotient(m_);
    Int p = a * pPrev_ + pPrev2_;
    Int q = a * qPrev_ + qPrev2_;
    pPrev2_ = pPrev_;
    qPrev2_ = qPrev_;
    pPrev_ = p;
    qPrev_ = q;
    ++m_;
    return {p, q};
}

bool ConvergentStream::exhausted() const {
    return cf_.period.empty() && m_ > cf_.preperiod.size();
}

} // namespace framelat
