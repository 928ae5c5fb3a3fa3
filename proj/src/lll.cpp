#include "framelat/lll.hpp"

#include <vector>

#include "framelat/ldl.hpp"

namespace framelat {

namespace {

struct Gso {
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> bstar;
};

Gso computeGso(const RatMatrix& b) {
    const std::size_t n = b.rows();
    Gso g;
    g.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    g.bstar.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rational v = b(i, j);
            for (std::size_t l = 0; l < j; ++l) v -= g.mu[j][l] * g.mu[i][l] * g.bstar[l];
            if (sgn(g.bstar[j]) <= 0) throw ValidationError("lll_reduce: Gram matrix is not positive definite");
            g.mu[i][j] = v / g.bstar[j];
        }
        Rational s = b(i, i);
        for (std::size_t l = 0; l < i; ++l) s -= g.mu[i][l] * g.mu[i][l] * g.bstar[l];
        if (sgn(s) <= 0) throw ValidationError("lll_reduce: Gram matrix is not positive definite");
        g.bstar[i] = s;
    }
    return g;
}

// Basis change b_dst -= r * b_src expressed on the Gram matrix (congruence)
// and on the accumulated transform.
void gramColumnOp(RatMatrix& b, IntMatrix& u, std::size_t dst, std::size_t src, const Int& r) {
    if (r == 0) return;
    Rational rr(r);
    for (std::size_t j = 0; j < b.cols(); ++j) b(dst, j) -= rr * b(src, j);
    for (std::size_t i = 0; i < b.rows(); ++i) b(i, dst) -= rr * b(i, src);
    for (std::size_t i = 0; i < u.rows(); ++i) u(i, dst) -= r * u(i, src);
}

void gramSwap(RatMatrix& b, IntMatrix& u, std::size_t x, std::size_t y) {
    b.swapRows(x, y);
    b.swapCols(x, y);
    u.swapCols(x, y);
}

} // namespace

LllResult lllReduce(const RatMatrix& gram, const Rational& delta) {
    if (!(delta > Rational(1, 4) && delta < Rational(1)))
        throw ValidationError("lll_reduce: delta must lie in (1/4, 1)");
    ldlDecomposeOrThrow(gram);  // reject non-PD input up front

    const std::size_t n = gram.rows();
    LllResult res;
    res.reducedGram = gram;
    res.transform = IntMatrix::identity(n);
    if (n <= 1) return res;

    RatMatrix& b = res.reducedGram;
    IntMatrix& u = res.transform;

    std::size_t k = 1;
    Gso g = computeGso(b);
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            Int r = roundNearest(g.mu[k][jj]);
            if (r != 0) {
                gramColumnOp(b, u, k, jj, r);
                g = computeGso(b);
            }
        }
        Rational lhs = g.bstar[k];
        Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bstar[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            gramSwap(b, u, k, k - 1);
            g = computeGso(b);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return res;
}

} // namespace framelat
