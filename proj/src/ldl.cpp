#include "framelat/ldl.hpp"

namespace framelat {

LdlResult ldlDecompose(const RatMatrix& gram) {
    if (!gram.isSymmetric()) throw ValidationError("ldl_decompose: matrix not symmetric");
    const std::size_t n = gram.rows();
    LdlResult res;
    res.l = RatMatrix::identity(n);
    res.d.assign(n, Rational(0));

    for (std::size_t j = 0; j < n; ++j) {
        Rational dj = gram(j, j);
        for (std::size_t k = 0; k < j; ++k) dj -= res.l(j, k) * res.l(j, k) * res.d[k];
        if (sgn(dj) <= 0) {
            res.positiveDefinite = false;
            res.failingMinor = j + 1;
            return res;
        }
        res.d[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational v = gram(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= res.l(i, k) * res.l(j, k) * res.d[k];
            res.l(i, j) = v / dj;
        }
    }
    res.positiveDefinite = true;
    return res;
}

LdlResult ldlDecomposeOrThrow(const RatMatrix& gram) {
    LdlResult res = ldlDecompose(gram);
    if (!res.positiveDefinite)
        throw ValidationError("matrix is not positive definite (leading minor " +
                              std::to_string(res.failingMinor) + ")");
    return res;
}

} // namespace framelat
