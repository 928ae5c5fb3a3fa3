#include "framelat/intlattice.hpp"

#include <cstdlib>

#include "framelat/linsolve.hpp"

namespace framelat {

namespace {

Int floorDiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

int cmpAbs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

void negateColumn(IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

// col[dst] -= q * col[src]
void columnAxpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void rowAxpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

} // namespace

ColumnHnf hnfColumns(const IntMatrix& a) {
    ColumnHnf res;
    res.h = a;
    res.u = IntMatrix::identity(a.cols());
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    const std::size_t nrows = a.rows(), ncols = a.cols();

    std::size_t r = 0;  // next pivot column slot
    for (std::size_t i = 0; i < nrows && r < ncols; ++i) {
        // Euclid across columns r..ncols-1 until row i has a single nonzero there.
        while (true) {
            std::size_t best = ncols;
            for (std::size_t j = r; j < ncols; ++j) {
                if (h(i, j) == 0) continue;
                if (best == ncols || cmpAbs(h(i, j), h(i, best)) < 0) best = j;
            }
            if (best == ncols) break;  // row i is zero on the active columns
            h.swapCols(r, best);
            u.swapCols(r, best);
            bool clean = true;
            for (std::size_t j = r + 1; j < ncols; ++j) {
                if (h(i, j) == 0) continue;
                Int q = floorDiv(h(i, j), h(i, r));
                columnAxpy(h, j, r, q);
                columnAxpy(u, j, r, q);
                if (h(i, j) != 0) clean = false;  // remainder left; another Euclid round
            }
            if (clean) break;
        }
        if (h(i, r) == 0) continue;  // no pivot in this row
        if (h(i, r) < 0) {
            negateColumn(h, r);
            negateColumn(u, r);
        }
        // Reduce earlier pivot columns against the new pivot: 0 <= h(i,j) < h(i,r).
        for (std::size_t j = 0; j < r; ++j) {
            Int q = floorDiv(h(i, j), h(i, r));
            columnAxpy(h, j, r, q);
            columnAxpy(u, j, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

SmithForm smithNormalForm(const IntMatrix& a) {
    SmithForm f;
    f.s = a;
    const std::size_t m = a.rows(), n = a.cols();
    f.v = IntMatrix::identity(m);
    f.vInverse = IntMatrix::identity(m);
    f.w = IntMatrix::identity(n);
    IntMatrix& s = f.s;

    auto swapRowsTracked = [&](std::size_t x, std::size_t y) {
        s.swapRows(x, y);
        f.v.swapRows(x, y);
        f.vInverse.swapCols(x, y);
    };
    auto swapColsTracked = [&](std::size_t x, std::size_t y) {
        s.swapCols(x, y);
        f.w.swapCols(x, y);
    };
    auto rowOp = [&](std::size_t dst, std::size_t src, const Int& q) {
        rowAxpy(s, dst, src, q);
        rowAxpy(f.v, dst, src, q);
        // (I - q e_dst e_src^T)^-1 = I + q e_dst e_src^T; right-multiplying
        // the inverse adds q * (col dst) to col src.
        if (q != 0)
            for (std::size_t i = 0; i < m; ++i) f.vInverse(i, src) += q * f.vInverse(i, dst);
    };
    auto colOp = [&](std::size_t dst, std::size_t src, const Int& q) {
        columnAxpy(s, dst, src, q);
        columnAxpy(f.w, dst, src, q);
    };
    auto negateRowTracked = [&](std::size_t x) {
        for (std::size_t j = 0; j < n; ++j) s(x, j) = -s(x, j);
        for (std::size_t j = 0; j < m; ++j) f.v(x, j) = -f.v(x, j);
        for (std::size_t i = 0; i < m; ++i) f.vInverse(i, x) = -f.vInverse(i, x);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // Smallest nonzero entry of the trailing block moves to (t, t).
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (s(i, j) == 0) continue;
                if (bi == m || cmpAbs(s(i, j), s(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == m) break;  // trailing block is zero
        swapRowsTracked(t, bi);
        swapColsTracked(t, bj);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                Int q = floorDiv(s(i, t), s(t, t));
                rowOp(i, t, q);
                if (s(i, t) != 0) {  // smaller remainder becomes the pivot
                    swapRowsTracked(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                Int q = floorDiv(s(t, j), s(t, t));
                colOp(j, t, q);
                if (s(t, j) != 0) {
                    swapColsTracked(t, j);
                    again = true;
                }
            }
        }
        if (s(t, t) < 0) negateRowTracked(t);
        // Divisibility: pivot must divide every remaining entry.
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n && !fixed; ++j) {
                if (s(i, j) % s(t, t) == 0) continue;
                rowOp(t, i, Int(-1));  // fold row i into row t, then redo the pivot
                fixed = true;
            }
        if (!fixed) ++t;
    }
    return f;
}

IntMatrix integerKernel(const RatMatrix& m) {
    // Row scaling preserves the kernel; then the last columns of the HNF
    // transform are a saturated basis (U unimodular makes saturation automatic).
    IntMatrix scaled(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcmOf(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * Rational(l);
            scaled(i, j) = v.get_num();
        }
    }
    ColumnHnf hnf = hnfColumns(scaled);
    const std::size_t dim = m.cols() - hnf.rank;
    IntMatrix kernel(m.cols(), dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t src = hnf.rank + c;
        bool flip = false;
        for (std::size_t i = 0; i < m.cols(); ++i) {
            if (hnf.u(i, src) != 0) {
                flip = hnf.u(i, src) < 0;
                break;
            }
        }
        for (std::size_t i = 0; i < m.cols(); ++i) kernel(i, c) = flip ? Int(-hnf.u(i, src)) : hnf.u(i, src);
    }
    return kernel;
}

IntMatrix hnfComplete(const IntMatrix& k, std::size_t n) {
    if (k.cols() == 0) return IntMatrix::identity(n);
    if (k.rows() != n) throw ValidationError("hnf_complete: K row count differs from ambient dimension");
    SmithForm f = smithNormalForm(k);
    const std::size_t r = k.cols();
    for (std::size_t i = 0; i < r; ++i) {
        if (i >= f.s.rows() || f.s(i, i) == 0)
            throw ValidationError("hnf_complete: columns of K are not Z-linearly independent");
        if (f.s(i, i) != 1)
            throw ValidationError("hnf_complete: K is not saturated (invariant factor " +
                                  f.s(i, i).get_str() + ")");
    }
    // V K W = [I_r; 0]  =>  K W = first r columns of V^-1, so V^-1 completes K.
    return f.vInverse;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    RatMatrix a = toRatMatrix(m);
    Rational det(1);
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) return Int(0);
        if (p != col) {
            a.swapRows(col, p);
            det = -det;
        }
        det *= a(col, col);
        Rational inv = Rational(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rational fct = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= fct * a(col, j);
        }
    }
    if (!isInteger(det)) throw InternalError("integer determinant came out fractional");
    return det.get_num();
}

} // namespace framelat
