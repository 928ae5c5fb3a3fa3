#pragma once

#include <cstddef>
#include <vector>

#include "framelat/matrix.hpp"

namespace framelat {

template <class T>
struct LinearSolution {
    std::size_t rank = 0;
    bool consistent = true;         // meaningful only when a right-hand side was given
    Matrix<T> particular;           // one solution per RHS column (cols = B.cols)
    Matrix<T> nullspaceBasis;       // columns span ker(M); empty when kernel trivial
};

// Gauss-Jordan over an exact field. Pivot choice is the first nonzero entry
// in the column, so results are deterministic.
template <class T>
std::pair<Matrix<T>, std::vector<std::size_t>> reducedRowEchelon(Matrix<T> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == T(0)) ++p;
        if (p == m.rows()) continue;
        m.swapRows(row, p);
        T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == T(0)) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rankOf(const Matrix<T>& m) {
    return reducedRowEchelon(m).second.size();
}

// Rank plus, when B is nonempty, the full affine solution set of Mx = B:
// particular solution and a nullspace basis, or consistent=false.
template <class T>
LinearSolution<T> rankSolve(const Matrix<T>& m, const Matrix<T>& b = Matrix<T>()) {
    const std::size_t nrhs = b.cols();
    if (nrhs > 0 && b.rows() != m.rows()) throw ValidationError("rank_solve: RHS row count mismatch");

    Matrix<T> aug(m.rows(), m.cols() + nrhs);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < nrhs; ++j) aug(i, m.cols() + j) = b(i, j);
    }
    auto [r, pivots] = reducedRowEchelon(std::move(aug));

    LinearSolution<T> sol;
    // Pivots landing in the RHS block mean an inconsistent row.
    std::vector<std::size_t> colPivots;
    for (std::size_t p : pivots) {
        if (p < m.cols())
            colPivots.push_back(p);
        else
            sol.consistent = false;
    }
    sol.rank = colPivots.size();

    std::vector<bool> isPivot(m.cols(), false);
    for (std::size_t p : colPivots) isPivot[p] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!isPivot[j]) freeCols.push_back(j);

    sol.nullspaceBasis = Matrix<T>(m.cols(), freeCols.size());
    for (std::size_t f = 0; f < freeCols.size(); ++f) {
        sol.nullspaceBasis(freeCols[f], f) = T(1);
        for (std::size_t pr = 0; pr < colPivots.size(); ++pr)
            sol.nullspaceBasis(colPivots[pr], f) = -r(pr, freeCols[f]);
    }

    if (nrhs > 0 && sol.consistent) {
        sol.particular = Matrix<T>(m.cols(), nrhs);
        for (std::size_t pr = 0; pr < colPivots.size(); ++pr)
            for (std::size_t j = 0; j < nrhs; ++j) sol.particular(colPivots[pr], j) = r(pr, m.cols() + j);
    }
    return sol;
}

} // namespace framelat
