#pragma once

#include <cstddef>
#include <vector>

#include "framelat/quad.hpp"
#include "framelat/rational.hpp"

namespace framelat {

// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw InternalError("matrix product shape mismatch");
        Matrix r(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t l = 0; l < cols_; ++l) {
                const T& a = (*this)(i, l);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    if (other(l, j) == T(0)) continue;
                    r(i, j) += a * other(l, j);
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) throw InternalError("matrix sum shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    std::vector<T> timesVector(const std::vector<T>& v) const {
        if (v.size() != cols_) throw InternalError("matrix-vector shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    bool isSymmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool isZero() const {
        for (const T& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    Matrix submatrix(const std::vector<std::size_t>& rowIdx, const std::vector<std::size_t>& colIdx) const {
        Matrix r(rowIdx.size(), colIdx.size());
        for (std::size_t i = 0; i < rowIdx.size(); ++i)
            for (std::size_t j = 0; j < colIdx.size(); ++j) r(i, j) = (*this)(rowIdx[i], colIdx[j]);
        return r;
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void swapRows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swapCols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using QuadMatrix = Matrix<QuadScalar>;
using IntMatrix = Matrix<Int>;

inline QuadMatrix toQuadMatrix(const RatMatrix& m) {
    QuadMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = QuadScalar(m(i, j));
    return r;
}

// Exact rational view of a matrix known to have rational entries; throws otherwise.
inline RatMatrix toRatMatrix(const QuadMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).asRational();
    return r;
}

inline RatMatrix toRatMatrix(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline bool allEntriesRational(const QuadMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).isRational()) return false;
    return true;
}

// Least D > 0 with D*M integral.
inline Int denominatorLcm(const RatMatrix& m) {
    Int l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcmOf(l, m(i, j).get_den());
    return l;
}

inline IntMatrix scaleToIntegers(const RatMatrix& m, Int& scaleOut) {
    scaleOut = denominatorLcm(m);
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * Rational(scaleOut);
            r(i, j) = v.get_num();
        }
    return r;
}

} // namespace framelat
