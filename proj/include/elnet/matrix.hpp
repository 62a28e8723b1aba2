#pragma once

#include "elnet/errors.hpp"
#include "elnet/mpoly.hpp"
#include "elnet/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace elnet {

// Dense row-major matrix over a commutative ring R (Rational or MPoly).
template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, R(0)) {}
    Matrix(std::initializer_list<std::initializer_list<R>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != c_) throw ShapeError("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    R& at(std::size_t i, std::size_t j) {
        if (i >= r_ || j >= c_) throw IndexError("matrix index out of range");
        return (*this)(i, j);
    }
    const R& at(std::size_t i, std::size_t j) const {
        if (i >= r_ || j >= c_) throw IndexError("matrix index out of range");
        return (*this)(i, j);
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > r_ || c0 + nc > c_) throw ShapeError("block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const R& s, Matrix m) {
        for (auto& x : m.a_) x = s * x;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_)
            throw ShapeError("mat_mul: " + a.shape() + " times " + b.shape());
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const R& x = a(i, k);
                if (x == R(0)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }

private:
    void same_shape(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw ShapeError("shape mismatch " + shape() + " vs " + o.shape());
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<R> a_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<MPoly>;

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) { return a * b; }

template <class R>
Matrix<R> hcat(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows()) throw ShapeError("hcat: row mismatch");
    Matrix<R> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

// n x n identity with rows/cols i,j (1-based, i<j) replaced by x.
template <class R>
Matrix<R> embed_block(const Matrix<R>& x, std::size_t i, std::size_t j, std::size_t n) {
    if (x.rows() != 2 || x.cols() != 2) throw ShapeError("embed_block needs a 2x2 block");
    if (i < 1 || i >= j || j > n)
        throw IndexError("embed_block: need 1 <= i < j <= n, got i=" + std::to_string(i) +
                         " j=" + std::to_string(j) + " n=" + std::to_string(n));
    auto m = Matrix<R>::identity(n);
    --i; --j;
    m(i, i) = x(0, 0);
    m(i, j) = x(0, 1);
    m(j, i) = x(1, 0);
    m(j, j) = x(1, 1);
    return m;
}

// Left-multiplies m in place by embed_block(x, i, j, n) touching only rows i and j.
template <class R>
void apply_block_left(Matrix<R>& m, const Matrix<R>& x, std::size_t i, std::size_t j) {
    --i; --j;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        R a = m(i, c), b = m(j, c);
        m(i, c) = x(0, 0) * a + x(0, 1) * b;
        m(j, c) = x(1, 0) * a + x(1, 1) * b;
    }
}

template <class R>
Matrix<R> convert(const Matrix<Rational>& m) {
    Matrix<R> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = R(m(i, j));
    return r;
}

template <class R>
std::string to_string(const Matrix<R>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ' ';
            s += m(i, j).str();
        }
        s += '\n';
    }
    return s;
}

// Field operations over Rational.
struct Rref {
    QMatrix matrix;
    std::size_t rank;
};

Rref rref(const QMatrix& a);
std::size_t rank(const QMatrix& a);
Rational det(const QMatrix& a);
QMatrix mat_inverse(const QMatrix& a);
// keep is a 0-based index set; the complement block must be invertible.
QMatrix schur_complement(const QMatrix& m, const std::vector<std::size_t>& keep);
bool row_space_equal(const QMatrix& a, const QMatrix& b);

enum class Structured { S, S_tilde, T, Omega, w0, Id0, Id1 };
// T is built at size n (n even, shuffling n/2 + n/2); Id0 is (n-1) x n; Id1 is n x (n-1).
QMatrix structured(Structured kind, std::size_t n);

QMatrix parse_matrix(const std::string& text);

}  // namespace elnet
