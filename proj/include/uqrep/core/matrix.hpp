#pragma once

// Dense matrices and exact Gaussian elimination over a field type T.
// T is described by a FieldOps<T> specialisation (zero test, inverse,
// conjugation, neutral elements shaped like a given value).

#include "uqrep/core/rational.hpp"

#include <cstddef>
#include <vector>

namespace uqrep {

template <class T>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational inv(const Rational& x) { return 1 / x; }
    static Rational conj(const Rational& x) { return x; }
    static Rational zero_like(const Rational&) { return 0; }
    static Rational one_like(const Rational&) { return 1; }
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill = T()) : rows_(r), cols_(c), a_(r * c, fill) {}

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n, FieldOps<T>::zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = FieldOps<T>::conj((*this)(i, j));
        return r;
    }
    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix r(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) r(i, j) = (*this)(rs[i], cs[j]);
        return r;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!FieldOps<T>::is_zero(x)) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& a = x(i, k);
                if (FieldOps<T>::is_zero(a)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    if (!FieldOps<T>::is_zero(y(k, j))) r(i, j) = r(i, j) + a * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }
    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.a_) v = v * c;
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!FieldOps<T>::is_zero(x.a_[i] - y.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a) {
    using F = FieldOps<T>;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && F::is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        T inv = F::inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!F::is_zero(a(r, j))) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || F::is_zero(a(i, c))) continue;
            T f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!F::is_zero(a(r, j))) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
    using F = FieldOps<T>;
    // forward elimination only
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && F::is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        T inv = F::inv(a(r, c));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (F::is_zero(a(i, c))) continue;
            T f = a(i, c) * inv;
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!F::is_zero(a(r, j))) a(i, j) = a(i, j) - f * a(r, j);
        }
        ++r;
    }
    return r;
}

/// Basis of the right null space {x : a x = 0}, as columns of the result.
template <class T>
Matrix<T> kernel(Matrix<T> a, const T& one) {
    using F = FieldOps<T>;
    auto piv = row_reduce(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::size_t nfree = a.cols() - piv.size();
    Matrix<T> k(a.cols(), nfree, F::zero_like(one));
    std::size_t col = 0;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        k(f, col) = one;
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (!F::is_zero(a(r, f))) k(piv[r], col) = -a(r, f);
        ++col;
    }
    return k;
}

template <class T>
T determinant(Matrix<T> a, const T& one) {
    using F = FieldOps<T>;
    const std::size_t n = a.rows();
    T det = one;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && F::is_zero(a(p, c))) ++p;
        if (p == n) return F::zero_like(one);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det = det * a(c, c);
        T inv = F::inv(a(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (F::is_zero(a(i, c))) continue;
            T f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!F::is_zero(a(c, j))) a(i, j) = a(i, j) - f * a(c, j);
        }
    }
    return det;
}

/// Solves a x = b for square invertible a; throws InternalError if singular.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t n = a.rows();
    Matrix<T> aug(n, n + b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    auto piv = row_reduce(aug);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw InternalError("singular system");
    Matrix<T> x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a, const T& one) {
    return solve(a, Matrix<T>::identity(a.rows(), one));
}

}  // namespace uqrep
