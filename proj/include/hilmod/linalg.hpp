#pragma once

// Dense exact linear algebra over a field T (Rational or GaussRat).
// Row reduction is Gauss-Jordan with the first nonzero entry as pivot, so
// outputs are deterministic for a given column order.

#include "errors.hpp"
#include "scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilmod {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = rows[r].at(c);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const
    {
        return std::vector<T>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }

    void append_row(const std::vector<T>& v)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = v.size();
        if (v.size() != cols_)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "row of length " + std::to_string(v.size()));
        a_.insert(a_.end(), v.begin(), v.end());
        ++rows_;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix adjoint() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = conj((*this)(r, c));
        return t;
    }

    Matrix conjugate() const
    {
        Matrix t(*this);
        for (auto& x : t.a_)
            x = conj(x);
        return t;
    }

    bool is_hermitian() const
    {
        if (rows_ != cols_)
            return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r; c < cols_; ++c)
                if ((*this)(r, c) != conj((*this)(c, r)))
                    return false;
        return true;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!hilmod::is_zero(x))
                return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "matrix product shapes");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (hilmod::is_zero(x))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size())
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "matrix-vector shapes");
        std::vector<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                r[i] += a(i, k) * v[k];
        return r;
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    void check_same(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                    "matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

template <class T>
struct RrefResult {
    Matrix<T> r;                      // reduced row echelon form, zero rows kept at bottom
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan. If `aug` is given it receives the same row operations.
template <class T>
RrefResult<T> rref(Matrix<T> m, Matrix<T>* aug = nullptr)
{
    RrefResult<T> out;
    std::size_t row = 0;
    const std::size_t R = m.rows(), C = m.cols();
    auto swap_rows = [](Matrix<T>& x, std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < x.cols(); ++c)
            std::swap(x(a, c), x(b, c));
    };
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t p = row;
        while (p < R && is_zero(m(p, col)))
            ++p;
        if (p == R)
            continue;
        if (p != row) {
            swap_rows(m, p, row);
            if (aug)
                swap_rows(*aug, p, row);
        }
        T inv = T(1) / m(row, col);
        for (std::size_t c = col; c < C; ++c)
            m(row, c) *= inv;
        if (aug)
            for (std::size_t c = 0; c < aug->cols(); ++c)
                (*aug)(row, c) *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || is_zero(m(r, col)))
                continue;
            T f = m(r, col);
            for (std::size_t c = col; c < C; ++c)
                if (!is_zero(m(row, c)))
                    m(r, c) -= f * m(row, c);
            if (aug)
                for (std::size_t c = 0; c < aug->cols(); ++c)
                    if (!is_zero((*aug)(row, c)))
                        (*aug)(r, c) -= f * (*aug)(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.r = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m)
{
    return rref(m).rank();
}

/// Basis of {x : M x = 0}, one vector per free column (that entry 1, other free entries 0).
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m)
{
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k)
            v[rr.pivots[k]] = -rr.r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with A x = b (free variables set to 0), or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b)
{
    if (b.size() != a.rows())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "right-hand side length");
    Matrix<T> rhs(a.rows(), 1);
    for (std::size_t r = 0; r < b.size(); ++r)
        rhs(r, 0) = b[r];
    auto rr = rref(a, &rhs);
    for (std::size_t r = rr.rank(); r < a.rows(); ++r)
        if (!is_zero(rhs(r, 0)))
            return std::nullopt;
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        x[rr.pivots[k]] = rhs(k, 0);
    return x;
}

/// Exact inverse; nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a)
{
    if (a.rows() != a.cols())
        throw PreconditionError(PreconditionError::Kind::dimension_mismatch,
                                "inverse of a non-square matrix");
    Matrix<T> id = Matrix<T>::identity(a.rows());
    auto rr = rref(a, &id);
    if (rr.rank() != a.rows())
        return std::nullopt;
    return id;
}

/// Pivots of the symmetric elimination A = L D L* without row exchanges.
/// A Hermitian matrix is positive definite iff every pivot is a positive real.
template <class T>
std::vector<T> ldl_pivots(Matrix<T> a)
{
    std::vector<T> d;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        T p = a(k, k);
        d.push_back(p);
        if (is_zero(p))
            break;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k)))
                continue;
            T f = a(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

template <class T>
bool is_positive_definite(const Matrix<T>& a)
{
    if (!a.is_hermitian())
        return false;
    auto d = ldl_pivots(a);
    if (d.size() != a.rows())
        return false;
    for (const auto& p : d)
        if (!is_positive_real(p))
            return false;
    return true;
}

} // namespace hilmod
