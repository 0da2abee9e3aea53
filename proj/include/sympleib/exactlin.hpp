#pragma once

// Dense exact linear algebra over Q: matrices, row reduction, kernels, linear
// solves and a lattice of subspaces with canonical (RREF) representatives.

#include "sympleib/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympleib {

using Vector = std::vector<Rational>;

inline Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Vector zero_vector(std::size_t n)
{
    return Vector(n, Rational(0));
}

inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline void check_same_size(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw std::invalid_argument(std::string("dimension mismatch in ") + what + ": " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

inline Vector operator+(const Vector& a, const Vector& b)
{
    check_same_size(a.size(), b.size(), "vector sum");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b)
{
    check_same_size(a.size(), b.size(), "vector difference");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline Vector operator-(const Vector& a)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline Vector operator*(const Rational& s, const Vector& a)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

inline Rational dot(const Vector& a, const Vector& b)
{
    check_same_size(a.size(), b.size(), "dot product");
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            r += a[i] * b[i];
    return r;
}

/// Row-major dense rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            check_same_size(rows[i].size(), cols, "Matrix::from_rows");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            check_same_size(cols[j].size(), rows, "Matrix::from_columns");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row_span(std::size_t i) const
    {
        return {data_.data() + i * cols_, cols_};
    }
    Vector row(std::size_t i) const
    {
        auto s = row_span(i);
        return Vector(s.begin(), s.end());
    }
    Vector column(std::size_t j) const
    {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const { return sympleib::is_zero(std::span<const Rational>(data_)); }
    bool is_square() const { return rows_ == cols_; }

    Vector apply(const Vector& v) const
    {
        check_same_size(v.size(), cols_, "matrix-vector product");
        Vector r = zero_vector(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (v[j] != 0 && (*this)(i, j) != 0)
                    r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        check_same_size(a.cols_, b.rows_, "matrix product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i)
            r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i)
            r.data_[i] -= b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a)
    {
        Matrix r = a;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    friend Matrix operator*(const Rational& s, const Matrix& a)
    {
        Matrix r = a;
        for (auto& x : r.data_)
            x *= s;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<Rational>& entries() const { return data_; }

private:
    void check_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b)
{
    return a * b - b * a;
}

/// Row reduction in place; returns the pivot columns in increasing order.
inline std::vector<std::size_t> rref_in_place(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline Matrix rref(Matrix m)
{
    rref_in_place(m);
    return m;
}

inline std::size_t rank(Matrix m)
{
    return rref_in_place(m).size();
}

inline Rational determinant(Matrix m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0)
                continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref_in_place(aug);
    if (n == 0)
        return Matrix(0, 0);
    if (piv.size() < n || piv[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

/// A linear subspace of Q^n stored by its canonical basis: the RREF of any
/// spanning set with zero rows dropped. Equal subspaces have equal bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors)
    {
        return Subspace(Matrix::from_rows(ambient, vectors));
    }
    /// Row space of m.
    explicit Subspace(Matrix m) : ambient_(m.cols())
    {
        auto piv = rref_in_place(m);
        basis_ = Matrix(piv.size(), ambient_);
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j)
                basis_(i, j) = m(i, j);
        pivots_ = std::move(piv);
    }
    static Subspace full(std::size_t n) { return Subspace(Matrix::identity(n)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const
    {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < dim(); ++i)
            out.push_back(basis_.row(i));
        return out;
    }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v reduced against the basis; zero iff v lies in the subspace.
    Vector residual(Vector v) const
    {
        check_same_size(v.size(), ambient_, "Subspace::residual");
        for (std::size_t i = 0; i < dim(); ++i) {
            Rational f = v[pivots_[i]];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (basis_(i, j) != 0)
                    v[j] -= f * basis_(i, j);
        }
        return v;
    }
    bool contains(const Vector& v) const { return sympleib::is_zero(residual(v)); }
    bool contains(const Subspace& s) const
    {
        check_same_size(s.ambient_, ambient_, "Subspace::contains");
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (!contains(s.basis_.row(i)))
                return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
inline Subspace kernel(const Matrix& m)
{
    Matrix r = m;
    auto piv = rref_in_place(r);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(n);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

/// Subspace orthogonal to s under the standard dot product (annihilator).
inline Subspace dot_complement(const Subspace& s)
{
    return kernel(s.basis());
}

inline Subspace sum(const Subspace& a, const Subspace& b)
{
    check_same_size(a.ambient_dim(), b.ambient_dim(), "subspace sum");
    auto rows = a.basis_vectors();
    auto rb = b.basis_vectors();
    rows.insert(rows.end(), rb.begin(), rb.end());
    return Subspace::span(a.ambient_dim(), rows);
}

/// a ∩ b as the common kernel of both annihilators.
inline Subspace intersect(const Subspace& a, const Subspace& b)
{
    check_same_size(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
    auto na = dot_complement(a).basis_vectors();
    auto nb = dot_complement(b).basis_vectors();
    na.insert(na.end(), nb.begin(), nb.end());
    return kernel(Matrix::from_rows(a.ambient_dim(), na));
}

struct SolveResult {
    std::optional<Vector> particular;
    Subspace kernel;
    bool solvable() const { return particular.has_value(); }
};

/// One particular solution of m x = rhs (free variables set to zero) plus ker m.
inline SolveResult solve(const Matrix& m, const Vector& rhs)
{
    check_same_size(rhs.size(), m.rows(), "solve");
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n) = rhs[i];
    }
    auto piv = rref_in_place(aug);
    SolveResult out{std::nullopt, kernel(m)};
    if (!piv.empty() && piv.back() == n)
        return out;
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = aug(i, n);
    out.particular = std::move(x);
    return out;
}

/// Greedy extension of `base` by rows of `candidates` (in order) not already
/// spanned; returns the chosen rows. Used to pick deterministic complements.
inline std::vector<Vector> complement_rows(const Subspace& base, const std::vector<Vector>& candidates)
{
    std::vector<Vector> chosen;
    Subspace acc = base;
    for (const auto& c : candidates) {
        if (acc.contains(c))
            continue;
        chosen.push_back(c);
        acc = sum(acc, Subspace::span(base.ambient_dim(), {c}));
    }
    return chosen;
}

} // namespace sympleib
