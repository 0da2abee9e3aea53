#pragma once

// Finite-dimensional algebras given by structure constants, the identity
// predicates (left/right Leibniz, left-symmetric, Lie) and the usual
// constructions: Leibniz ideal, center, ideals, quotients, derivations.

#include "sympleib/exactlin.hpp"
#include "sympleib/report.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympleib {

/// n x n x n array of rationals, used for structure constants, Omega and T.
class Cube {
public:
    Cube() = default;
    explicit Cube(std::size_t n) : n_(n), v_(n * n * n, Rational(0)) {}

    std::size_t size() const { return n_; }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return v_[(i * n_ + j) * n_ + k]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return v_[(i * n_ + j) * n_ + k];
    }
    const std::vector<Rational>& flat() const { return v_; }
    std::vector<Rational>& flat() { return v_; }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const auto& x = (*this)(i, j, k);
                    if (x != (*this)(j, i, k) || x != (*this)(i, k, j))
                        return false;
                }
        return true;
    }

    friend bool operator==(const Cube&, const Cube&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> v_;
};

inline std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e")
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i + 1));
    return out;
}

/// e_i . e_j = sum_k c(i,j,k) e_k
class Algebra {
public:
    Algebra() = default;
    explicit Algebra(std::size_t n) : c_(n), labels_(default_labels(n)) {}
    Algebra(std::size_t n, std::vector<std::string> labels) : c_(n), labels_(std::move(labels))
    {
        if (labels_.size() != n)
            throw std::invalid_argument("label count does not match dimension");
    }

    std::size_t dim() const { return c_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l)
    {
        check_same_size(l.size(), dim(), "Algebra::set_labels");
        labels_ = std::move(l);
    }

    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_(i, j, k); }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
    const Cube& tensor() const { return c_; }

    Vector product(std::size_t i, std::size_t j) const
    {
        Vector v(dim());
        for (std::size_t k = 0; k < dim(); ++k)
            v[k] = c_(i, j, k);
        return v;
    }
    void set_product(std::size_t i, std::size_t j, const Vector& v)
    {
        check_same_size(v.size(), dim(), "Algebra::set_product");
        for (std::size_t k = 0; k < dim(); ++k)
            c_(i, j, k) = v[k];
    }

    bool is_zero() const { return sympleib::is_zero(std::span<const Rational>(c_.flat())); }

    /// Structure constants only; labels are presentation.
    friend bool operator==(const Algebra& a, const Algebra& b) { return a.c_ == b.c_; }

private:
    Cube c_;
    std::vector<std::string> labels_;
};

inline Vector multiply(const Algebra& A, const Vector& u, const Vector& v)
{
    check_same_size(u.size(), A.dim(), "multiply (left factor)");
    check_same_size(v.size(), A.dim(), "multiply (right factor)");
    const std::size_t n = A.dim();
    Vector r = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0)
                continue;
            Rational s = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (A(i, j, k) != 0)
                    r[k] += s * A(i, j, k);
        }
    }
    return r;
}

/// Matrix of L_u : v -> u.v
inline Matrix left_mult(const Algebra& A, const Vector& u)
{
    check_same_size(u.size(), A.dim(), "left_mult");
    const std::size_t n = A.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (A(i, j, k) != 0)
                    m(k, j) += u[i] * A(i, j, k);
    }
    return m;
}

/// Matrix of R_u : v -> v.u
inline Matrix right_mult(const Algebra& A, const Vector& u)
{
    check_same_size(u.size(), A.dim(), "right_mult");
    const std::size_t n = A.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (u[j] == 0)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (A(i, j, k) != 0)
                    m(k, i) += u[j] * A(i, j, k);
    }
    return m;
}

namespace detail {

inline std::vector<Matrix> left_mults(const Algebra& A)
{
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < A.dim(); ++i)
        out.push_back(left_mult(A, unit_vector(A.dim(), i)));
    return out;
}

inline std::vector<Matrix> right_mults(const Algebra& A)
{
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < A.dim(); ++i)
        out.push_back(right_mult(A, unit_vector(A.dim(), i)));
    return out;
}

} // namespace detail

/// u.(v.w) = (u.v).w + v.(u.w); witness (u,v,w)
inline IdentityReport is_left_leibniz(const Algebra& A)
{
    const std::size_t n = A.dim();
    auto L = detail::left_mults(A);
    auto R = detail::right_mults(A);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector d = L[i].apply(A.product(j, k)) - R[k].apply(A.product(i, j)) - L[j].apply(A.product(i, k));
                if (!is_zero(d))
                    return fail("left-leibniz", {i, j, k}, d);
            }
    return pass("left-leibniz");
}

/// (v.w).u = (v.u).w + v.(w.u); witness (u,v,w)
inline IdentityReport is_right_leibniz(const Algebra& A)
{
    const std::size_t n = A.dim();
    auto L = detail::left_mults(A);
    auto R = detail::right_mults(A);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector d = R[i].apply(A.product(j, k)) - R[k].apply(A.product(j, i)) - L[j].apply(A.product(k, i));
                if (!is_zero(d))
                    return fail("right-leibniz", {i, j, k}, d);
            }
    return pass("right-leibniz");
}

inline IdentityReport is_symmetric_leibniz(const Algebra& A)
{
    auto l = is_left_leibniz(A);
    if (!l.holds)
        return l;
    auto r = is_right_leibniz(A);
    if (!r.holds)
        return r;
    return pass("symmetric-leibniz");
}

/// (u.v).w - u.(v.w) = (v.u).w - v.(u.w); witness (u,v,w)
inline IdentityReport is_left_symmetric(const Algebra& A)
{
    const std::size_t n = A.dim();
    auto L = detail::left_mults(A);
    auto R = detail::right_mults(A);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector d = R[k].apply(A.product(i, j)) - L[i].apply(A.product(j, k)) -
                           R[k].apply(A.product(j, i)) + L[j].apply(A.product(i, k));
                if (!is_zero(d))
                    return fail("left-symmetric", {i, j, k}, d);
            }
    return pass("left-symmetric");
}

/// Antisymmetry (witness (i,j)) then Jacobi (witness (i,j,k)).
inline IdentityReport is_lie(const Algebra& A)
{
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector d = A.product(i, j) + A.product(j, i);
            if (!is_zero(d))
                return fail("lie-antisymmetry", {i, j}, d);
        }
    auto L = detail::left_mults(A);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector d = L[i].apply(A.product(j, k)) + L[j].apply(A.product(k, i)) + L[k].apply(A.product(i, j));
                if (!is_zero(d))
                    return fail("lie-jacobi", {i, j, k}, d);
            }
    return pass("lie");
}

/// (commutator part, symmetric part), each half the (anti)symmetrization.
inline std::pair<Algebra, Algebra> split(const Algebra& A)
{
    const std::size_t n = A.dim();
    Algebra br(n, A.labels()), sym(n, A.labels());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                br(i, j, k) = (A(i, j, k) - A(j, i, k)) / 2;
                sym(i, j, k) = (A(i, j, k) + A(j, i, k)) / 2;
            }
    return {br, sym};
}

inline Algebra opposite(const Algebra& A)
{
    const std::size_t n = A.dim();
    Algebra op(n, A.labels());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                op(i, j, k) = A(j, i, k);
    return op;
}

inline Subspace leibniz_ideal(const Algebra& A)
{
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = i; j < A.dim(); ++j)
            gens.push_back(A.product(i, j) + A.product(j, i));
    return Subspace::span(A.dim(), gens);
}

/// Two-sided annihilator {u : u.v = v.u = 0 for all v}.
inline Subspace center(const Algebra& A)
{
    const std::size_t n = A.dim();
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vector l(n), r(n);
            for (std::size_t i = 0; i < n; ++i) {
                l[i] = A(i, j, k);
                r[i] = A(j, i, k);
            }
            rows.push_back(std::move(l));
            rows.push_back(std::move(r));
        }
    return kernel(Matrix::from_rows(n, rows));
}

/// Witness indices: (basis index of A, basis row of s); defect = offending product.
inline IdentityReport ideal_report(const Algebra& A, const Subspace& s, const std::string& name = "ideal")
{
    check_same_size(s.ambient_dim(), A.dim(), "is_ideal");
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vector v = s.basis_vector(r);
        for (std::size_t i = 0; i < A.dim(); ++i) {
            Vector e = unit_vector(A.dim(), i);
            Vector a = multiply(A, e, v);
            if (!s.contains(a))
                return fail(name + "-left", {i, r}, a);
            Vector b = multiply(A, v, e);
            if (!s.contains(b))
                return fail(name + "-right", {i, r}, b);
        }
    }
    return pass(name);
}

inline bool is_ideal(const Algebra& A, const Subspace& s)
{
    return ideal_report(A, s).holds;
}

struct Quotient {
    Algebra algebra;
    Matrix projection;           // q x n: coordinates of the class of v
    std::vector<std::size_t> complement; // standard basis indices spanning the chosen complement
};

/// Class coordinates of v modulo s on the lowest-index non-pivot complement.
inline Matrix quotient_projection(const Subspace& s)
{
    const std::size_t n = s.ambient_dim();
    std::vector<bool> piv(n, false);
    for (auto p : s.pivots())
        piv[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
        if (!piv[i])
            comp.push_back(i);
    Matrix P(comp.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector r = s.residual(unit_vector(n, j));
        for (std::size_t a = 0; a < comp.size(); ++a)
            P(a, j) = r[comp[a]];
    }
    return P;
}

inline Quotient quotient(const Algebra& A, const Subspace& s)
{
    auto rep = ideal_report(A, s);
    if (!rep.holds)
        throw std::invalid_argument("quotient by a subspace that is not an ideal: " + describe(rep));
    Quotient q;
    q.projection = quotient_projection(s);
    std::vector<bool> piv(A.dim(), false);
    for (auto p : s.pivots())
        piv[p] = true;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (!piv[i]) {
            q.complement.push_back(i);
            labels.push_back(A.labels()[i]);
        }
    const std::size_t m = q.complement.size();
    q.algebra = Algebra(m, labels);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            q.algebra.set_product(a, b, q.projection.apply(A.product(q.complement[a], q.complement[b])));
    return q;
}

/// D(u.v) = Du.v + u.Dv on all basis pairs; witness (i,j).
inline IdentityReport is_derivation(const Algebra& A, const Matrix& D)
{
    const std::size_t n = A.dim();
    if (D.rows() != n || D.cols() != n)
        throw std::invalid_argument("derivation matrix has the wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector d = D.apply(A.product(i, j)) - multiply(A, D.column(i), unit_vector(n, j)) -
                       multiply(A, unit_vector(n, i), D.column(j));
            if (!is_zero(d))
                return fail("derivation", {i, j}, d);
        }
    return pass("derivation");
}

/// Basis of Der(A) from the n^3 x n^2 linear system in the entries D(r,s).
inline std::vector<Matrix> derivations(const Algebra& A)
{
    const std::size_t n = A.dim();
    const std::size_t N = n * n;
    Matrix sys(n * n * n, N);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row) {
                for (std::size_t s = 0; s < n; ++s)
                    sys(row, k * n + s) += A(i, j, s);
                for (std::size_t r = 0; r < n; ++r) {
                    sys(row, r * n + i) -= A(r, j, k);
                    sys(row, r * n + j) -= A(i, r, k);
                }
            }
    Subspace ker = kernel(sys);
    std::vector<Matrix> out;
    for (std::size_t b = 0; b < ker.dim(); ++b) {
        Matrix D(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                D(r, s) = ker.basis()(b, r * n + s);
        out.push_back(std::move(D));
    }
    return out;
}

/// Structure constants in a new basis: new e'_a = sum_i P(i,a) e_i (columns of P).
inline Algebra change_basis(const Algebra& A, const Matrix& P)
{
    const std::size_t n = A.dim();
    auto inv = inverse(P);
    if (!inv)
        throw std::invalid_argument("change_basis: singular basis matrix");
    Algebra out(n, A.labels());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            out.set_product(a, b, inv->apply(multiply(A, P.column(a), P.column(b))));
    return out;
}

/// Relabel basis: new index a carries old basis vector perm[a].
inline Algebra permute(const Algebra& A, const std::vector<std::size_t>& perm)
{
    const std::size_t n = A.dim();
    check_same_size(perm.size(), n, "permute");
    std::vector<std::size_t> pos(n);
    for (std::size_t a = 0; a < n; ++a)
        pos[perm[a]] = a;
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a)
        labels[a] = A.labels()[perm[a]];
    Algebra out(n, labels);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                out(a, b, pos[k]) = A(perm[a], perm[b], k);
    return out;
}

} // namespace sympleib
