#pragma once

// Skew forms, omega-adjoints, the left/right symplectic conditions in both of
// their equivalent shapes, the form solver, star products and isotropy.

#include "sympleib/algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympleib {

/// omega(u,v) = u^T W v with W^T = -W.
class SkewForm {
public:
    SkewForm() = default;
    explicit SkewForm(Matrix w) : w_(std::move(w))
    {
        if (!w_.is_square())
            throw std::invalid_argument("skew form matrix must be square");
        for (std::size_t i = 0; i < w_.rows(); ++i)
            for (std::size_t j = 0; j < w_.cols(); ++j)
                if (w_(i, j) != -w_(j, i))
                    throw std::invalid_argument("form matrix is not skew-symmetric at (" + std::to_string(i + 1) +
                                                "," + std::to_string(j + 1) + ")");
        inv_ = inverse(w_);
    }

    static SkewForm zero(std::size_t n) { return SkewForm(Matrix(n, n)); }

    struct Entry {
        std::size_t i, j; // 0-based, i != j
        Rational value;
    };
    /// Sum of value * e^{ij} (e^{ij}(e_i,e_j) = value, e^{ij}(e_j,e_i) = -value).
    static SkewForm from_entries(std::size_t n, const std::vector<Entry>& entries)
    {
        Matrix w(n, n);
        for (const auto& e : entries) {
            if (e.i >= n || e.j >= n || e.i == e.j)
                throw std::invalid_argument("bad form entry index");
            w(e.i, e.j) += e.value;
            w(e.j, e.i) -= e.value;
        }
        return SkewForm(std::move(w));
    }

    std::size_t dim() const { return w_.rows(); }
    const Matrix& matrix() const { return w_; }
    bool nondegenerate() const { return inv_.has_value(); }
    const Matrix& inverse_matrix() const
    {
        if (!inv_)
            throw std::invalid_argument("form is degenerate");
        return *inv_;
    }

    Rational operator()(const Vector& u, const Vector& v) const { return dot(u, w_.apply(v)); }
    const Rational& at(std::size_t i, std::size_t j) const { return w_(i, j); }

    friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.w_ == b.w_; }

private:
    Matrix w_;
    std::optional<Matrix> inv_;
};

/// m* with omega(m* u, v) = omega(u, m v), i.e. W^{-1} m^T W.
inline Matrix omega_adjoint(const SkewForm& form, const Matrix& m)
{
    if (!m.is_square() || m.rows() != form.dim())
        throw std::invalid_argument("omega_adjoint: matrix size does not match the form");
    return form.inverse_matrix() * m.transpose() * form.matrix();
}

enum class Side { left, right, bi };

inline std::string to_string(Side s)
{
    switch (s) {
    case Side::left:
        return "left";
    case Side::right:
        return "right";
    case Side::bi:
        return "bi";
    }
    return "?";
}

namespace detail {

inline std::optional<IdentityReport> degeneracy(const SkewForm& form, const std::string& name)
{
    if (form.nondegenerate())
        return std::nullopt;
    Subspace k = kernel(form.matrix());
    return fail(name + "-nondegenerate", {}, k.basis_vector(0));
}

inline void check_form_size(const Algebra& A, const SkewForm& form)
{
    check_same_size(form.dim(), A.dim(), "algebra/form");
}

inline Rational pair(const Matrix& W, const Vector& u, const Vector& v)
{
    return dot(u, W.apply(v));
}

/// (l1) defect at basis triple (i,j,k) for an arbitrary (possibly degenerate) W.
inline Rational l1_defect(const Algebra& A, const Matrix& W, std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t n = A.dim();
    Vector u = unit_vector(n, i), v = unit_vector(n, j), w = unit_vector(n, k);
    return pair(W, u, A.product(j, k)) - pair(W, v, A.product(i, k)) - pair(W, A.product(i, j), w) / 2 +
           pair(W, A.product(j, i), w) / 2;
}

/// (r1): omega(u,w.v) - omega(v,w.u) - 1/2 omega(v.u,w) + 1/2 omega(u.v,w)
inline Rational r1_defect(const Algebra& A, const Matrix& W, std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t n = A.dim();
    Vector u = unit_vector(n, i), v = unit_vector(n, j), w = unit_vector(n, k);
    return pair(W, u, A.product(k, j)) - pair(W, v, A.product(k, i)) - pair(W, A.product(j, i), w) / 2 +
           pair(W, A.product(i, j), w) / 2;
}

template <class Defect>
IdentityReport scan_triples(const Algebra& A, const std::string& name, Defect&& defect)
{
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational d = defect(i, j, k);
                if (d != 0)
                    return fail(name, {i, j, k}, Vector{d});
            }
    return pass(name);
}

/// d omega(u,v,w) = -omega([u,v],w) - omega([v,w],u) - omega([w,u],v)
inline Rational d_omega(const Algebra& bracket, const Matrix& W, std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t n = bracket.dim();
    Vector u = unit_vector(n, i), v = unit_vector(n, j), w = unit_vector(n, k);
    return -pair(W, bracket.product(i, j), w) - pair(W, bracket.product(j, k), u) - pair(W, bracket.product(k, i), v);
}

} // namespace detail

/// (l1) on all basis triples plus nondegeneracy.
inline IdentityReport is_symplectic_left(const Algebra& A, const SkewForm& form)
{
    detail::check_form_size(A, form);
    auto r = detail::scan_triples(A, "l1", [&](auto i, auto j, auto k) -> Rational {
        return detail::l1_defect(A, form.matrix(), i, j, k);
    });
    if (!r.holds)
        return r;
    if (auto d = detail::degeneracy(form, "l1"))
        return *d;
    return r;
}

/// (l2): d omega(u,v,w) = omega(v,u<>w) - omega(u,v<>w), computed from the split.
inline IdentityReport is_symplectic_left_l2(const Algebra& A, const SkewForm& form)
{
    detail::check_form_size(A, form);
    auto [br, sym] = split(A);
    const Matrix& W = form.matrix();
    const std::size_t n = A.dim();
    auto r = detail::scan_triples(A, "l2", [&](auto i, auto j, auto k) -> Rational {
        Vector u = unit_vector(n, i), v = unit_vector(n, j);
        return detail::d_omega(br, W, i, j, k) - detail::pair(W, v, sym.product(i, k)) +
               detail::pair(W, u, sym.product(j, k));
    });
    if (!r.holds)
        return r;
    if (auto d = detail::degeneracy(form, "l2"))
        return *d;
    return r;
}

inline IdentityReport is_symplectic_right(const Algebra& A, const SkewForm& form)
{
    detail::check_form_size(A, form);
    auto r = detail::scan_triples(A, "r1", [&](auto i, auto j, auto k) -> Rational {
        return detail::r1_defect(A, form.matrix(), i, j, k);
    });
    if (!r.holds)
        return r;
    if (auto d = detail::degeneracy(form, "r1"))
        return *d;
    return r;
}

/// (r2): d omega(u,v,w) = omega(u,v<>w) - omega(v,u<>w)
inline IdentityReport is_symplectic_right_r2(const Algebra& A, const SkewForm& form)
{
    detail::check_form_size(A, form);
    auto [br, sym] = split(A);
    const Matrix& W = form.matrix();
    const std::size_t n = A.dim();
    auto r = detail::scan_triples(A, "r2", [&](auto i, auto j, auto k) -> Rational {
        Vector u = unit_vector(n, i), v = unit_vector(n, j);
        return detail::d_omega(br, W, i, j, k) - detail::pair(W, u, sym.product(j, k)) +
               detail::pair(W, v, sym.product(i, k));
    });
    if (!r.holds)
        return r;
    if (auto d = detail::degeneracy(form, "r2"))
        return *d;
    return r;
}

inline IdentityReport is_symplectic(const Algebra& A, const SkewForm& form, Side side)
{
    switch (side) {
    case Side::left:
        return is_symplectic_left(A, form);
    case Side::right:
        return is_symplectic_right(A, form);
    case Side::bi: {
        auto l = is_symplectic_left(A, form);
        if (!l.holds)
            return l;
        auto r = is_symplectic_right(A, form);
        if (!r.holds)
            return r;
        return pass("bi");
    }
    }
    return pass("?");
}

/// d omega = 0 and omega(u<>w,v) = omega(v<>w,u), checked directly.
inline IdentityReport is_bi_symplectic(const Algebra& A, const SkewForm& form)
{
    detail::check_form_size(A, form);
    auto [br, sym] = split(A);
    const Matrix& W = form.matrix();
    const std::size_t n = A.dim();
    auto r = detail::scan_triples(A, "bi-closed", [&](auto i, auto j, auto k) -> Rational {
        return detail::d_omega(br, W, i, j, k);
    });
    if (!r.holds)
        return r;
    r = detail::scan_triples(A, "bi-diamond", [&](auto i, auto j, auto k) -> Rational {
        Vector u = unit_vector(n, i), v = unit_vector(n, j);
        return detail::pair(W, sym.product(i, k), v) - detail::pair(W, sym.product(j, k), u);
    });
    if (!r.holds)
        return r;
    if (auto d = detail::degeneracy(form, "bi"))
        return *d;
    return pass("bi-symplectic");
}

/// Coordinates of a skew form: strict upper triangle, lexicographic (i<j).
inline std::vector<std::pair<std::size_t, std::size_t>> skew_coordinate_pairs(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

inline SkewForm skew_from_coordinates(std::size_t n, const Vector& coords)
{
    auto pairs = skew_coordinate_pairs(n);
    check_same_size(coords.size(), pairs.size(), "skew_from_coordinates");
    Matrix w(n, n);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        w(pairs[t].first, pairs[t].second) = coords[t];
        w(pairs[t].second, pairs[t].first) = -coords[t];
    }
    return SkewForm(std::move(w));
}

inline Vector skew_coordinates(const SkewForm& form)
{
    Vector out;
    for (auto [i, j] : skew_coordinate_pairs(form.dim()))
        out.push_back(form.at(i, j));
    return out;
}

/// All skew forms satisfying (l1) (left), (r1) (right) or both (bi); nondegeneracy not imposed.
inline Subspace solve_symplectic_forms(const Algebra& A, Side side)
{
    const std::size_t n = A.dim();
    auto pairs = skew_coordinate_pairs(n);
    const std::size_t N = pairs.size();
    std::vector<Matrix> basis;
    for (auto [i, j] : pairs) {
        Matrix w(n, n);
        w(i, j) = 1;
        w(j, i) = -1;
        basis.push_back(std::move(w));
    }
    std::vector<Vector> rows;
    auto add_rows = [&](auto defect) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vector row(N);
                    for (std::size_t t = 0; t < N; ++t)
                        row[t] = defect(basis[t], i, j, k);
                    if (!is_zero(row))
                        rows.push_back(std::move(row));
                }
    };
    if (side == Side::left || side == Side::bi)
        add_rows([&](const Matrix& W, auto i, auto j, auto k) -> Rational { return detail::l1_defect(A, W, i, j, k); });
    if (side == Side::right || side == Side::bi)
        add_rows([&](const Matrix& W, auto i, auto j, auto k) -> Rational { return detail::r1_defect(A, W, i, j, k); });
    if (rows.empty())
        return Subspace::full(N);
    return kernel(Matrix::from_rows(N, rows));
}

/// Up to 128 seeded random integer combinations (coefficients in [-10,10]) of
/// the space's basis; the first nondegenerate one is returned.
inline std::optional<SkewForm> find_nondegenerate(std::size_t n, const Subspace& space, std::uint64_t seed)
{
    check_same_size(space.ambient_dim(), n == 0 ? 0 : n * (n - 1) / 2, "find_nondegenerate");
    if (n == 0)
        return SkewForm(Matrix(0, 0));
    if (space.dim() == 0)
        return std::nullopt;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 128; ++attempt) {
        Vector c = zero_vector(space.ambient_dim());
        for (std::size_t b = 0; b < space.dim(); ++b) {
            long coeff = static_cast<long>(rng() % 21) - 10;
            if (coeff != 0)
                c = c + Rational(coeff) * space.basis_vector(b);
        }
        SkewForm f = skew_from_coordinates(n, c);
        if (f.nondegenerate())
            return f;
    }
    return std::nullopt;
}

namespace detail {

/// Product x(i,j) solving omega(x, e_k) = rhs(i,j,k) for all k.
template <class Rhs>
Algebra solve_for_product(std::size_t n, const SkewForm& form, Rhs&& rhs, const std::vector<std::string>& labels)
{
    if (!form.nondegenerate())
        throw std::invalid_argument("star product needs a nondegenerate form");
    Matrix Wt = form.matrix().transpose();
    Algebra out(n, labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector b(n);
            for (std::size_t k = 0; k < n; ++k)
                b[k] = rhs(i, j, k);
            auto sol = solve(Wt, b);
            out.set_product(i, j, *sol.particular);
        }
    return out;
}

} // namespace detail

/// omega(u*v, w) = -omega(v, u.w)
inline Algebra star_left(const Algebra& A, const SkewForm& form)
{
    detail::check_form_size(A, form);
    const std::size_t n = A.dim();
    return detail::solve_for_product(
        n, form, [&](auto i, auto j, auto k) -> Rational { return -form(unit_vector(n, j), A.product(i, k)); }, A.labels());
}

/// omega(u*v, w) = -omega(v, w.u)
inline Algebra star_right(const Algebra& A, const SkewForm& form)
{
    detail::check_form_size(A, form);
    const std::size_t n = A.dim();
    return detail::solve_for_product(
        n, form, [&](auto i, auto j, auto k) -> Rational { return -form(unit_vector(n, j), A.product(k, i)); }, A.labels());
}

/// {v : omega(v, s) = 0}
inline Subspace orthogonal(const SkewForm& form, const Subspace& s)
{
    check_same_size(s.ambient_dim(), form.dim(), "orthogonal");
    if (s.dim() == 0)
        return Subspace::full(form.dim());
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < s.dim(); ++r)
        rows.push_back(form.matrix().apply(s.basis_vector(r)));
    return kernel(Matrix::from_rows(form.dim(), rows));
}

inline bool is_isotropic(const SkewForm& form, const Subspace& s)
{
    return orthogonal(form, s).contains(s);
}

inline bool is_lagrangian(const SkewForm& form, const Subspace& s)
{
    return orthogonal(form, s) == s;
}

struct SymplecticAlgebra {
    Algebra algebra;
    SkewForm form;
    Side side = Side::left;

    /// Validates nondegeneracy and the side's condition.
    static SymplecticAlgebra make(Algebra A, SkewForm form, Side side)
    {
        auto r = is_symplectic(A, form, side);
        if (!r.holds)
            throw std::invalid_argument("not a symplectic " + to_string(side) + " algebra: " + describe(r));
        return {std::move(A), std::move(form), side};
    }
};

} // namespace sympleib
