#pragma once

// Core of a symplectic left Leibniz algebra: I = Leib ∩ Leib⊥, I⊥, the
// symplectic Lie algebra g = I⊥/I and the trivial part h = A/I⊥.

#include "sympleib/symplectic.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympleib {

struct CoreDecomposition {
    Subspace leib;
    Subspace I;
    Subspace Iperp;
    SymplecticAlgebra g;
    Matrix g_lift; // rows: representatives in A of the basis of g
    std::size_t h_dim = 0;
    Matrix h_lift; // rows: complement of I⊥ in A
};

namespace detail {

inline void core_assert(bool ok, const std::string& what)
{
    if (!ok)
        throw std::logic_error("core decomposition invariant violated: " + what);
}

/// Coordinates of v (known to lie in span(lift) + I) on the lift rows.
inline Vector lift_coordinates(const Matrix& lift, const Subspace& I, const Vector& v)
{
    std::vector<Vector> cols;
    for (std::size_t r = 0; r < lift.rows(); ++r)
        cols.push_back(lift.row(r));
    for (std::size_t r = 0; r < I.dim(); ++r)
        cols.push_back(I.basis_vector(r));
    auto sol = solve(Matrix::from_columns(v.size(), cols), v);
    core_assert(sol.solvable(), "product left I-perp");
    Vector x = *sol.particular;
    x.resize(lift.rows());
    return x;
}

} // namespace detail

inline CoreDecomposition core(const Algebra& A, const SkewForm& form)
{
    auto sympl = is_symplectic_left(A, form);
    if (!sympl.holds)
        throw std::invalid_argument("core needs a symplectic left Leibniz algebra: " + describe(sympl));
    const std::size_t n = A.dim();
    CoreDecomposition dec;
    dec.leib = leibniz_ideal(A);
    dec.I = intersect(dec.leib, orthogonal(form, dec.leib));
    dec.Iperp = orthogonal(form, dec.I);
    detail::core_assert(dec.Iperp.contains(dec.I), "I is not isotropic");
    detail::core_assert(is_ideal(A, dec.I), "I is not an ideal");
    detail::core_assert(is_ideal(A, dec.Iperp), "I-perp is not an ideal");

    auto g_rows = complement_rows(dec.I, dec.Iperp.basis_vectors());
    dec.g_lift = Matrix::from_rows(n, g_rows);
    std::vector<Vector> units;
    for (std::size_t i = 0; i < n; ++i)
        units.push_back(unit_vector(n, i));
    dec.h_lift = Matrix::from_rows(n, complement_rows(dec.Iperp, units));
    dec.h_dim = n - dec.Iperp.dim();
    detail::core_assert(dec.h_dim == dec.I.dim(), "dim h differs from dim I");

    // independence from representatives: I.I⊥, I⊥.I inside I and omega(I, I⊥) = 0
    for (std::size_t a = 0; a < dec.I.dim(); ++a)
        for (std::size_t b = 0; b < dec.Iperp.dim(); ++b) {
            Vector i = dec.I.basis_vector(a), r = dec.Iperp.basis_vector(b);
            detail::core_assert(dec.I.contains(multiply(A, i, r)) && dec.I.contains(multiply(A, r, i)),
                                "product not well defined on I-perp/I");
            detail::core_assert(form(i, r) == 0, "form not well defined on I-perp/I");
        }

    const std::size_t m = g_rows.size();
    Algebra g(m);
    Matrix Wg(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            g.set_product(a, b, detail::lift_coordinates(dec.g_lift, dec.I, multiply(A, g_rows[a], g_rows[b])));
            Wg(a, b) = form(g_rows[a], g_rows[b]);
        }
    SkewForm fg(Wg);
    detail::core_assert(fg.nondegenerate(), "induced form on g is degenerate");
    auto lie = is_lie(g);
    detail::core_assert(lie.holds, "g is not Lie: " + describe(lie));
    auto gs = is_symplectic_left(g, fg);
    detail::core_assert(gs.holds, "g is not symplectic: " + describe(gs));
    dec.g = SymplecticAlgebra{std::move(g), std::move(fg), Side::left};
    return dec;
}

namespace detail {

/// Witness: (basis index of A, basis row of s), defect = the nonzero product.
inline IdentityReport annihilates(const Algebra& A, const Subspace& s, const std::string& name)
{
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t i = 0; i < A.dim(); ++i) {
            Vector p = multiply(A, unit_vector(A.dim(), i), s.basis_vector(r));
            if (!is_zero(p))
                return fail(name, {i, r}, p);
        }
    return pass(name);
}

inline IdentityReport products_inside(const Algebra& A, const Subspace& s, const std::string& name)
{
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (!s.contains(A.product(i, j)))
                return fail(name, {i, j}, A.product(i, j));
    return pass(name);
}

} // namespace detail

/// Re-checks the four groups of consequences of the core construction.
inline Report verify_core_properties(const Algebra& A, const SkewForm& form, const CoreDecomposition& dec)
{
    Report rep;
    Algebra star = star_left(A, form);
    rep.add("(i) leib-ideal-product", ideal_report(A, dec.leib, "leib"));
    rep.add("(i) leib-ideal-star", ideal_report(star, dec.leib, "leib-star"));

    rep.add("(ii) I-isotropic", dec.Iperp.contains(dec.I) && orthogonal(form, dec.I) == dec.Iperp);
    rep.add("(ii) I-ideal-product", ideal_report(A, dec.I, "I"));
    rep.add("(ii) I-ideal-star", ideal_report(star, dec.I, "I-star"));
    rep.add("(ii) Iperp-ideal-product", ideal_report(A, dec.Iperp, "Iperp"));
    rep.add("(ii) Iperp-ideal-star", ideal_report(star, dec.Iperp, "Iperp-star"));
    rep.add("(ii) products-in-Iperp", detail::products_inside(A, dec.Iperp, "AA"));
    rep.add("(ii) star-products-in-Iperp", detail::products_inside(star, dec.Iperp, "A*A"));
    rep.add("(ii) A.I-zero", detail::annihilates(A, dec.I, "A.I"));
    rep.add("(ii) A*I-zero", detail::annihilates(star, dec.I, "A*I"));

    rep.add("(iii) g-lie", is_lie(dec.g.algebra));
    rep.add("(iii) g-symplectic", is_symplectic_left(dec.g.algebra, dec.g.form));
    rep.add("(iii) dimensions",
            dec.I.dim() + dec.g.algebra.dim() + dec.h_dim == A.dim() && dec.h_dim == dec.I.dim(),
            "dim I = " + std::to_string(dec.I.dim()) + ", dim g = " + std::to_string(dec.g.algebra.dim()) +
                ", dim h = " + std::to_string(dec.h_dim));

    if (is_ideal(star, dec.Iperp)) {
        auto q = quotient(star, dec.Iperp);
        rep.add("(iv) h-star-trivial", q.algebra.is_zero(), q.algebra.is_zero() ? "" : "A/I-perp star is nonzero");
    } else {
        rep.add("(iv) h-star-trivial", false, "I-perp is not a star ideal");
    }
    return rep;
}

} // namespace sympleib
