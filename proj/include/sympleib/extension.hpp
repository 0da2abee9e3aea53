#pragma once

// Double extensions h ⊕ g ⊕ h* of a symplectic Lie algebra g: extension data,
// the full and reduced equation systems, the builders for the product and its
// left-symmetric product, the special cases (Lagrangian, isotropic, inner,
// rank one) and the bi-symplectic builders.

#include "sympleib/symplectic.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympleib {

/// A symplectic Lie algebra together with its left-symmetric product.
struct SymplecticLie {
    Algebra g;
    SkewForm form;
    Algebra star; // omega(a*b, c) = -omega(b, [a,c])

    static SymplecticLie make(Algebra g, SkewForm form)
    {
        auto lie = is_lie(g);
        if (!lie.holds)
            throw std::invalid_argument("not a Lie algebra: " + describe(lie));
        auto sympl = is_symplectic_left(g, form);
        if (!sympl.holds)
            throw std::invalid_argument("form is not symplectic: " + describe(sympl));
        Algebra st = star_left(g, form);
        return {std::move(g), std::move(form), std::move(st)};
    }

    std::size_t dim() const { return g.dim(); }
    Vector bracket(const Vector& a, const Vector& b) const { return multiply(g, a, b); }
    Vector star_product(const Vector& a, const Vector& b) const { return multiply(star, a, b); }
    Matrix ad(const Vector& a) const { return left_mult(g, a); }
    Matrix right_star(const Vector& a) const { return right_mult(star, a); }
    Matrix adjoint(const Matrix& m) const { return omega_adjoint(form, m); }
    Rational omega(const Vector& a, const Vector& b) const { return form(a, b); }
};

/// (F, G, theta, psi, xi, Omega) over g with dim h = p. Omega(X)(Y,Z) = omega(X,Y,Z).
struct ExtensionData {
    std::size_t p = 0;
    std::size_t m = 0;
    std::vector<Matrix> F, G;
    std::vector<std::vector<Vector>> theta, psi, xi;
    Cube omega;

    static ExtensionData zero(std::size_t p, std::size_t m)
    {
        ExtensionData d;
        d.p = p;
        d.m = m;
        d.F.assign(p, Matrix(m, m));
        d.G.assign(p, Matrix(m, m));
        d.theta.assign(p, std::vector<Vector>(p, zero_vector(m)));
        d.psi = d.theta;
        d.xi = d.theta;
        d.omega = Cube(p);
        return d;
    }

    Matrix S(std::size_t X) const { return F[X] + G[X]; }

    void validate(std::size_t gdim) const
    {
        auto bad = [](const std::string& w) { return std::invalid_argument("extension data: " + w); };
        if (m != gdim)
            throw bad("g dimension " + std::to_string(gdim) + " but data built for " + std::to_string(m));
        if (F.size() != p || G.size() != p)
            throw bad("F and G need p matrices");
        for (std::size_t X = 0; X < p; ++X)
            if (F[X].rows() != m || F[X].cols() != m || G[X].rows() != m || G[X].cols() != m)
                throw bad("F/G matrix has the wrong shape");
        for (const auto* t : {&theta, &psi, &xi}) {
            if (t->size() != p)
                throw bad("theta/psi/xi need p x p entries");
            for (const auto& row : *t) {
                if (row.size() != p)
                    throw bad("theta/psi/xi need p x p entries");
                for (const auto& v : row)
                    if (v.size() != m)
                        throw bad("theta/psi/xi vector has the wrong length");
            }
        }
        if (omega.size() != p)
            throw bad("omega needs shape p x p x p");
    }
};

/// K(X) = 1/2 G(X) - 1/2 F(X) - F(X)*
inline Matrix extension_K(const SymplecticLie& gs, const ExtensionData& d, std::size_t X)
{
    return half() * d.G[X] - half() * d.F[X] - gs.adjoint(d.F[X]);
}

namespace detail {

inline Vector flat(const Matrix& m)
{
    return m.entries();
}

inline Vector concat(std::initializer_list<Vector> parts)
{
    Vector out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

using Tuple = std::vector<std::size_t>;

/// Runs fn over all tuples in [0,p)^arity in lexicographic order; the first
/// nonzero defect becomes the check's witness.
template <class Fn>
void check_tuples(Report& rep, const std::string& name, std::size_t p, std::size_t arity, Fn&& fn)
{
    std::size_t total = 1;
    for (std::size_t a = 0; a < arity; ++a)
        total *= p;
    Tuple t(arity, 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::size_t rest = n;
        for (std::size_t a = arity; a-- > 0;) {
            t[a] = rest % p;
            rest /= p;
        }
        Vector d = fn(t);
        if (!is_zero(d)) {
            rep.add(name, false, "at h-indices " + format_indices(t) + ": defect " + format_vector(d));
            return;
        }
    }
    rep.add(name, true);
}

inline Vector omega_cube_defect(const Cube& O, std::size_t X, std::size_t Y, std::size_t Z)
{
    return {Rational(O(X, Z, Y) - O(Y, Z, X) - O(X, Y, Z) / 2 + O(Y, X, Z) / 2)};
}

inline Vector derivation_defect(const Algebra& g, const Matrix& D)
{
    auto r = is_derivation(g, D);
    return r.holds ? Vector{} : r.witness->defect;
}

struct Derived {
    std::vector<Matrix> K, S, Fs, Gs, Ks;
};

inline Derived derive(const SymplecticLie& gs, const ExtensionData& d)
{
    Derived o;
    for (std::size_t X = 0; X < d.p; ++X) {
        o.K.push_back(extension_K(gs, d, X));
        o.S.push_back(d.S(X));
        o.Fs.push_back(gs.adjoint(d.F[X]));
        o.Gs.push_back(gs.adjoint(d.G[X]));
        o.Ks.push_back(gs.adjoint(o.K.back()));
    }
    return o;
}

} // namespace detail

/// Omega(X)(Z,Y) - Omega(Y)(Z,X) = 1/2 Omega(X)(Y,Z) - 1/2 Omega(Y)(X,Z)
inline Report check_omega_condition(const Cube& omega)
{
    Report rep;
    detail::check_tuples(rep, "omega-cube", omega.size(), 3, [&](const detail::Tuple& t) {
        return detail::omega_cube_defect(omega, t[0], t[1], t[2]);
    });
    return rep;
}

/// Solution space of the linear Omega condition, coordinates = flat cube index.
inline Subspace omega_condition_space(std::size_t p)
{
    const std::size_t N = p * p * p;
    std::vector<Vector> rows;
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t Y = 0; Y < p; ++Y)
            for (std::size_t Z = 0; Z < p; ++Z) {
                Vector row = zero_vector(N);
                auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> Rational& {
                    return row[(a * p + b) * p + c];
                };
                at(X, Z, Y) += 1;
                at(Y, Z, X) -= 1;
                at(X, Y, Z) -= half();
                at(Y, X, Z) += half();
                if (!is_zero(row))
                    rows.push_back(std::move(row));
            }
    if (rows.empty())
        return Subspace::full(N);
    return kernel(Matrix::from_rows(N, rows));
}

inline Cube cube_from_flat(std::size_t p, const Vector& v)
{
    check_same_size(v.size(), p * p * p, "cube_from_flat");
    Cube c(p);
    c.flat() = v;
    return c;
}

/// The full system, one equation split in two, plus the derivation requirement.
inline Report check_full_system(const SymplecticLie& gs, const ExtensionData& d)
{
    d.validate(gs.dim());
    using detail::Tuple;
    const std::size_t p = d.p, m = d.m;
    auto D = detail::derive(gs, d);
    const auto &F = d.F, &G = d.G;
    const auto &th = d.theta, &ps = d.psi, &xi = d.xi;
    auto om = [&](const Vector& a, const Vector& b) -> Rational { return gs.omega(a, b); };
    Report rep;

    detail::check_tuples(rep, "E0.derivations", p, 1, [&](const Tuple& t) {
        return detail::concat({detail::derivation_defect(gs.g, F[t[0]]), detail::derivation_defect(gs.g, G[t[0]])});
    });
    detail::check_tuples(rep, "E1.omega-cube", p, 3, [&](const Tuple& t) {
        return detail::omega_cube_defect(d.omega, t[0], t[1], t[2]);
    });
    detail::check_tuples(rep, "E2.psi-theta-skew", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return ps[X][Y] - ps[Y][X] - half() * (th[X][Y] - th[Y][X]);
    });
    detail::check_tuples(rep, "E3.theta-xi-psi", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return th[X][Y] - (xi[Y][X] + half() * ps[X][Y] - half() * xi[X][Y]);
    });
    detail::check_tuples(rep, "E4.omega-theta-xi-psi", p, 4, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2], T = t[3];
        return Vector{Rational(om(th[X][Y], xi[Z][T]) - om(th[Y][Z], ps[X][T]) + om(th[X][Z], ps[Y][T]))};
    });
    detail::check_tuples(rep, "E5.F-theta-G", p, 3, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2];
        return F[X].apply(th[Y][Z]) - F[Y].apply(th[X][Z]) - G[Z].apply(th[X][Y]);
    });
    detail::check_tuples(rep, "E6.Fstar-psi-K-theta", p, 3, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2];
        return D.Fs[X].apply(ps[Y][Z]) - D.Fs[Y].apply(ps[X][Z]) + D.K[Z].apply(th[X][Y]);
    });
    detail::check_tuples(rep, "E7.Fstar-xi-Gstar-psi-Kstar-theta", p, 3, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2];
        return D.Fs[X].apply(xi[Y][Z]) - D.Gs[Y].apply(ps[X][Z]) - D.Ks[Z].apply(th[X][Y]);
    });
    detail::check_tuples(rep, "E8.S-xi", p, 3, [&](const Tuple& t) { return D.S[t[0]].apply(xi[t[1]][t[2]]); });
    detail::check_tuples(rep, "E9.S-skew", p, 1, [&](const Tuple& t) {
        return detail::flat(gs.adjoint(D.S[t[0]]) + D.S[t[0]]);
    });
    detail::check_tuples(rep, "E10.K-S", p, 2, [&](const Tuple& t) { return detail::flat(D.K[t[1]] * D.S[t[0]]); });
    detail::check_tuples(rep, "E11.G-S", p, 2, [&](const Tuple& t) { return detail::flat(G[t[1]] * D.S[t[0]]); });
    detail::check_tuples(rep, "E12.Rstar-psi-K-F", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::flat(gs.right_star(ps[X][Y]) + D.K[Y] * F[X] + D.Fs[X] * D.K[Y]);
    });
    detail::check_tuples(rep, "E13.Rstar-xi-Kstar-G", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::flat(gs.right_star(xi[X][Y]) + D.Ks[Y] * G[X] + D.Gs[X] * D.K[Y]);
    });
    detail::check_tuples(rep, "E14a.ad-theta-FF", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::flat(gs.ad(th[X][Y]) - commutator(F[X], F[Y]));
    });
    detail::check_tuples(rep, "E14b.ad-theta-FG", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::flat(gs.ad(th[X][Y]) + commutator(F[X], G[Y]));
    });
    detail::check_tuples(rep, "E15.ad-S", p, 1, [&](const Tuple& t) {
        Vector out;
        for (std::size_t a = 0; a < m; ++a) {
            auto f = detail::flat(gs.ad(D.S[t[0]].apply(unit_vector(m, a))));
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    });
    detail::check_tuples(rep, "E16.K-bracket-star", p, 1, [&](const Tuple& t) {
        const Matrix& K = D.K[t[0]];
        Vector out;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vector ea = unit_vector(m, a), eb = unit_vector(m, b);
                Vector v = K.apply(gs.bracket(ea, eb)) - gs.star_product(ea, K.apply(eb)) +
                           gs.star_product(eb, K.apply(ea));
                out.insert(out.end(), v.begin(), v.end());
            }
        return out;
    });
    return rep;
}

/// The reduced system, with its final line split into four checks.
inline Report check_reduced_system(const SymplecticLie& gs, const ExtensionData& d)
{
    d.validate(gs.dim());
    using detail::Tuple;
    const std::size_t p = d.p, m = d.m;
    auto D = detail::derive(gs, d);
    const auto& F = d.F;
    const auto &th = d.theta, &ps = d.psi, &xi = d.xi;
    auto om = [&](const Vector& a, const Vector& b) -> Rational { return gs.omega(a, b); };
    Report rep;

    detail::check_tuples(rep, "R0.derivations", p, 1, [&](const Tuple& t) {
        return detail::concat({detail::derivation_defect(gs.g, F[t[0]]), detail::derivation_defect(gs.g, d.G[t[0]])});
    });
    detail::check_tuples(rep, "R1.omega-cube", p, 3, [&](const Tuple& t) {
        return detail::omega_cube_defect(d.omega, t[0], t[1], t[2]);
    });
    detail::check_tuples(rep, "R2.psi-xi-skew", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return ps[X][Y] - ps[Y][X] - (xi[Y][X] - xi[X][Y]);
    });
    detail::check_tuples(rep, "R3.theta-xi-psi", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return th[X][Y] - (xi[Y][X] + half() * ps[X][Y] - half() * xi[X][Y]);
    });
    detail::check_tuples(rep, "R4.omega-theta-xi-psi", p, 4, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2], T = t[3];
        return Vector{Rational(om(th[X][Y], xi[Z][T]) - om(th[Y][Z], ps[X][T]) + om(th[X][Z], ps[Y][T]))};
    });
    detail::check_tuples(rep, "R5.F-theta-S", p, 3, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2];
        return F[X].apply(th[Y][Z]) - F[Y].apply(th[X][Z]) + F[Z].apply(th[X][Y]) - D.S[Z].apply(th[X][Y]);
    });
    detail::check_tuples(rep, "R6.Fstar-psi-K-theta", p, 3, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2];
        return D.Fs[X].apply(ps[Y][Z]) - D.Fs[Y].apply(ps[X][Z]) + D.K[Z].apply(th[X][Y]);
    });
    detail::check_tuples(rep, "R7.Fstar-psi-xi-S", p, 3, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2];
        return D.Fs[X].apply(ps[Y][Z] + xi[Y][Z]) + D.S[Y].apply(ps[X][Z]) + D.S[Z].apply(th[X][Y]);
    });
    detail::check_tuples(rep, "R8.ad-theta-bracket", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::flat(gs.ad(th[X][Y]) - commutator(F[X], F[Y]));
    });
    detail::check_tuples(rep, "R9.Rstar-psi-F", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        Matrix sy = F[Y] + D.Fs[Y];
        return detail::flat(gs.right_star(ps[X][Y]) - (sy * F[X] + D.Fs[X] * sy));
    });
    detail::check_tuples(rep, "R10.Rstar-psi-xi", p, 2, [&](const Tuple& t) {
        return detail::flat(gs.right_star(ps[t[0]][t[1]] + xi[t[0]][t[1]]));
    });
    detail::check_tuples(rep, "R11a.S-star", p, 1, [&](const Tuple& t) {
        Vector out;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vector v = D.S[t[0]].apply(gs.star_product(unit_vector(m, a), unit_vector(m, b)));
                out.insert(out.end(), v.begin(), v.end());
            }
        return out;
    });
    detail::check_tuples(rep, "R11b.S-skew", p, 1, [&](const Tuple& t) {
        return detail::flat(gs.adjoint(D.S[t[0]]) + D.S[t[0]]);
    });
    detail::check_tuples(rep, "R11c.S-xi", p, 3, [&](const Tuple& t) { return D.S[t[0]].apply(xi[t[1]][t[2]]); });
    detail::check_tuples(rep, "R11d.S-products", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::concat(
            {detail::flat(D.S[X] * D.S[Y]), detail::flat(F[X] * D.S[Y]), detail::flat(D.S[X] * F[Y])});
    });
    return rep;
}

/// theta(X,Y)+theta(Y,X) = psi(X,Y)+xi(X,Y), central in g; S(X)S(Y) = F(X)S(Y) = S(Y)F(X) = 0.
inline Report check_consequences(const SymplecticLie& gs, const ExtensionData& d)
{
    d.validate(gs.dim());
    using detail::Tuple;
    Subspace z = center(gs.g);
    Report rep;
    detail::check_tuples(rep, "C.theta-sym", d.p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return d.theta[X][Y] + d.theta[Y][X] - d.psi[X][Y] - d.xi[X][Y];
    });
    detail::check_tuples(rep, "C.theta-sym-central", d.p, 2, [&](const Tuple& t) {
        Vector v = d.theta[t[0]][t[1]] + d.theta[t[1]][t[0]];
        return z.residual(v);
    });
    detail::check_tuples(rep, "C.S-products", d.p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        Matrix SX = d.S(X), SY = d.S(Y);
        return detail::concat({detail::flat(SX * SY), detail::flat(d.F[X] * SY), detail::flat(SY * d.F[X])});
    });
    return rep;
}

/// (D+D*)[a,b] = a*(D+D*)b - b*(D+D*)a on all basis pairs; witness (a,b).
inline IdentityReport check_derivation_adjoint(const SymplecticLie& gs, const Matrix& D)
{
    Matrix E = D + gs.adjoint(D);
    const std::size_t m = gs.dim();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector ea = unit_vector(m, a), eb = unit_vector(m, b);
            Vector v = E.apply(gs.bracket(ea, eb)) - gs.star_product(ea, E.apply(eb)) + gs.star_product(eb, E.apply(ea));
            if (!is_zero(v))
                return fail("derivation-adjoint", {a, b}, v);
        }
    return pass("derivation-adjoint");
}

struct BuiltSymplectic {
    Algebra algebra;
    SkewForm form;
};

namespace detail {

inline std::vector<std::string> extension_labels(std::size_t p, const Algebra& g)
{
    std::vector<std::string> l;
    for (std::size_t X = 0; X < p; ++X)
        l.push_back("h" + std::to_string(X + 1));
    for (const auto& s : g.labels())
        l.push_back(s);
    for (std::size_t X = 0; X < p; ++X)
        l.push_back("h" + std::to_string(X + 1) + "*");
    return l;
}

/// omega_n(X+a+alpha, Y+b+beta) = <alpha,Y> - <beta,X> + omega_g(a,b)
inline SkewForm omega_n(std::size_t p, const SkewForm& wg)
{
    const std::size_t m = wg.dim(), n = 2 * p + m;
    Matrix W(n, n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            W(p + a, p + b) = wg.at(a, b);
    for (std::size_t X = 0; X < p; ++X) {
        W(p + m + X, X) = 1;
        W(X, p + m + X) = -1;
    }
    return SkewForm(std::move(W));
}

inline void require(const Report& r, const std::string& what)
{
    if (const Check* c = r.first_failure())
        throw std::invalid_argument(what + ": " + c->name + " fails " + c->detail);
}

inline void ensure(const IdentityReport& r, const std::string& what)
{
    if (!r.holds)
        throw std::logic_error(what + ": " + describe(r));
}

} // namespace detail

/// The extension product and omega_n on h ⊕ g ⊕ h*, with no validation.
inline BuiltSymplectic assemble_double_extension(const SymplecticLie& gs, const ExtensionData& d)
{
    d.validate(gs.dim());
    const std::size_t p = d.p, m = d.m, n = 2 * p + m;
    auto hs = [&](std::size_t Z) { return p + m + Z; };
    Algebra A(n, detail::extension_labels(p, gs.g));
    std::vector<Matrix> K;
    for (std::size_t X = 0; X < p; ++X)
        K.push_back(extension_K(gs, d, X));
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t Y = 0; Y < p; ++Y) {
            for (std::size_t k = 0; k < m; ++k)
                A(X, Y, p + k) = d.theta[X][Y][k];
            for (std::size_t Z = 0; Z < p; ++Z)
                A(X, Y, hs(Z)) = d.omega(X, Y, Z);
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector ea = unit_vector(m, a), eb = unit_vector(m, b);
            Vector v = gs.bracket(ea, eb);
            for (std::size_t k = 0; k < m; ++k)
                A(p + a, p + b, p + k) = v[k];
            for (std::size_t Z = 0; Z < p; ++Z)
                A(p + a, p + b, hs(Z)) = gs.omega(K[Z].apply(ea), eb);
        }
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t a = 0; a < m; ++a) {
            Vector ea = unit_vector(m, a);
            Vector fa = d.F[X].apply(ea), ga = d.G[X].apply(ea);
            for (std::size_t k = 0; k < m; ++k) {
                A(X, p + a, p + k) = fa[k];
                A(p + a, X, p + k) = ga[k];
            }
            for (std::size_t Z = 0; Z < p; ++Z) {
                A(X, p + a, hs(Z)) = gs.omega(d.psi[X][Z], ea);
                A(p + a, X, hs(Z)) = gs.omega(d.xi[X][Z], ea);
            }
        }
    return {std::move(A), detail::omega_n(p, gs.form)};
}

/// Rejects data failing the reduced system; the result is re-verified.
inline BuiltSymplectic build_double_extension(const SymplecticLie& gs, const ExtensionData& d)
{
    detail::require(check_reduced_system(gs, d), "extension data rejected");
    auto out = assemble_double_extension(gs, d);
    detail::ensure(is_left_leibniz(out.algebra), "double extension is not left Leibniz");
    detail::ensure(is_symplectic_left(out.algebra, out.form), "double extension is not symplectic");
    return out;
}

/// Its left-symmetric product, with no validation.
inline Algebra assemble_left_symmetric(const SymplecticLie& gs, const ExtensionData& d)
{
    d.validate(gs.dim());
    const std::size_t p = d.p, m = d.m, n = 2 * p + m;
    auto hs = [&](std::size_t Z) { return p + m + Z; };
    Algebra A(n, detail::extension_labels(p, gs.g));
    for (std::size_t X = 0; X < p; ++X) {
        Matrix K = extension_K(gs, d, X);
        Matrix Fs = gs.adjoint(d.F[X]);
        for (std::size_t Y = 0; Y < p; ++Y) {
            for (std::size_t k = 0; k < m; ++k)
                A(X, Y, p + k) = d.psi[X][Y][k];
            for (std::size_t Z = 0; Z < p; ++Z)
                A(X, Y, hs(Z)) = d.omega(X, Z, Y);
        }
        for (std::size_t a = 0; a < m; ++a) {
            Vector ea = unit_vector(m, a);
            Vector l = -Fs.apply(ea), r = K.apply(ea);
            for (std::size_t k = 0; k < m; ++k) {
                A(X, p + a, p + k) = l[k];
                A(p + a, X, p + k) = r[k];
            }
            for (std::size_t Z = 0; Z < p; ++Z) {
                A(X, p + a, hs(Z)) = gs.omega(d.theta[X][Z], ea);
                A(p + a, X, hs(Z)) = gs.omega(d.xi[Z][X], ea);
            }
        }
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector ea = unit_vector(m, a), eb = unit_vector(m, b);
            Vector v = gs.star_product(ea, eb);
            for (std::size_t k = 0; k < m; ++k)
                A(p + a, p + b, p + k) = v[k];
            for (std::size_t Z = 0; Z < p; ++Z)
                A(p + a, p + b, hs(Z)) = gs.omega(d.G[Z].apply(ea), eb);
        }
    return A;
}

inline Algebra build_left_symmetric(const SymplecticLie& gs, const ExtensionData& d)
{
    detail::require(check_reduced_system(gs, d), "extension data rejected");
    Algebra lf = assemble_left_symmetric(gs, d);
    detail::ensure(is_left_symmetric(lf), "extension star is not left-symmetric");
    auto built = assemble_double_extension(gs, d);
    if (!(star_left(built.algebra, built.form) == lf))
        throw std::logic_error("extension star differs from the star of the built algebra");
    return lf;
}

inline SymplecticLie zero_lie()
{
    return SymplecticLie::make(Algebra(0), SkewForm(Matrix(0, 0)));
}

struct LagrangianResult {
    Algebra algebra;
    SkewForm form;
    Algebra star;
    bool leib_lagrangian = false;
    bool vacuous = false; // Omega = 0: Leib = {0}
};

/// (X+alpha).(Y+beta) = Omega(X)(Y,.) on h ⊕ h*; star = Omega(X)(.,Y).
inline LagrangianResult build_lagrangian(std::size_t p, const Cube& omega)
{
    if (omega.size() != p)
        throw std::invalid_argument("omega cube must have shape p x p x p");
    detail::require(check_omega_condition(omega), "omega cube rejected");
    ExtensionData d = ExtensionData::zero(p, 0);
    d.omega = omega;
    SymplecticLie g0 = zero_lie();
    auto built = assemble_double_extension(g0, d);
    detail::ensure(is_left_leibniz(built.algebra), "Lagrangian extension is not left Leibniz");
    detail::ensure(is_symplectic_left(built.algebra, built.form), "Lagrangian extension is not symplectic");
    Algebra star = assemble_left_symmetric(g0, d);
    if (!(star == star_left(built.algebra, built.form)))
        throw std::logic_error("Lagrangian star differs from the star of the built algebra");
    LagrangianResult r{built.algebra, built.form, star};
    Subspace leib = leibniz_ideal(r.algebra);
    r.vacuous = leib.dim() == 0;
    r.leib_lagrangian = is_lagrangian(r.form, leib);
    return r;
}

/// Extension data of the isotropic case: G = -F, xi = -psi.
inline ExtensionData isotropic_data(std::size_t m, const std::vector<Matrix>& F,
                                    const std::vector<std::vector<Vector>>& psi,
                                    const std::vector<std::vector<Vector>>& theta, const Cube& omega)
{
    const std::size_t p = F.size();
    ExtensionData d = ExtensionData::zero(p, m);
    d.F = F;
    for (std::size_t X = 0; X < p; ++X)
        d.G[X] = -F[X];
    d.psi = psi;
    d.theta = theta;
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t Y = 0; Y < p; ++Y)
            d.xi[X][Y] = -psi[X][Y];
    d.omega = omega;
    d.validate(m);
    return d;
}

/// The six equations of the centerless case (K = -F - F*), plus F in Der(g).
inline Report check_isotropic_system(const SymplecticLie& gs, const std::vector<Matrix>& F,
                                     const std::vector<std::vector<Vector>>& psi,
                                     const std::vector<std::vector<Vector>>& theta, const Cube& omega)
{
    if (center(gs.g).dim() != 0)
        throw std::invalid_argument("isotropic system needs a Lie algebra with trivial center");
    ExtensionData d = isotropic_data(gs.dim(), F, psi, theta, omega);
    using detail::Tuple;
    const std::size_t p = d.p;
    std::vector<Matrix> Fs, K;
    for (std::size_t X = 0; X < p; ++X) {
        Fs.push_back(gs.adjoint(F[X]));
        K.push_back(-F[X] - Fs.back());
    }
    auto om = [&](const Vector& a, const Vector& b) -> Rational { return gs.omega(a, b); };
    Report rep;
    detail::check_tuples(rep, "I0.derivations", p, 1,
                         [&](const Tuple& t) { return detail::derivation_defect(gs.g, F[t[0]]); });
    detail::check_tuples(rep, "I1.omega-cube", p, 3, [&](const Tuple& t) {
        return detail::omega_cube_defect(omega, t[0], t[1], t[2]);
    });
    detail::check_tuples(rep, "I2.theta-psi", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return theta[X][Y] - (psi[X][Y] - psi[Y][X]);
    });
    detail::check_tuples(rep, "I3.omega-theta-psi-cyclic", p, 4, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2], T = t[3];
        return Vector{
            Rational(om(theta[X][Y], psi[Z][T]) + om(theta[Y][Z], psi[X][T]) + om(theta[Z][X], psi[Y][T]))};
    });
    detail::check_tuples(rep, "I4.Fstar-psi-K-theta", p, 3, [&](const Tuple& t) {
        auto X = t[0], Y = t[1], Z = t[2];
        return Fs[X].apply(psi[Y][Z]) - Fs[Y].apply(psi[X][Z]) + K[Z].apply(theta[X][Y]);
    });
    detail::check_tuples(rep, "I5.Rstar-psi-K-F", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::flat(gs.right_star(psi[X][Y]) + K[Y] * F[X] + Fs[X] * K[Y]);
    });
    detail::check_tuples(rep, "I6.ad-theta-bracket", p, 2, [&](const Tuple& t) {
        auto X = t[0], Y = t[1];
        return detail::flat(gs.ad(theta[X][Y]) - commutator(F[X], F[Y]));
    });
    return rep;
}

/// Centerless g with only inner derivations. H is m x p (column X = H(X)).
/// X.Y = Omega(X)(Y,.), a.b = [a,b] + omega([a,b], H(.)), X.a = -a.X = omega(psi(X,.),a),
/// omega_H(X+a+alpha, Y+b+beta) = <alpha,Y> - <beta,X> + omega(a-H(X), b-H(Y)).
inline BuiltSymplectic build_inner_extension(const SymplecticLie& gs, const Matrix& H,
                                             const std::vector<std::vector<Vector>>& psi, const Cube& omega)
{
    const std::size_t m = gs.dim(), p = H.cols();
    if (H.rows() != m)
        throw std::invalid_argument("H must be a dim(g) x p matrix");
    if (omega.size() != p || psi.size() != p)
        throw std::invalid_argument("psi and omega must have p = cols(H) entries per slot");
    for (const auto& row : psi) {
        if (row.size() != p)
            throw std::invalid_argument("psi must be p x p");
        for (const auto& v : row)
            check_same_size(v.size(), m, "psi vector");
    }
    std::vector<std::string> errors;
    std::size_t zdim = center(gs.g).dim();
    if (zdim != 0)
        errors.push_back("center of g is nonzero");
    if (derivations(gs.g).size() != m - zdim)
        errors.push_back("g has outer derivations");
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t Y = 0; Y < p; ++Y) {
            if (psi[X][Y] != psi[Y][X])
                errors.push_back("psi not symmetric at " + format_indices({X, Y}));
            if (!gs.right_star(psi[X][Y]).is_zero())
                errors.push_back("right star multiplication by psi" + format_indices({X, Y}) + " is nonzero");
        }
    if (auto c = check_omega_condition(omega).first_failure())
        errors.push_back("omega cube: " + c->detail);
    if (!errors.empty()) {
        std::string msg = "inner extension preconditions violated:";
        for (const auto& e : errors)
            msg += " [" + e + "]";
        throw std::invalid_argument(msg);
    }

    const std::size_t n = 2 * p + m;
    auto hs = [&](std::size_t Z) { return p + m + Z; };
    Algebra A(n, detail::extension_labels(p, gs.g));
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t Y = 0; Y < p; ++Y)
            for (std::size_t Z = 0; Z < p; ++Z)
                A(X, Y, hs(Z)) = omega(X, Y, Z);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector v = gs.bracket(unit_vector(m, a), unit_vector(m, b));
            for (std::size_t k = 0; k < m; ++k)
                A(p + a, p + b, p + k) = v[k];
            for (std::size_t Z = 0; Z < p; ++Z)
                A(p + a, p + b, hs(Z)) = gs.omega(v, H.column(Z));
        }
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t Z = 0; Z < p; ++Z) {
                Rational v = gs.omega(psi[X][Z], unit_vector(m, a));
                A(X, p + a, hs(Z)) = v;
                A(p + a, X, hs(Z)) = -v;
            }

    // omega_H = omega_n pulled back along X+a+alpha -> X + (a - H(X)) + alpha
    Matrix P = Matrix::identity(n);
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t k = 0; k < m; ++k)
            P(p + k, X) = -H(k, X);
    SkewForm wn = detail::omega_n(p, gs.form);
    SkewForm wH(P.transpose() * wn.matrix() * P);
    BuiltSymplectic out{std::move(A), std::move(wH)};
    detail::ensure(is_left_leibniz(out.algebra), "inner extension is not left Leibniz");
    detail::ensure(is_symplectic_left(out.algebra, out.form), "inner extension is not symplectic");
    return out;
}

struct RankOneData {
    Matrix F, S;
    Vector a0, b0;
    Rational lambda;

    Vector c0() const { return half() * (a0 + b0); }
};

inline Report check_rank_one(const SymplecticLie& gs, const RankOneData& r)
{
    const std::size_t m = gs.dim();
    if (r.F.rows() != m || r.F.cols() != m || r.S.rows() != m || r.S.cols() != m)
        throw std::invalid_argument("rank-one data: F and S must be dim(g) x dim(g)");
    check_same_size(r.a0.size(), m, "rank-one a0");
    check_same_size(r.b0.size(), m, "rank-one b0");
    Matrix Fs = gs.adjoint(r.F);
    Vector c0 = r.c0();
    Report rep;
    auto vec = [&](const std::string& name, const Vector& v) {
        rep.add(name, is_zero(v), is_zero(v) ? "" : "defect " + format_vector(v));
    };
    vec("H0.derivations",
        detail::concat({detail::derivation_defect(gs.g, r.F), detail::derivation_defect(gs.g, r.S - r.F)}));
    Rational w = gs.omega(r.a0, r.b0);
    vec("H1.omega-a0-b0", Vector{w});
    vec("H2.S-a0", r.S.apply(r.a0));
    vec("H3.S-b0", r.S.apply(r.b0));
    vec("H4.F-c0", r.F.apply(c0));
    vec("H5.Fstar-c0", Fs.apply(c0));
    vec("H6.ad-c0", detail::flat(gs.ad(c0)));
    vec("H7.Rstar-c0", detail::flat(gs.right_star(c0)));
    Matrix sf = r.F + Fs;
    vec("H8.Rstar-a0", detail::flat(gs.right_star(r.a0) - (sf * r.F + Fs * sf)));
    Vector sstar;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector v = r.S.apply(gs.star_product(unit_vector(m, a), unit_vector(m, b)));
            sstar.insert(sstar.end(), v.begin(), v.end());
        }
    vec("H9.S-star", sstar);
    vec("H10.S-skew", detail::flat(gs.adjoint(r.S) + r.S));
    vec("H11.S-products",
        detail::concat({detail::flat(r.S * r.S), detail::flat(r.F * r.S), detail::flat(r.S * r.F)}));
    return rep;
}

/// p = 1 extension data: G = S - F, theta = c0, psi = a0, xi = b0, Omega = lambda.
inline ExtensionData rank_one_extension_data(const SymplecticLie& gs, const RankOneData& r)
{
    ExtensionData d = ExtensionData::zero(1, gs.dim());
    d.F[0] = r.F;
    d.G[0] = r.S - r.F;
    d.theta[0][0] = r.c0();
    d.psi[0][0] = r.a0;
    d.xi[0][0] = r.b0;
    d.omega(0, 0, 0) = r.lambda;
    return d;
}

struct RankOneResult {
    Algebra product; // basis (g, e, e*)
    Algebra star;
    SkewForm form;
};

/// Built directly from the rank-one formulas on the basis (g, e, e*), then
/// cross-checked against the general construction and the star of the result.
inline RankOneResult build_rank_one(const SymplecticLie& gs, const RankOneData& r)
{
    detail::require(check_rank_one(gs, r), "rank-one data rejected");
    const std::size_t m = gs.dim(), n = m + 2, e = m, es = m + 1;
    std::vector<std::string> labels = gs.g.labels();
    labels.push_back("e");
    labels.push_back("e*");
    Matrix Fs = gs.adjoint(r.F);
    Matrix K = half() * r.S - r.F - Fs;
    Vector c0 = r.c0();

    Algebra prod(n, labels), star(n, labels);
    for (std::size_t k = 0; k < m; ++k) {
        prod(e, e, k) = c0[k];
        star(e, e, k) = r.a0[k];
    }
    prod(e, e, es) = r.lambda;
    star(e, e, es) = r.lambda;
    for (std::size_t a = 0; a < m; ++a) {
        Vector ea = unit_vector(m, a);
        Vector fa = r.F.apply(ea), ga = r.S.apply(ea) - fa, fsa = -Fs.apply(ea), ka = K.apply(ea);
        for (std::size_t k = 0; k < m; ++k) {
            prod(e, a, k) = fa[k];
            prod(a, e, k) = ga[k];
            star(e, a, k) = fsa[k];
            star(a, e, k) = ka[k];
        }
        prod(e, a, es) = gs.omega(r.a0, ea);
        prod(a, e, es) = gs.omega(r.b0, ea);
        star(e, a, es) = gs.omega(c0, ea);
        star(a, e, es) = gs.omega(r.b0, ea);
        for (std::size_t b = 0; b < m; ++b) {
            Vector eb = unit_vector(m, b);
            Vector br = gs.bracket(ea, eb), st = gs.star_product(ea, eb);
            for (std::size_t k = 0; k < m; ++k) {
                prod(a, b, k) = br[k];
                star(a, b, k) = st[k];
            }
            prod(a, b, es) = gs.omega(K.apply(ea), eb);
            star(a, b, es) = gs.omega((r.S - r.F).apply(ea), eb);
        }
    }
    Matrix W(n, n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            W(a, b) = gs.form.at(a, b);
    W(es, e) = 1;
    W(e, es) = -1;
    RankOneResult out{std::move(prod), std::move(star), SkewForm(std::move(W))};

    // (h, g, h*) -> (g, e, e*)
    std::vector<std::size_t> perm;
    for (std::size_t a = 0; a < m; ++a)
        perm.push_back(1 + a);
    perm.push_back(0);
    perm.push_back(m + 1);
    auto general = build_double_extension(gs, rank_one_extension_data(gs, r));
    if (!(permute(general.algebra, perm) == out.product))
        throw std::logic_error("rank-one product differs from the general construction");
    if (!(star_left(out.product, out.form) == out.star))
        throw std::logic_error("rank-one star differs from the star of the built algebra");
    return out;
}

/// rho from omega(rho(u,v), w) = T(u,v,w); product [,] + rho.
inline Algebra build_bisymplectic_from_T(const SymplecticLie& gs, const Subspace& I, const Cube& T)
{
    const std::size_t n = gs.dim();
    check_same_size(I.ambient_dim(), n, "build_bisymplectic_from_T subspace");
    check_same_size(T.size(), n, "build_bisymplectic_from_T tensor");
    std::vector<std::string> errors;
    if (!center(gs.g).contains(I))
        errors.push_back("I is not central");
    if (!is_isotropic(gs.form, I))
        errors.push_back("I is not isotropic");
    if (!T.is_symmetric())
        errors.push_back("T is not symmetric");
    Subspace Iperp = orthogonal(gs.form, I);
    bool vanishes = true;
    for (std::size_t r = 0; r < Iperp.dim() && vanishes; ++r) {
        Vector w = Iperp.basis_vector(r);
        for (std::size_t i = 0; i < n && vanishes; ++i)
            for (std::size_t j = 0; j < n && vanishes; ++j) {
                Rational s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    s += T(i, j, k) * w[k];
                vanishes = s == 0;
            }
    }
    if (!vanishes)
        errors.push_back("T does not vanish on I-perp");
    if (!errors.empty()) {
        std::string msg = "bi-symplectic builder preconditions violated:";
        for (const auto& e : errors)
            msg += " [" + e + "]";
        throw std::invalid_argument(msg);
    }
    Matrix Wt = gs.form.matrix().transpose();
    Algebra A = gs.g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector rhs(n);
            for (std::size_t k = 0; k < n; ++k)
                rhs[k] = T(i, j, k);
            Vector rho = *solve(Wt, rhs).particular;
            if (!I.contains(rho))
                throw std::logic_error("rho leaves I");
            A.set_product(i, j, A.product(i, j) + rho);
        }
    detail::ensure(is_symmetric_leibniz(A), "T-built algebra is not symmetric Leibniz");
    detail::ensure(is_bi_symplectic(A, gs.form), "T-built algebra is not bi-symplectic");
    return A;
}

struct CommutativeResult {
    Algebra algebra; // basis (h, B, h*)
    SkewForm form;
    Algebra star;
};

/// X.Y in h* with <X.Y, Z> = T(X,Y,Z), everything else zero; omega_n with omega_B.
inline CommutativeResult build_commutative_bisymplectic(std::size_t h_dim, const SkewForm& B, const Cube& T)
{
    if (!B.nondegenerate())
        throw std::invalid_argument("form on B is degenerate");
    if (T.size() != h_dim)
        throw std::invalid_argument("T must be a tensor on h");
    if (!T.is_symmetric())
        throw std::invalid_argument("T is not symmetric");
    const std::size_t p = h_dim, m = B.dim(), n = 2 * p + m;
    std::vector<std::string> labels;
    for (std::size_t X = 0; X < p; ++X)
        labels.push_back("h" + std::to_string(X + 1));
    for (std::size_t a = 0; a < m; ++a)
        labels.push_back("b" + std::to_string(a + 1));
    for (std::size_t X = 0; X < p; ++X)
        labels.push_back("h" + std::to_string(X + 1) + "*");
    Algebra A(n, labels);
    for (std::size_t X = 0; X < p; ++X)
        for (std::size_t Y = 0; Y < p; ++Y)
            for (std::size_t Z = 0; Z < p; ++Z)
                A(X, Y, p + m + Z) = T(X, Y, Z);
    CommutativeResult out{A, detail::omega_n(p, B), A};
    detail::ensure(is_symmetric_leibniz(out.algebra), "commutative algebra is not symmetric Leibniz");
    detail::ensure(is_bi_symplectic(out.algebra, out.form), "commutative algebra is not bi-symplectic");
    Algebra sl = star_left(out.algebra, out.form), sr = star_right(out.algebra, out.form);
    if (!(sl == out.algebra) || !(sr == out.algebra))
        throw std::logic_error("star of the commutative algebra is not the product itself");
    return out;
}

} // namespace sympleib
