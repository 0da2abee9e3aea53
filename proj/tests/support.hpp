#pragma once

// Shared helpers for the test suites: seeded generators and naive oracles.

#include "sympleib/catalog.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using namespace sympleib;

inline Rational small(std::mt19937_64& rng, int bound = 3)
{
    return Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 3)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = small(rng, bound);
    return m;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, int bound = 3)
{
    Vector v(n);
    for (auto& x : v)
        x = small(rng, bound);
    return v;
}

/// Sparse random structure constants (about `density` percent nonzero).
inline Algebra random_algebra(std::mt19937_64& rng, std::size_t n, int density = 20)
{
    Algebra A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (static_cast<int>(rng() % 100) < density)
                    A(i, j, k) = small(rng, 2);
    return A;
}

inline SkewForm random_form(std::mt19937_64& rng, std::size_t n)
{
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            w(i, j) = small(rng, 2);
            w(j, i) = -w(i, j);
        }
    return SkewForm(w);
}

/// Laplace expansion along the first row.
inline Rational laplace_det(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Rational d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, jj++) = m(i, j);
        Rational t = m(0, c) * laplace_det(minor);
        d += (c % 2 == 0) ? t : Rational(-t);
    }
    return d;
}

/// Rank as the largest k with a nonzero k x k minor (brute force over row/column subsets).
inline std::size_t minor_rank(const Matrix& m)
{
    const std::size_t r = m.rows(), c = m.cols();
    std::size_t best = 0;
    for (std::uint32_t rs = 1; rs < (1u << r); ++rs)
        for (std::uint32_t cs = 1; cs < (1u << c); ++cs) {
            std::size_t k = static_cast<std::size_t>(__builtin_popcount(rs));
            if (k != static_cast<std::size_t>(__builtin_popcount(cs)) || k <= best)
                continue;
            std::vector<std::size_t> ri, ci;
            for (std::size_t i = 0; i < r; ++i)
                if (rs >> i & 1u)
                    ri.push_back(i);
            for (std::size_t j = 0; j < c; ++j)
                if (cs >> j & 1u)
                    ci.push_back(j);
            Matrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    sub(a, b) = m(ri[a], ci[b]);
            if (laplace_det(sub) != 0)
                best = k;
        }
    return best;
}

/// u.v on full vectors, straight from the structure constants.
inline Vector naive_product(const Algebra& A, const Vector& u, const Vector& v)
{
    const std::size_t n = A.dim();
    Vector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out[k] += u[i] * v[j] * A(i, j, k);
    return out;
}

inline Rational naive_omega(const SkewForm& w, const Vector& u, const Vector& v)
{
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            s += u[i] * w.at(i, j) * v[j];
    return s;
}

/// Symplectic catalog instances: one per sample over every family claiming left-symplectic or bi-symplectic.
inline std::vector<std::pair<std::string, Instance>> symplectic_instances(std::uint64_t seed, std::size_t per_family)
{
    std::vector<std::pair<std::string, Instance>> out;
    std::mt19937_64 rng(seed);
    for (const auto& f : families()) {
        bool sympl = false;
        for (Claim c : f.claims)
            sympl = sympl || c == Claim::left_symplectic || c == Claim::bi_symplectic;
        if (!sympl || f.id == "RR3_SIXDIM_B0")
            continue;
        out.emplace_back(f.id, instantiate(f.id, f.defaults));
        for (std::size_t s = 0; s < per_family; ++s)
            out.emplace_back(f.id, f.build(draw_sample(f, rng).second));
    }
    return out;
}

} // namespace testing_support
