#include "support.hpp"

#include <gtest/gtest.h>

using namespace sympleib;
using namespace testing_support;

TEST(Rational, ParsesIntegersAndFractions)
{
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("+7"), Rational(7));
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(to_string(parse_rational("10/5")), "2");
    EXPECT_EQ(to_string(parse_rational("-2/6")), "-1/3");
    EXPECT_EQ(parse_rational("123456789012345678901234567890"), Rational(mpz_class("123456789012345678901234567890")));
}

TEST(Rational, RejectsMalformedText)
{
    for (const char* bad : {"", "1.5", "1e3", "1/0", "1/-2", " 1", "1 ", "/2", "1/", "a", "--1", "0x10"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Matrix, ProductTransposeIdentity)
{
    Matrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
    EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
    EXPECT_EQ(a.transpose(), (Matrix{{1, 3}, {2, 4}}));
    EXPECT_EQ(Matrix::identity(2) * a, a);
    EXPECT_EQ(commutator(a, a), Matrix(2, 2));
    EXPECT_EQ(a.apply({1, -1}), (Vector{-1, -1}));
    EXPECT_THROW(a * Matrix(3, 3), std::invalid_argument);
    EXPECT_THROW((Matrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST(Matrix, DeterminantMatchesLaplace)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 5;
        Matrix m = random_matrix(rng, n, n);
        EXPECT_EQ(determinant(m), laplace_det(m));
    }
}

TEST(Matrix, RankMatchesMinors)
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix m = random_matrix(rng, r, c, 1);
        EXPECT_EQ(rank(m), minor_rank(m));
    }
}

TEST(Matrix, InverseRoundTrip)
{
    std::mt19937_64 rng(13);
    int invertible = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 5;
        Matrix m = random_matrix(rng, n, n);
        auto inv = inverse(m);
        EXPECT_EQ(inv.has_value(), laplace_det(m) != 0);
        if (inv) {
            ++invertible;
            EXPECT_EQ(m * *inv, Matrix::identity(n));
            EXPECT_EQ(*inv * m, Matrix::identity(n));
        }
    }
    EXPECT_GT(invertible, 100);
    ASSERT_TRUE(inverse(Matrix(0, 0)).has_value());
    EXPECT_EQ(inverse(Matrix(0, 0))->rows(), 0u);
    EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST(Matrix, RrefIsCanonical)
{
    Matrix m{{2, 4, 6}, {1, 2, 4}};
    EXPECT_EQ(rref(m), (Matrix{{1, 2, 0}, {0, 0, 1}}));
    Matrix z(2, 3);
    EXPECT_EQ(rref(z), z);
}

TEST(Kernel, BasisIsAnnihilatedAndComplete)
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        Matrix m = random_matrix(rng, r, c, 1);
        Subspace k = kernel(m);
        EXPECT_EQ(k.dim() + minor_rank(m), c);
        for (std::size_t i = 0; i < k.dim(); ++i)
            EXPECT_TRUE(is_zero(m.apply(k.basis_vector(i))));
    }
}

TEST(Solve, ParticularSolutionOrInconsistency)
{
    std::mt19937_64 rng(15);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix m = random_matrix(rng, r, c, 2);
        Vector b = random_vector(rng, r);
        auto s = solve(m, b);
        // oracle: consistent iff rank [m | b] == rank m
        Matrix aug(r, c + 1);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j)
                aug(i, j) = m(i, j);
            aug(i, c) = b[i];
        }
        EXPECT_EQ(s.solvable(), minor_rank(aug) == minor_rank(m));
        if (s.solvable()) {
            EXPECT_EQ(m.apply(*s.particular), b);
            EXPECT_EQ(s.kernel.dim(), c - minor_rank(m));
        }
    }
}

TEST(Subspace, CanonicalRepresentative)
{
    Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
    Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_TRUE(a.contains(Vector{3, 1, -2}));
    EXPECT_FALSE(a.contains(Vector{1, 0, 0}));
    EXPECT_TRUE(Subspace::full(3).contains(a));
    EXPECT_FALSE(a.contains(Subspace::full(3)));
    EXPECT_TRUE(Subspace(3).is_zero());
}

TEST(Subspace, SumAndIntersectionDimensions)
{
    std::mt19937_64 rng(16);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 2 + rng() % 4;
        std::vector<Vector> ua, ub;
        for (std::size_t i = 0, k = rng() % (n + 1); i < k; ++i)
            ua.push_back(random_vector(rng, n, 1));
        for (std::size_t i = 0, k = rng() % (n + 1); i < k; ++i)
            ub.push_back(random_vector(rng, n, 1));
        Subspace a = Subspace::span(n, ua), b = Subspace::span(n, ub);
        Subspace s = sum(a, b), i = intersect(a, b);
        EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
        EXPECT_TRUE(s.contains(a) && s.contains(b));
        EXPECT_TRUE(a.contains(i) && b.contains(i));
        Subspace perp = dot_complement(a);
        EXPECT_EQ(perp.dim() + a.dim(), n);
        for (std::size_t r = 0; r < perp.dim(); ++r)
            for (std::size_t q = 0; q < a.dim(); ++q)
                EXPECT_EQ(dot(perp.basis_vector(r), a.basis_vector(q)), 0);
    }
}

TEST(Subspace, ResidualVanishesOnMembers)
{
    Subspace a = Subspace::span(4, {{1, 0, 2, 0}, {0, 1, 0, 3}});
    EXPECT_TRUE(is_zero(a.residual({2, -1, 4, -3})));
    Vector r = a.residual({1, 1, 1, 1});
    EXPECT_FALSE(is_zero(r));
    for (auto p : a.pivots())
        EXPECT_EQ(r[p], 0);
}

TEST(Subspace, ComplementRowsExtendsBasis)
{
    Subspace base = Subspace::span(4, {{1, 1, 0, 0}});
    std::vector<Vector> cand;
    for (std::size_t i = 0; i < 4; ++i)
        cand.push_back(unit_vector(4, i));
    auto extra = complement_rows(base, cand);
    EXPECT_EQ(extra.size(), 3u);
    auto all = extra;
    all.push_back(base.basis_vector(0));
    EXPECT_EQ(Subspace::span(4, all).dim(), 4u);
}
