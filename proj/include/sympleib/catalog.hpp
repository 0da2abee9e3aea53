#pragma once

// Concrete families: parameterised structure constants and forms, the claims
// each family makes, and a seeded sampler that checks them.

#include "sympleib/core.hpp"
#include "sympleib/extension.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace sympleib {

using Params = std::map<std::string, Rational>;

/// A polynomial predicate: value(params) == 0 or value(params) != 0.
struct Constraint {
    std::string text;
    bool nonzero = true;
    std::function<Rational(const Params&)> value;

    bool satisfied(const Params& p) const { return nonzero ? value(p) != 0 : value(p) == 0; }
};

/// A branch fixes some parameters (the equality constraints solved by substitution).
struct Branch {
    std::string name;
    Params fixed;
};

enum class Claim {
    left_leibniz,
    right_leibniz,
    symmetric_leibniz,
    left_symplectic,
    right_symplectic,
    bi_symplectic,
    non_lie,
    lie,
    reduced_system,
    core_nonabelian_2,
};

inline std::string to_string(Claim c)
{
    switch (c) {
    case Claim::left_leibniz:
        return "left-leibniz";
    case Claim::right_leibniz:
        return "right-leibniz";
    case Claim::symmetric_leibniz:
        return "symmetric-leibniz";
    case Claim::left_symplectic:
        return "left-symplectic";
    case Claim::right_symplectic:
        return "right-symplectic";
    case Claim::bi_symplectic:
        return "bi-symplectic";
    case Claim::non_lie:
        return "non-lie";
    case Claim::lie:
        return "lie";
    case Claim::reduced_system:
        return "reduced-system";
    case Claim::core_nonabelian_2:
        return "core-2d-nonabelian";
    }
    return "?";
}

/// Extension data an instance was generated from (over its own g).
struct ExtensionSource {
    SymplecticLie g;
    ExtensionData data;
};

struct Instance {
    Algebra algebra;
    SkewForm form;
    std::optional<ExtensionSource> extension;
};

struct FamilySpec {
    std::string id;
    std::string summary;
    std::vector<std::string> params;
    Params defaults;
    std::vector<Constraint> constraints;
    std::vector<Branch> branches;
    std::vector<Claim> claims;
    std::string notes;
    std::function<Instance(const Params&)> build;
};

class ConstraintViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace catalog_detail {

using Terms = std::vector<std::pair<std::size_t, Rational>>;

struct Entry {
    std::size_t i, j; // 1-based
    Terms terms;      // 1-based target index -> coefficient
};

inline Algebra table(std::size_t n, const std::vector<Entry>& entries)
{
    Algebra A(n);
    for (const auto& e : entries)
        for (const auto& [k, v] : e.terms)
            A(e.i - 1, e.j - 1, k - 1) += v;
    return A;
}

struct FormEntry {
    std::size_t i, j; // 1-based
    Rational value;
};

inline SkewForm form(std::size_t n, const std::vector<FormEntry>& entries)
{
    std::vector<SkewForm::Entry> es;
    for (const auto& e : entries)
        es.push_back({e.i - 1, e.j - 1, e.value});
    return SkewForm::from_entries(n, es);
}

inline Constraint nonzero(std::string text, std::function<Rational(const Params&)> f)
{
    return {std::move(text), true, std::move(f)};
}

inline Constraint equals_zero(std::string text, std::function<Rational(const Params&)> f)
{
    return {std::move(text), false, std::move(f)};
}

inline Constraint nonzero_param(const std::string& name)
{
    return nonzero(name + " != 0", [name](const Params& p) -> Rational { return p.at(name); });
}

inline Params ones(const std::vector<std::string>& names)
{
    Params p;
    for (const auto& n : names)
        p[n] = 1;
    return p;
}

inline SymplecticLie abelian2()
{
    return SymplecticLie::make(Algebra(2), form(2, {{1, 2, 1}}));
}

/// [e,f] = lambda e, omega = e^* ^ f^*
inline SymplecticLie nonabelian2(const Rational& lambda)
{
    return SymplecticLie::make(table(2, {{1, 2, {{1, lambda}}}, {2, 1, {{1, -lambda}}}}), form(2, {{1, 2, 1}}));
}

inline SymplecticLie rr3()
{
    Algebra g = table(4, {{1, 2, {{2, 1}}}, {2, 1, {{2, -1}}}, {1, 3, {{3, -1}}}, {3, 1, {{3, 1}}}});
    return SymplecticLie::make(std::move(g), form(4, {{1, 4, 1}, {2, 3, 1}}));
}

/// Canonical kernel basis of the Omega condition at p = 2.
inline const Subspace& omega_space2()
{
    static const Subspace s = omega_condition_space(2);
    return s;
}

inline std::vector<std::string> omega_params()
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < omega_space2().dim(); ++i)
        out.push_back("om" + std::to_string(i + 1));
    return out;
}

inline Cube omega_from_params(const Params& P)
{
    const Subspace& s = omega_space2();
    Vector v = zero_vector(8);
    for (std::size_t i = 0; i < s.dim(); ++i)
        v = v + P.at("om" + std::to_string(i + 1)) * s.basis_vector(i);
    return cube_from_flat(2, v);
}

/// Sum of squares of the 2x2 minors of (X,Y) -> Omega(X)(Y,.) + Omega(Y)(X,.).
inline Rational omega_sym_spread(const Params& P)
{
    Cube O = omega_from_params(P);
    std::vector<std::pair<Rational, Rational>> cols;
    for (std::size_t X = 0; X < 2; ++X)
        for (std::size_t Y = 0; Y < 2; ++Y)
            cols.emplace_back(O(X, Y, 0) + O(Y, X, 0), O(X, Y, 1) + O(Y, X, 1));
    Rational sum = 0;
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            Rational minor = cols[a].first * cols[b].second - cols[a].second * cols[b].first;
            sum += minor * minor;
        }
    return sum;
}

inline std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline Instance from_extension(SymplecticLie gs, ExtensionData d)
{
    BuiltSymplectic b = assemble_double_extension(gs, d);
    return {std::move(b.algebra), std::move(b.form), ExtensionSource{std::move(gs), std::move(d)}};
}

inline const std::vector<Claim>& bs4_claims()
{
    static const std::vector<Claim> c = {Claim::symmetric_leibniz, Claim::bi_symplectic, Claim::non_lie};
    return c;
}

inline FamilySpec bs4(std::string id, std::string summary, std::vector<std::string> params, bool nonlie,
                      std::vector<Constraint> constraints, std::function<Instance(const Params&)> build)
{
    FamilySpec f;
    f.id = std::move(id);
    f.summary = std::move(summary);
    f.params = std::move(params);
    f.defaults = ones(f.params);
    f.constraints = std::move(constraints);
    f.claims = nonlie ? bs4_claims() : std::vector<Claim>{Claim::symmetric_leibniz, Claim::bi_symplectic};
    f.build = std::move(build);
    return f;
}

// bracket shared by BS4_H..BS4_K: [e1,e2] = e2
inline std::vector<Entry> h_bracket()
{
    return {{1, 2, {{2, 1}}}, {2, 1, {{2, -1}}}};
}

inline std::vector<Entry> plus(std::vector<Entry> a, const std::vector<Entry>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline std::vector<FamilySpec> bs4_families()
{
    std::vector<FamilySpec> out;
    auto w1423 = [] { return form(4, {{1, 4, 1}, {2, 3, 1}}); };
    auto w1234 = [] { return form(4, {{1, 2, 1}, {3, 4, 1}}); };
    auto x_nz = nonzero_param("x");
    auto a_nz = nonzero_param("aa");

    out.push_back(bs4("BS4_A", "e1.e1 = x e3 + y e4, e1.e2 = e2.e1 = y e3 + z e4, e2.e2 = z e3 + t e4; w = e13 + e24",
                      {"x", "y", "z", "t"}, false, {}, [](const Params& P) {
                          const auto &x = P.at("x"), &y = P.at("y"), &z = P.at("z"), &t = P.at("t");
                          Algebra A = table(4, {{1, 1, {{3, x}, {4, y}}},
                                                {1, 2, {{3, y}, {4, z}}},
                                                {2, 1, {{3, y}, {4, z}}},
                                                {2, 2, {{3, z}, {4, t}}}});
                          return Instance{A, form(4, {{1, 3, 1}, {2, 4, 1}}), std::nullopt};
                      }));
    out.back().defaults = {{"x", 1}, {"y", 2}, {"z", 3}, {"t", 4}};

    out.push_back(bs4("BS4_B", "e1.e1 = x e4; w = e14 + e23", {"x"}, true, {x_nz}, [=](const Params& P) {
        return Instance{table(4, {{1, 1, {{4, P.at("x")}}}}), w1423(), std::nullopt};
    }));

    out.push_back(bs4("BS4_C",
                      "e1.e2 = (1+z) e3 + y e4, e2.e1 = (z-1) e3 + y e4, e1.e1 = y e3 + x e4, e2.e2 = t e3 + z e4; "
                      "w = e14 + e23",
                      {"x", "y", "z", "t"}, false, {}, [=](const Params& P) {
                          const auto &x = P.at("x"), &y = P.at("y"), &z = P.at("z"), &t = P.at("t");
                          Algebra A = table(4, {{1, 2, {{3, 1 + z}, {4, y}}},
                                                {2, 1, {{3, z - 1}, {4, y}}},
                                                {1, 1, {{3, y}, {4, x}}},
                                                {2, 2, {{3, t}, {4, z}}}});
                          return Instance{A, w1423(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_D", "e1.e2 = -e2.e1 = e3, e2.e2 = x e3; w = e14 + e23", {"x"}, true, {x_nz},
                      [=](const Params& P) {
                          Algebra A = table(4, {{1, 2, {{3, 1}}}, {2, 1, {{3, -1}}}, {2, 2, {{3, P.at("x")}}}});
                          return Instance{A, w1423(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_E",
                      "e1.e2 = (1+x/a) e3 + x e4, e2.e1 = (x/a-1) e3 + x e4, e1.e1 = x e3 + a x e4, "
                      "e2.e2 = x/a^2 e3 + x/a e4; w = e14 + e23",
                      {"x", "aa"}, true, {x_nz, a_nz}, [=](const Params& P) {
                          const Rational &x = P.at("x"), &a = P.at("aa");
                          Rational xa = x / a;
                          Algebra A = table(4, {{1, 2, {{3, 1 + xa}, {4, x}}},
                                                {2, 1, {{3, xa - 1}, {4, x}}},
                                                {1, 1, {{3, x}, {4, a * x}}},
                                                {2, 2, {{3, xa / a}, {4, xa}}}});
                          return Instance{A, w1423(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_F", "e1.e2 = -e2.e1 = e3, e1.e1 = x e4; w = e14 + e23", {"x"}, true, {x_nz},
                      [=](const Params& P) {
                          Algebra A = table(4, {{1, 2, {{3, 1}}}, {2, 1, {{3, -1}}}, {1, 1, {{4, P.at("x")}}}});
                          return Instance{A, w1423(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_G",
                      "e1.e2 = (1+x) e3 + x/a e4, e2.e1 = (x-1) e3 + x/a e4, e1.e1 = x/a e3 + x/a^2 e4, "
                      "e2.e2 = a x e3 + x e4; w = e14 + e23",
                      {"x", "aa"}, true, {x_nz, a_nz}, [=](const Params& P) {
                          const Rational &x = P.at("x"), &a = P.at("aa");
                          Rational xa = x / a;
                          Algebra A = table(4, {{1, 2, {{3, 1 + x}, {4, xa}}},
                                                {2, 1, {{3, x - 1}, {4, xa}}},
                                                {1, 1, {{3, xa}, {4, xa / a}}},
                                                {2, 2, {{3, a * x}, {4, x}}}});
                          return Instance{A, w1423(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_H", "e1.e2 = -e2.e1 = e2, e4.e4 = x e3; w = e12 + e34", {"x"}, true, {x_nz},
                      [=](const Params& P) {
                          Algebra A = table(4, plus(h_bracket(), {{4, 4, {{3, P.at("x")}}}}));
                          return Instance{A, w1234(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_I",
                      "e1.e2 = -e2.e1 = e2, e3.e3 = x e3 - a x e4, e3.e4 = e4.e3 = x/a e3 - x e4, "
                      "e4.e4 = x/a^2 e3 - x/a e4; w = e12 + e34",
                      {"x", "aa"}, true, {x_nz, a_nz}, [=](const Params& P) {
                          const Rational &x = P.at("x"), &a = P.at("aa");
                          Rational xa = x / a;
                          Algebra A = table(4, plus(h_bracket(), {{3, 3, {{3, x}, {4, -(a * x)}}},
                                                                  {3, 4, {{3, xa}, {4, -x}}},
                                                                  {4, 3, {{3, xa}, {4, -x}}},
                                                                  {4, 4, {{3, xa / a}, {4, -xa}}}}));
                          return Instance{A, w1234(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_J", "e1.e2 = -e2.e1 = e2, e3.e3 = x e4; w = e12 + e34", {"x"}, true, {x_nz},
                      [=](const Params& P) {
                          Algebra A = table(4, plus(h_bracket(), {{3, 3, {{4, P.at("x")}}}}));
                          return Instance{A, w1234(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_K",
                      "e1.e2 = -e2.e1 = e2, e3.e3 = x e3 - x/a e4, e3.e4 = e4.e3 = a x e3 - x e4, "
                      "e4.e4 = a^2 x e3 - a x e4; w = e12 + e34",
                      {"x", "aa"}, true, {x_nz, a_nz}, [=](const Params& P) {
                          const Rational &x = P.at("x"), &a = P.at("aa");
                          Rational ax = a * x;
                          Algebra A = table(4, plus(h_bracket(), {{3, 3, {{3, x}, {4, -(x / a)}}},
                                                                  {3, 4, {{3, ax}, {4, -x}}},
                                                                  {4, 3, {{3, ax}, {4, -x}}},
                                                                  {4, 4, {{3, a * ax}, {4, -ax}}}}));
                          return Instance{A, w1234(), std::nullopt};
                      }));

    out.push_back(bs4("BS4_L", "e1.e2 = -e2.e1 = e2, e1.e3 = -e3.e1 = -e3, e1.e1 = x e4; w = e14 + e23", {"x"},
                      true, {x_nz}, [=](const Params& P) {
                          Algebra A = table(4, {{1, 2, {{2, 1}}},
                                                {2, 1, {{2, -1}}},
                                                {1, 3, {{3, -1}}},
                                                {3, 1, {{3, 1}}},
                                                {1, 1, {{4, P.at("x")}}}});
                          return Instance{A, w1423(), std::nullopt};
                      }));

    {
        auto f = bs4("BS4_M", "e4.e1 = -e1.e4 = e1, e4.e3 = -e3.e4 = e2, e3.e3 = x e2; w = e14 + sign e23",
                     {"x", "sign"}, true,
                     {x_nz, equals_zero("sign^2 - 1 = 0",
                                        [](const Params& P) -> Rational { return P.at("sign") * P.at("sign") - 1; })},
                     [](const Params& P) {
                         Algebra A = table(4, {{4, 1, {{1, 1}}},
                                               {1, 4, {{1, -1}}},
                                               {4, 3, {{2, 1}}},
                                               {3, 4, {{2, -1}}},
                                               {3, 3, {{2, P.at("x")}}}});
                         return Instance{A, form(4, {{1, 4, 1}, {2, 3, P.at("sign")}}), std::nullopt};
                     });
        f.branches = {{"sign=+1", {{"sign", 1}}}, {"sign=-1", {{"sign", -1}}}};
        f.notes = "sign selects the two forms e14 + e23 and e14 - e23";
        out.push_back(std::move(f));
    }

    out.push_back(bs4("BS4_N", "e4.e1 = -e1.e4 = e2, e4.e2 = -e2.e4 = e3, e4.e4 = x e3; w = e12 + e34", {"x"},
                      true, {x_nz}, [=](const Params& P) {
                          Algebra A = table(4, {{4, 1, {{2, 1}}},
                                                {1, 4, {{2, -1}}},
                                                {4, 2, {{3, 1}}},
                                                {2, 4, {{3, -1}}},
                                                {4, 4, {{3, P.at("x")}}}});
                          return Instance{A, w1234(), std::nullopt};
                      }));

    for (auto& f : out)
        if (f.id == "BS4_E" || f.id == "BS4_G" || f.id == "BS4_I" || f.id == "BS4_K")
            f.notes = "aa is the display's a";
    return out;
}

/// F = b1 E21 + b2 E31 + b3 E41 - b E22 + b E33, S = s E41, a0 = (z, b1 b, b2 b, y), c0 = x e4.
inline RankOneData rr3_rank_one(const Params& P)
{
    const Rational &b = P.at("b"), &b1 = P.at("b1"), &b2 = P.at("b2"), &b3 = P.at("b3");
    const Rational &s = P.at("s"), &x = P.at("x"), &y = P.at("y"), &z = P.at("z");
    RankOneData r;
    r.F = Matrix(4, 4);
    r.F(1, 0) = b1;
    r.F(2, 0) = b2;
    r.F(3, 0) = b3;
    r.F(1, 1) = -b;
    r.F(2, 2) = b;
    r.S = Matrix(4, 4);
    r.S(3, 0) = s;
    r.a0 = {z, b1 * b, b2 * b, y};
    Vector c0 = {0, 0, 0, x};
    r.b0 = Rational(2) * c0 - r.a0;
    r.lambda = P.at("lambda");
    return r;
}

inline std::vector<Constraint> rr3_constraints()
{
    return {equals_zero("z*x = 0", [](const Params& P) -> Rational { return P.at("z") * P.at("x"); }),
            equals_zero("z*s = 0", [](const Params& P) -> Rational { return P.at("z") * P.at("s"); })};
}

inline std::vector<Branch> rr3_branches()
{
    return {{"z=0", {{"z", 0}}}, {"x=s=0", {{"x", 0}, {"s", 0}}}};
}

inline std::vector<FamilySpec> rr3_families()
{
    std::vector<FamilySpec> out;
    const std::vector<Claim> claims = {Claim::left_leibniz, Claim::left_symplectic};

    {
        FamilySpec f;
        f.id = "RR3_SIXDIM_RAW";
        f.summary = "rank-one extension of rr(3,-1): basis (e1..e4, e5 = e, e6 = e*); w = e14 + e23 - e56";
        f.params = {"b", "b1", "b2", "b3", "s", "x", "y", "z", "lambda"};
        f.defaults = ones(f.params);
        f.defaults["z"] = 0;
        f.constraints = rr3_constraints();
        f.branches = rr3_branches();
        f.claims = {Claim::left_leibniz, Claim::left_symplectic, Claim::reduced_system};
        f.notes = "F = b1 E21 + b2 E31 + b3 E41 - b E22 + b E33, S = s E41, a0 = (z, b1 b, b2 b, y), c0 = x e4";
        f.build = [](const Params& P) {
            const Rational &b = P.at("b"), &b1 = P.at("b1"), &b2 = P.at("b2"), &b3 = P.at("b3");
            const Rational &s = P.at("s"), &x = P.at("x"), &y = P.at("y"), &z = P.at("z"), &l = P.at("lambda");
            Rational bb1 = b1 * b, bb2 = b2 * b;
            Algebra A = table(6, {{5, 1, {{2, b1}, {3, b2}, {4, b3}, {6, -y}}},
                                  {5, 2, {{2, -b}, {6, -bb2}}},
                                  {5, 3, {{3, b}, {6, bb1}}},
                                  {1, 5, {{2, -b1}, {3, -b2}, {4, s - b3}, {6, y - 2 * x}}},
                                  {2, 5, {{2, b}, {6, bb2}}},
                                  {3, 5, {{3, -b}, {6, -bb1}}},
                                  {5, 4, {{6, z}}},
                                  {4, 5, {{6, -z}}},
                                  {1, 2, {{2, 1}, {6, b2}}},
                                  {2, 1, {{2, -1}, {6, -b2}}},
                                  {1, 3, {{3, -1}, {6, -b1}}},
                                  {3, 1, {{3, 1}, {6, b1}}},
                                  {1, 1, {{6, -s / 2}}},
                                  {5, 5, {{4, x}, {6, l}}}});
            SymplecticLie g = rr3();
            ExtensionData d = rank_one_extension_data(g, rr3_rank_one(P));
            return Instance{A, form(6, {{1, 4, 1}, {2, 3, 1}, {5, 6, -1}}), ExtensionSource{std::move(g), d}};
        };
        out.push_back(std::move(f));
    }

    // shared tail of the two normalised tables, Y = y + 2 b2 b1
    auto tail = [](const Params& P) {
        const Rational &b1 = P.at("b1"), &b2 = P.at("b2"), &b3 = P.at("b3");
        const Rational &s = P.at("s"), &x = P.at("x"), &y = P.at("y"), &z = P.at("z"), &l = P.at("lambda");
        Rational Y = y + 2 * b2 * b1;
        return std::vector<Entry>{{5, 1, {{4, b3}, {6, -Y}}},
                                  {1, 5, {{4, s - b3}, {6, Y - 2 * x}}},
                                  {5, 4, {{6, z}}},
                                  {4, 5, {{6, -z}}},
                                  {1, 2, {{2, 1}}},
                                  {2, 1, {{2, -1}}},
                                  {1, 3, {{3, -1}}},
                                  {3, 1, {{3, 1}}},
                                  {1, 1, {{6, -s / 2}}},
                                  {5, 5, {{4, x}, {6, l}}}};
    };

    {
        FamilySpec f;
        f.id = "RR3_SIXDIM_B0";
        f.summary = "b = 0 normal form; w = e14 + e23 - e56 + 2 b2 e25 + 2 b1 e35";
        f.params = {"b1", "b2", "b3", "s", "x", "y", "z", "lambda"};
        f.defaults = ones(f.params);
        f.defaults["z"] = 0;
        f.constraints = rr3_constraints();
        f.branches = rr3_branches();
        f.claims = claims;
        f.notes = "Y = y + 2 b2 b1 in the table";
        f.build = [tail](const Params& P) {
            const Rational &b1 = P.at("b1"), &b2 = P.at("b2");
            return Instance{table(6, tail(P)),
                            form(6, {{1, 4, 1}, {2, 3, 1}, {5, 6, -1}, {2, 5, 2 * b2}, {3, 5, 2 * b1}}),
                            std::nullopt};
        };
        out.push_back(std::move(f));
    }

    {
        FamilySpec f;
        f.id = "RR3_SIXDIM_BNE0";
        f.summary = "b != 0 normal form; w = b2 e12 + b1 e13 + e14 + e23 - e56 + b2 e25 + b1 e35";
        f.params = {"b1", "b2", "b3", "s", "x", "y", "z", "lambda"};
        f.defaults = ones(f.params);
        f.defaults["z"] = 0;
        f.constraints = rr3_constraints();
        f.branches = rr3_branches();
        f.claims = claims;
        f.notes = "Y = y + 2 b2 b1 in the table";
        f.build = [tail](const Params& P) {
            const Rational &b1 = P.at("b1"), &b2 = P.at("b2");
            auto t = plus(tail(P), {{5, 2, {{2, -1}}}, {2, 5, {{2, 1}}}, {5, 3, {{3, 1}}}, {3, 5, {{3, -1}}}});
            return Instance{
                table(6, t),
                form(6, {{1, 2, b2}, {1, 3, b1}, {1, 4, 1}, {2, 3, 1}, {5, 6, -1}, {2, 5, b2}, {3, 5, b1}}),
                std::nullopt};
        };
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<FamilySpec> extension_families()
{
    std::vector<FamilySpec> out;
    const auto om = omega_params();
    const std::vector<Claim> claims = {Claim::left_leibniz, Claim::left_symplectic, Claim::reduced_system};

    {
        FamilySpec f;
        f.id = "CORE2_NONABELIAN";
        f.summary = "p = 2 extension of [e,f] = lambda e, w = e^* ^ f^*: F(X) = [[alpha(X), beta(X)], [0, 0]], "
                    "G = -F, theta = (alpha ^ beta)/lambda e, psi = ((alpha ^ beta)/(2 lambda) + mu) e + "
                    "alpha (x) alpha/lambda f, xi = -psi";
        f.params = concat({"lambda", "al1", "al2", "be1", "be2", "mu11", "mu12", "mu22"}, om);
        f.defaults = ones(f.params);
        f.defaults["om2"] = 2;
        f.defaults["om3"] = 3;
        f.defaults["om4"] = -1;
        f.defaults["om5"] = 2;
        f.constraints = {nonzero_param("lambda"), nonzero("sym(Omega) spans h^*", omega_sym_spread)};
        f.claims = {Claim::left_leibniz, Claim::left_symplectic, Claim::reduced_system, Claim::core_nonabelian_2};
        f.notes = "p = 2 is fixed; om1..omk are coordinates in the canonical basis of the Omega condition; "
                  "the vectors Omega(X)(Y,.) + Omega(Y)(X,.) must span h^* (sum of squared 2x2 minors != 0)";
        f.build = [](const Params& P) {
            const Rational& l = P.at("lambda");
            const Rational al[2] = {P.at("al1"), P.at("al2")}, be[2] = {P.at("be1"), P.at("be2")};
            const Rational mu[2][2] = {{P.at("mu11"), P.at("mu12")}, {P.at("mu12"), P.at("mu22")}};
            ExtensionData d = ExtensionData::zero(2, 2);
            for (std::size_t X = 0; X < 2; ++X) {
                d.F[X] = Matrix{{al[X], be[X]}, {0, 0}};
                d.G[X] = -d.F[X];
                for (std::size_t Y = 0; Y < 2; ++Y) {
                    Rational wedge = al[X] * be[Y] - al[Y] * be[X];
                    d.theta[X][Y] = {wedge / l, 0};
                    d.psi[X][Y] = {wedge / (2 * l) + mu[X][Y], al[X] * al[Y] / l};
                    d.xi[X][Y] = -d.psi[X][Y];
                }
            }
            d.omega = omega_from_params(P);
            return from_extension(nonabelian2(l), std::move(d));
        };
        out.push_back(std::move(f));
    }

    {
        FamilySpec f;
        f.id = "ABEL2_CASE1";
        f.summary = "p = 2 extension of the abelian plane, w = e^* ^ f^*: S(X) = alpha(X) E12, F(X) = beta(X) E12, "
                    "G = S - F, psi = sigma + A, xi = tau - A, theta(X,Y) = xi(Y,X) + psi(X,Y)/2 - xi(X,Y)/2, "
                    "all along e";
        f.params = concat(
            {"al1", "al2", "be1", "be2", "sig11", "sig12", "sig22", "tau11", "tau12", "tau22", "A12"}, om);
        f.defaults = ones(f.params);
        f.constraints = {nonzero("al1^2 + al2^2 != 0", [](const Params& P) -> Rational {
            return P.at("al1") * P.at("al1") + P.at("al2") * P.at("al2");
        })};
        f.claims = claims;
        f.notes = "sigma, tau symmetric, A antisymmetric; p = 2 is fixed";
        f.build = [](const Params& P) {
            const Rational al[2] = {P.at("al1"), P.at("al2")}, be[2] = {P.at("be1"), P.at("be2")};
            const Rational sig[2][2] = {{P.at("sig11"), P.at("sig12")}, {P.at("sig12"), P.at("sig22")}};
            const Rational tau[2][2] = {{P.at("tau11"), P.at("tau12")}, {P.at("tau12"), P.at("tau22")}};
            const Rational A[2][2] = {{0, P.at("A12")}, {-P.at("A12"), 0}};
            ExtensionData d = ExtensionData::zero(2, 2);
            Rational psi[2][2], xi[2][2];
            for (std::size_t X = 0; X < 2; ++X) {
                d.F[X] = Matrix{{0, be[X]}, {0, 0}};
                d.G[X] = Matrix{{0, al[X] - be[X]}, {0, 0}};
                for (std::size_t Y = 0; Y < 2; ++Y) {
                    psi[X][Y] = sig[X][Y] + A[X][Y];
                    xi[X][Y] = tau[X][Y] - A[X][Y];
                }
            }
            for (std::size_t X = 0; X < 2; ++X)
                for (std::size_t Y = 0; Y < 2; ++Y) {
                    d.psi[X][Y] = {psi[X][Y], 0};
                    d.xi[X][Y] = {xi[X][Y], 0};
                    d.theta[X][Y] = {xi[Y][X] + psi[X][Y] / 2 - xi[X][Y] / 2, 0};
                }
            d.omega = omega_from_params(P);
            return from_extension(abelian2(), std::move(d));
        };
        out.push_back(std::move(f));
    }

    {
        FamilySpec f;
        f.id = "ABEL2_CASE2";
        f.summary = "p = 2 extension of the abelian plane, w = e^* ^ f^*: alpha = X1^*, F(X) = alpha(X) [[aa, b], "
                    "[c, -aa]], G = -F, psi(X1,Y) = (u,v)(Y), psi(X2,.) = 0, theta(X,Y) = psi(X,Y) - psi(Y,X), "
                    "xi = -psi";
        f.params = concat({"aa", "b", "c", "u1", "u2", "v1", "v2"}, om);
        f.defaults = ones(f.params);
        f.defaults["b"] = 0;
        f.constraints = {nonzero("aa^2 + b*c != 0", [](const Params& P) -> Rational {
            return P.at("aa") * P.at("aa") + P.at("b") * P.at("c");
        })};
        f.claims = claims;
        f.notes = "h basis chosen with alpha = X1^*; psi(X1,X1) = u1 e + u2 f, psi(X1,X2) = v1 e + v2 f; p = 2 is fixed";
        f.build = [](const Params& P) {
            const Rational &a = P.at("aa"), &b = P.at("b"), &c = P.at("c");
            ExtensionData d = ExtensionData::zero(2, 2);
            d.F[0] = Matrix{{a, b}, {c, -a}};
            d.G[0] = -d.F[0];
            d.psi[0][0] = {P.at("u1"), P.at("u2")};
            d.psi[0][1] = {P.at("v1"), P.at("v2")};
            for (std::size_t X = 0; X < 2; ++X)
                for (std::size_t Y = 0; Y < 2; ++Y) {
                    d.theta[X][Y] = d.psi[X][Y] - d.psi[Y][X];
                    d.xi[X][Y] = -d.psi[X][Y];
                }
            d.omega = omega_from_params(P);
            return from_extension(abelian2(), std::move(d));
        };
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<FamilySpec> make_families()
{
    std::vector<FamilySpec> out;
    {
        FamilySpec f;
        f.id = "DIM2_NONLIE";
        f.summary = "e2.e2 = x e1; w = e12";
        f.params = {"x"};
        f.defaults = {{"x", 1}};
        f.constraints = {nonzero_param("x")};
        f.claims = {Claim::symmetric_leibniz, Claim::bi_symplectic, Claim::non_lie};
        f.build = [](const Params& P) {
            return Instance{table(2, {{2, 2, {{1, P.at("x")}}}}), form(2, {{1, 2, 1}}), std::nullopt};
        };
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "R4_LEFT";
        f.summary = "e1.e1 = e4, e1.e2 = -e2.e1 = e3, e1.e3 = -e3.e1 = e4; w = e14 + e23";
        f.claims = {Claim::left_leibniz, Claim::left_symplectic, Claim::non_lie};
        f.build = [](const Params&) {
            Algebra A = table(4, {{1, 1, {{4, 1}}},
                                  {1, 2, {{3, 1}}},
                                  {1, 3, {{4, 1}}},
                                  {2, 1, {{3, -1}}},
                                  {3, 1, {{4, -1}}}});
            return Instance{A, form(4, {{1, 4, 1}, {2, 3, 1}}), std::nullopt};
        };
        out.push_back(std::move(f));
    }
    for (auto& f : bs4_families())
        out.push_back(std::move(f));
    {
        FamilySpec f;
        f.id = "LIE_RR3M1";
        f.summary = "[e1,e2] = e2, [e1,e3] = -e3; w = e14 + e23";
        f.claims = {Claim::lie, Claim::left_symplectic};
        f.build = [](const Params&) {
            SymplecticLie g = rr3();
            return Instance{g.g, g.form, std::nullopt};
        };
        out.push_back(std::move(f));
    }
    for (auto& f : extension_families())
        out.push_back(std::move(f));
    for (auto& f : rr3_families())
        out.push_back(std::move(f));
    return out;
}

} // namespace catalog_detail

inline const std::vector<FamilySpec>& families()
{
    static const std::vector<FamilySpec> all = catalog_detail::make_families();
    return all;
}

inline std::vector<std::string> list_families()
{
    std::vector<std::string> ids;
    for (const auto& f : families())
        ids.push_back(f.id);
    return ids;
}

class UnknownFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const FamilySpec& family(const std::string& id)
{
    for (const auto& f : families())
        if (f.id == id)
            return f;
    std::string msg = "unknown family \"" + id + "\"; known:";
    for (const auto& f : families())
        msg += " " + f.id;
    throw UnknownFamily(msg);
}

/// Defaults overridden by `given`; unknown names are rejected.
inline Params complete_params(const FamilySpec& f, const Params& given)
{
    Params p = f.defaults;
    for (const auto& [k, v] : given) {
        if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
            throw std::invalid_argument(f.id + " has no parameter \"" + k + "\"");
        p[k] = v;
    }
    return p;
}

inline void check_constraints(const FamilySpec& f, const Params& p)
{
    for (const auto& c : f.constraints)
        if (!c.satisfied(p))
            throw ConstraintViolation(f.id + ": constraint violated: " + c.text);
}

inline Instance instantiate(const std::string& id, const Params& given = {})
{
    const FamilySpec& f = family(id);
    Params p = complete_params(f, given);
    check_constraints(f, p);
    return f.build(p);
}

inline Check evaluate_claim(Claim c, const Instance& inst)
{
    const Algebra& A = inst.algebra;
    const SkewForm& w = inst.form;
    const std::string name = to_string(c);
    auto from = [&](const IdentityReport& r) { return Check{name, r.holds, r.holds ? "" : describe(r)}; };
    switch (c) {
    case Claim::left_leibniz:
        return from(is_left_leibniz(A));
    case Claim::right_leibniz:
        return from(is_right_leibniz(A));
    case Claim::symmetric_leibniz:
        return from(is_symmetric_leibniz(A));
    case Claim::left_symplectic:
        return from(is_symplectic_left(A, w));
    case Claim::right_symplectic:
        return from(is_symplectic_right(A, w));
    case Claim::bi_symplectic:
        return from(is_bi_symplectic(A, w));
    case Claim::lie:
        return from(is_lie(A));
    case Claim::non_lie: {
        bool nonlie = leibniz_ideal(A).dim() > 0;
        return {name, nonlie, nonlie ? "" : "Leibniz ideal is zero"};
    }
    case Claim::reduced_system: {
        if (!inst.extension)
            return {name, false, "instance carries no extension data"};
        Report r = check_reduced_system(inst.extension->g, inst.extension->data);
        const Check* bad = r.first_failure();
        return {name, bad == nullptr, bad ? bad->name + ": " + bad->detail : ""};
    }
    case Claim::core_nonabelian_2: {
        auto s = is_symplectic_left(A, w);
        if (!s.holds)
            return {name, false, describe(s)};
        CoreDecomposition dec = core(A, w);
        const Algebra& g = dec.g.algebra;
        bool ok = g.dim() == 2 && !g.is_zero();
        return {name, ok,
                ok ? "" : "dim I = " + std::to_string(dec.I.dim()) + ", dim g = " + std::to_string(g.dim()) +
                              (g.is_zero() ? ", g abelian" : "")};
    }
    }
    return {name, false, "unknown claim"};
}

/// Constraint violations throw before anything is evaluated.
inline Report verify(const std::string& id, const Params& given = {})
{
    const FamilySpec& f = family(id);
    Params p = complete_params(f, given);
    check_constraints(f, p);
    Instance inst = f.build(p);
    Report rep;
    for (Claim c : f.claims)
        rep.checks.push_back(evaluate_claim(c, inst));
    return rep;
}

struct SampleResult {
    std::size_t index = 0;
    std::string branch;
    Params params;
    Report report;
};

struct VerificationRun {
    std::string id;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<SampleResult> results;

    std::size_t passed() const
    {
        return static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [](const SampleResult& r) { return r.report.all_pass(); }));
    }
    bool all_pass() const { return passed() == results.size(); }
};

/// Integer in [-6, 6]; modular reduction keeps runs identical across standard libraries.
inline Rational draw_param(std::mt19937_64& rng)
{
    return Rational(static_cast<long>(rng() % 13) - 6);
}

/// Draws one conforming parameter set (branch chosen uniformly, then rejection sampling).
inline std::pair<std::string, Params> draw_sample(const FamilySpec& f, std::mt19937_64& rng)
{
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const Branch* br = f.branches.empty() ? nullptr : &f.branches[rng() % f.branches.size()];
        Params p;
        for (const auto& name : f.params) {
            Rational v = draw_param(rng);
            if (br && br->fixed.count(name))
                v = br->fixed.at(name);
            p[name] = v;
        }
        bool ok = std::all_of(f.constraints.begin(), f.constraints.end(),
                              [&](const Constraint& c) { return c.satisfied(p); });
        if (ok)
            return {br ? br->name : std::string(), p};
    }
    throw std::runtime_error(f.id + ": could not draw parameters satisfying the constraints");
}

/// Parameters are drawn sequentially from the seed; samples are then verified concurrently.
inline VerificationRun sample_verify(const std::string& id, std::uint64_t seed, std::size_t count)
{
    const FamilySpec& f = family(id);
    VerificationRun run{id, seed, count, {}};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        auto [branch, params] = draw_sample(f, rng);
        run.results.push_back({i, branch, params, {}});
    }
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < count; start += width) {
        std::vector<std::future<Report>> jobs;
        for (std::size_t i = start; i < std::min(count, start + width); ++i)
            jobs.push_back(std::async(std::launch::async, [&f, &run, i] {
                return verify(f.id, run.results[i].params);
            }));
        for (std::size_t i = start; i < std::min(count, start + width); ++i)
            run.results[i].report = jobs[i - start].get();
    }
    return run;
}

} // namespace sympleib
