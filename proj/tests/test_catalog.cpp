#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sympleib;
using namespace testing_support;

TEST(Catalog, ListsEveryFamilyOnce)
{
    auto ids = list_families();
    EXPECT_EQ(ids.size(), 23u);
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
    for (const char* id : {"DIM2_NONLIE", "R4_LEFT", "BS4_A", "BS4_N", "LIE_RR3M1", "CORE2_NONABELIAN", "ABEL2_CASE1",
                           "ABEL2_CASE2", "RR3_SIXDIM_RAW", "RR3_SIXDIM_B0", "RR3_SIXDIM_BNE0"})
        EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
}

TEST(Catalog, DefaultsSatisfyConstraintsAndBuild)
{
    for (const auto& f : families()) {
        EXPECT_NO_THROW(check_constraints(f, f.defaults)) << f.id;
        for (const auto& name : f.params)
            EXPECT_TRUE(f.defaults.count(name)) << f.id << " " << name;
        Instance inst = f.build(f.defaults);
        EXPECT_EQ(inst.algebra.dim(), inst.form.dim()) << f.id;
        EXPECT_TRUE(inst.form.nondegenerate()) << f.id;
        EXPECT_FALSE(f.claims.empty()) << f.id;
    }
}

TEST(Catalog, TableEntriesAreOneBased)
{
    Instance a = instantiate("BS4_A", {{"x", 1}, {"y", 2}, {"z", 3}, {"t", 4}});
    EXPECT_EQ(a.algebra.product(0, 0), (Vector{0, 0, 1, 2}));
    EXPECT_EQ(a.algebra.product(0, 1), (Vector{0, 0, 2, 3}));
    EXPECT_EQ(a.algebra.product(1, 0), (Vector{0, 0, 2, 3}));
    EXPECT_EQ(a.algebra.product(1, 1), (Vector{0, 0, 3, 4}));
    EXPECT_EQ(a.form.at(0, 2), 1);
    EXPECT_EQ(a.form.at(1, 3), 1);
    EXPECT_EQ(a.form.at(0, 1), 0);

    Instance d = instantiate("DIM2_NONLIE", {{"x", 1}});
    EXPECT_EQ(d.algebra.product(1, 1), (Vector{1, 0}));
    EXPECT_EQ(d.algebra.product(0, 1), (Vector{0, 0}));
    EXPECT_EQ(d.form.at(0, 1), 1);
}

TEST(Catalog, ConstraintViolationNamesTheConstraint)
{
    try {
        instantiate("BS4_E", {{"aa", 0}});
        FAIL() << "expected rejection";
    } catch (const ConstraintViolation& e) {
        EXPECT_NE(std::string(e.what()).find("aa != 0"), std::string::npos) << e.what();
    }
    EXPECT_THROW(verify("DIM2_NONLIE", {{"x", 0}}), ConstraintViolation);
    EXPECT_THROW(instantiate("RR3_SIXDIM_RAW", {{"z", 1}, {"x", 1}}), ConstraintViolation);
    EXPECT_THROW(instantiate("BS4_M", {{"sign", 2}}), ConstraintViolation);
    EXPECT_THROW(instantiate("BS4_A", {{"nope", 1}}), std::invalid_argument);
}

TEST(Catalog, UnknownFamilyListsKnownIds)
{
    try {
        family("NOPE");
        FAIL() << "expected rejection";
    } catch (const UnknownFamily& e) {
        std::string m = e.what();
        EXPECT_NE(m.find("NOPE"), std::string::npos);
        EXPECT_NE(m.find("BS4_A"), std::string::npos);
    }
}

TEST(Catalog, DefaultsVerify)
{
    for (const auto& id : list_families()) {
        if (id == "RR3_SIXDIM_B0")
            continue;
        Report r = verify(id);
        const Check* bad = r.first_failure();
        EXPECT_TRUE(r.all_pass()) << id << " " << (bad ? bad->name + ": " + bad->detail : "");
    }
}

TEST(Catalog, SampledClaimsHold)
{
    for (const auto& id : list_families()) {
        if (id == "RR3_SIXDIM_B0")
            continue;
        VerificationRun run = sample_verify(id, 7, 20);
        EXPECT_EQ(run.results.size(), 20u);
        EXPECT_TRUE(run.all_pass()) << id << " " << run.passed() << "/20";
    }
}

TEST(Catalog, SamplingIsReproducible)
{
    VerificationRun a = sample_verify("RR3_SIXDIM_RAW", 1, 20), b = sample_verify("RR3_SIXDIM_RAW", 1, 20);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].params, b.results[i].params);
        EXPECT_EQ(a.results[i].branch, b.results[i].branch);
    }
    EXPECT_EQ(a.passed(), 20u);
    VerificationRun c = sample_verify("RR3_SIXDIM_RAW", 2, 20);
    bool differ = false;
    for (std::size_t i = 0; i < 20; ++i)
        differ |= a.results[i].params != c.results[i].params;
    EXPECT_TRUE(differ);
    VerificationRun e = sample_verify("BS4_A", 7, 0);
    EXPECT_TRUE(e.results.empty());
    EXPECT_TRUE(e.all_pass());
}

TEST(Catalog, SamplesRespectBranchesAndConstraints)
{
    std::mt19937_64 rng(61);
    const FamilySpec& f = family("RR3_SIXDIM_RAW");
    std::set<std::string> seen;
    for (int t = 0; t < 200; ++t) {
        auto [branch, p] = draw_sample(f, rng);
        seen.insert(branch);
        EXPECT_EQ(p["z"] * p["x"], 0);
        EXPECT_EQ(p["z"] * p["s"], 0);
        if (branch == "z=0") {
            EXPECT_EQ(p["z"], 0);
        } else {
            EXPECT_TRUE(p["x"] == 0 && p["s"] == 0);
        }
        for (const auto& [k, v] : p)
            EXPECT_TRUE(v >= -6 && v <= 6) << k;
    }
    EXPECT_EQ(seen.size(), 2u);
}

TEST(Catalog, RawTableCarriesZTerm)
{
    Instance i = instantiate("RR3_SIXDIM_RAW", {{"z", 1}, {"x", 0}, {"s", 0}});
    EXPECT_EQ(i.algebra.product(4, 3), unit_vector(6, 5));
    EXPECT_EQ(i.algebra.product(3, 4), -unit_vector(6, 5));
    EXPECT_TRUE(verify("RR3_SIXDIM_RAW", {{"z", 1}, {"x", 0}, {"s", 0}}).all_pass());
    ASSERT_TRUE(i.extension);
    EXPECT_EQ(i.extension->data.p, 1u);
}

TEST(Catalog, SpecificClaims)
{
    Report d = verify("BS4_D", {{"x", 5}});
    EXPECT_TRUE(d.all_pass());
    EXPECT_TRUE(d.find("non-lie"));
    Report lie = verify("LIE_RR3M1");
    EXPECT_TRUE(lie.all_pass());
    EXPECT_TRUE(lie.find("lie"));
    Instance d5 = instantiate("BS4_D", {{"x", 5}});
    EXPECT_TRUE(is_bi_symplectic(d5.algebra, d5.form));
    EXPECT_TRUE(is_symmetric_leibniz(d5.algebra));
}

TEST(Catalog, B0PrintedFormFailsOffTheDiagonalCase)
{
    // table as printed; the extra form terms break (l1) when b1 or b2 is nonzero
    EXPECT_TRUE(verify("RR3_SIXDIM_B0", {{"b1", 0}, {"b2", 0}}).all_pass());
    Report r = verify("RR3_SIXDIM_B0");
    EXPECT_TRUE(r.find("left-leibniz")->holds);
    EXPECT_FALSE(r.find("left-symplectic")->holds);
    Instance i = instantiate("RR3_SIXDIM_B0");
    auto s = is_symplectic_left(i.algebra, i.form);
    ASSERT_TRUE(s.witness);
    EXPECT_EQ(s.witness->indices, (std::vector<std::size_t>{0, 1, 4}));
    SkewForm plain = SkewForm::from_entries(6, {{0, 3, 1}, {1, 2, 1}, {4, 5, -1}});
    EXPECT_TRUE(is_symplectic_left(i.algebra, plain));
}

TEST(Catalog, ExtensionFamiliesRoundTripThroughBuild)
{
    std::mt19937_64 rng(62);
    for (const auto& f : families()) {
        if (!f.build(f.defaults).extension)
            continue;
        for (int t = 0; t < 5; ++t) {
            Instance inst = f.build(draw_sample(f, rng).second);
            BuiltSymplectic b = build_double_extension(inst.extension->g, inst.extension->data);
            if (f.id == "RR3_SIXDIM_RAW") {
                // stored in (g, e, e*) order
                std::vector<std::size_t> perm = {1, 2, 3, 4, 0, 5};
                EXPECT_EQ(permute(b.algebra, perm), inst.algebra) << f.id;
            } else {
                EXPECT_EQ(b.algebra, inst.algebra) << f.id;
                EXPECT_EQ(b.form, inst.form) << f.id;
            }
        }
    }
}
