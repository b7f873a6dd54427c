#include <cmath>

#include <gtest/gtest.h>

#include "bohr/lemma_oracles.hpp"

using bohr::BoundedFunction;
using bohr::CheckReport;
using bohr::Complex;
using bohr::DilatationMode;
using bohr::PairSample;

namespace {

const std::vector<double> kFullGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
const std::vector<double> kLemma4Grid{0.05, 0.15, 1.0 / 3.0};

BoundedFunction identity() { return BoundedFunction::mobius(0.0); }
BoundedFunction constant_one() { return BoundedFunction::blaschke({}); }

void expect_equality(const CheckReport& rep) {
    EXPECT_TRUE(rep.pass) << rep.name;
    EXPECT_LE(std::abs(rep.worst_slack), 1e-12) << rep.name;
}

}  // namespace

TEST(SampleRng, DeterministicAndInRange) {
    bohr::SampleRng a(42, 1), b(42, 1), c(42, 2);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        differs = differs || x != c.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
        EXPECT_LE(std::abs(a.disk_point(0.7)), 0.7);
        b.disk_point(0.7);
        c.disk_point(0.7);
        EXPECT_NEAR(std::abs(a.unimodular()), 1.0, 1e-15);
        b.unimodular();
        c.unimodular();
        const int k = a.uniform_int(2, 4);
        b.uniform_int(2, 4);
        c.uniform_int(2, 4);
        EXPECT_GE(k, 2);
        EXPECT_LE(k, 4);
    }
    EXPECT_TRUE(differs);
}

TEST(SampleRng, BlaschkeRespectsDegreeAndModulus) {
    bohr::SampleRng rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto f = rng.blaschke(1, 5, 0.8);
        const auto& b = std::get<bohr::Blaschke>(f.kind());
        EXPECT_GE(b.zeros.size(), 1u);
        EXPECT_LE(b.zeros.size(), 5u);
        for (const auto& z : b.zeros) EXPECT_LE(std::abs(z), 0.8);
    }
}

TEST(Pick, EqualityCases) {
    const std::vector<Complex> real_points{0.1, 0.4, 0.7, 0.95};
    expect_equality(bohr::check_pick_at(identity(), real_points));
    expect_equality(bohr::check_pick_at(BoundedFunction::mobius(0.6), real_points));
}

TEST(Pick, RandomBlaschkePasses) {
    const auto f = BoundedFunction::blaschke({Complex{0.2, 0.5}, Complex{-0.6, 0.1}, Complex{0.0, -0.7}});
    const auto rep = bohr::check_pick(f, 10000, 1);
    EXPECT_TRUE(rep.pass);
    EXPECT_GE(rep.worst_slack, -1e-12);
    EXPECT_EQ(rep.evaluations, 10000);
    EXPECT_THROW(bohr::check_pick(f, 0, 1), std::invalid_argument);
}

TEST(CoeffBounds, MobiusAndIdentity) {
    const std::vector<Complex> zs{0.0, Complex{0.3, 0.2}, -0.8};
    EXPECT_TRUE(bohr::check_coeff_and_derivative_bounds(BoundedFunction::mobius(0.7), zs, 8).pass);
    const std::vector<Complex> origin{0.0};
    expect_equality(bohr::check_coeff_and_derivative_bounds(identity(), origin, 1));
    EXPECT_THROW(bohr::check_coeff_and_derivative_bounds(identity(), origin, 0), std::invalid_argument);
    EXPECT_THROW(bohr::check_coeff_and_derivative_bounds(identity(), origin, 300, 256), std::invalid_argument);
    const std::vector<Complex> outside{1.0};
    EXPECT_THROW(bohr::check_coeff_and_derivative_bounds(identity(), outside, 2), std::invalid_argument);
}

TEST(CoeffBounds, RandomBlaschke) {
    bohr::SampleRng rng(77);
    for (int i = 0; i < 20; ++i) {
        const auto f = rng.blaschke(1, 5, 0.8);
        std::vector<Complex> zs;
        for (int j = 0; j < 8; ++j) zs.push_back(rng.disk_point(0.9));
        const auto rep = bohr::check_coeff_and_derivative_bounds(f, zs, 8);
        EXPECT_GE(rep.worst_slack, -1e-9);
    }
}

TEST(L2Dilatation, ConstantShapeIsEquality) {
    for (const double k : {0.3, 0.9})
        expect_equality(bohr::check_l2_dilatation(
            PairSample{BoundedFunction::mobius(0.5), constant_one(), k, DilatationMode::Standard}, kFullGrid));
}

TEST(L2Dilatation, IdentityWithLinearShape) {
    // g = k z^2 / 2: slack k^2 (r - r^2/4).
    const double k = 0.6;
    const auto rep = bohr::check_l2_dilatation(
        PairSample{identity(), BoundedFunction::monomial(1), k, DilatationMode::Standard}, kFullGrid);
    EXPECT_TRUE(rep.pass);
    EXPECT_NEAR(rep.worst_slack, k * k * (0.1 - 0.01 / 4.0), 1e-14);
}

TEST(L2Dilatation, RequiresStandardMode) {
    EXPECT_THROW(bohr::check_l2_dilatation(
                     PairSample{identity(), constant_one(), 0.5, DilatationMode::Vanishing}, kFullGrid),
                 std::invalid_argument);
}

TEST(WeightedL1, IdentityIsEquality) {
    expect_equality(bohr::check_weighted_l1(
        PairSample{identity(), constant_one(), 0.7, DilatationMode::Vanishing}, kLemma4Grid));
}

TEST(WeightedL1, MobiusAtOneThird) {
    for (const double a : {0.2, 0.5, 0.8})
        EXPECT_TRUE(bohr::check_weighted_l1(
                        PairSample{BoundedFunction::mobius(a), constant_one(), 0.7, DilatationMode::Vanishing},
                        std::vector<double>{1.0 / 3.0})
                        .pass);
}

TEST(WeightedL1, GuardsAndDetection) {
    const PairSample s{identity(), constant_one(), 0.5, DilatationMode::Vanishing};
    EXPECT_THROW(bohr::check_weighted_l1(s, std::vector<double>{0.4}), std::invalid_argument);
    PairSample wrong = s;
    wrong.mode = DilatationMode::Standard;
    EXPECT_THROW(bohr::check_weighted_l1(wrong, kLemma4Grid), std::invalid_argument);

    const auto pair = bohr::build_pair(s, 64, 1.5);
    const auto rep = bohr::check_weighted_l1(pair, kLemma4Grid);
    EXPECT_FALSE(rep.pass);
    EXPECT_LT(rep.worst_slack, -1e-9);
}

TEST(BuildPair, CoefficientRelation) {
    const PairSample s{BoundedFunction::mobius(0.4), BoundedFunction::monomial(1), 0.5, DilatationMode::Standard};
    const auto pair = bohr::build_pair(s, 32);
    // g' = k z h'  =>  (n+1) b_{n+1} = k n a_n.
    EXPECT_EQ(pair.g[0], Complex(0.0, 0.0));
    for (int n = 1; n < 31; ++n)
        EXPECT_NEAR(std::abs(double(n + 1) * pair.g[n + 1] - 0.5 * double(n) * pair.h[n]), 0.0, 1e-15);
    EXPECT_THROW(bohr::build_pair(PairSample{identity(), constant_one(), 1.0, DilatationMode::Standard}),
                 std::invalid_argument);
}

TEST(Refined, EqualityAndPassingCases) {
    expect_equality(bohr::check_refined(identity(), 1, kFullGrid));
    EXPECT_TRUE(bohr::check_refined(BoundedFunction::mobius(0.6), 1, kFullGrid).pass);
    for (const int N : {1, 2, 5}) {
        const auto rep = bohr::check_refined(constant_one(), N, kFullGrid);
        EXPECT_TRUE(rep.pass);
        EXPECT_NEAR(rep.worst_slack, 0.0, 1e-15);
    }
    EXPECT_THROW(bohr::check_refined(identity(), 0, kFullGrid), std::invalid_argument);
    EXPECT_THROW(bohr::check_refined(identity(), 300, kFullGrid, 256), std::invalid_argument);
}

TEST(Refined, RotationInvariant) {
    const auto f = BoundedFunction::blaschke({Complex{0.3, 0.3}, Complex{-0.2, 0.5}});
    const auto g = BoundedFunction::blaschke({Complex{0.3, 0.3}, Complex{-0.2, 0.5}}, std::polar(1.0, 2.0));
    for (const int N : {1, 3, 4})
        EXPECT_NEAR(bohr::check_refined(f, N, kFullGrid).worst_slack, bohr::check_refined(g, N, kFullGrid).worst_slack,
                    1e-14);
}

TEST(LemmaSuite, PassesAndIsReproducible) {
    const auto a = bohr::run_lemma_suite(42, 40, 128);
    const auto b = bohr::run_lemma_suite(42, 40, 128);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(a[i].pass) << a[i].name;
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].worst_slack, b[i].worst_slack);
    }
    EXPECT_THROW(bohr::run_lemma_suite(1, 0), std::invalid_argument);
}
