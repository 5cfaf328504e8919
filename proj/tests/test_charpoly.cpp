#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "recdist/charpoly.hpp"
#include "recdist/serialize.hpp"

using namespace recdist;

TEST(CharPolynomial, CoefficientVectors) {
    EXPECT_EQ(char_polynomial(make_spec({1, 1})).coeffs, (std::vector<BigInt>{1, -1, -1}));
    EXPECT_EQ(char_polynomial(make_spec({1, 2})).coeffs, (std::vector<BigInt>{1, -1, -2}));
    EXPECT_EQ(char_polynomial(make_spec({1, 1, 1})).coeffs, (std::vector<BigInt>{1, -1, -1, -1}));
}

TEST(DominantRoot, KnownRoots) {
    EXPECT_NEAR(dominant_root(char_polynomial(make_spec({1, 1})), 1e-12), 1.618033988749895,
                1e-12);
    // f(2) = 0 exactly; the bisection hits the root and returns it exactly.
    EXPECT_DOUBLE_EQ(dominant_root(char_polynomial(make_spec({1, 2})), 1e-12), 2.0);
    EXPECT_NEAR(dominant_root(char_polynomial(make_spec({1, 3})), 1e-12), 2.302775637731995,
                1e-12); // (1+sqrt(13))/2
}

TEST(DominantRoot, ToleranceContract) {
    const CharPolynomial poly = char_polynomial(make_spec({1, 1}));
    EXPECT_THROW(dominant_root(poly, 1e-30), ToleranceTooSmall);
    EXPECT_THROW(dominant_root(poly, 0.0), ToleranceTooSmall);
    EXPECT_THROW(dominant_root(poly, -1.0), ToleranceTooSmall);
    // Looser tolerance still brackets the root within that width.
    EXPECT_NEAR(dominant_root(poly, 1e-3), kPhi, 1e-3);
}

TEST(DominantRoot, OrderOneEdgeCases) {
    EXPECT_DOUBLE_EQ(dominant_root(char_polynomial(make_spec({1})), 1e-12), 1.0); // x - 1
    EXPECT_DOUBLE_EQ(dominant_root(char_polynomial(make_spec({7})), 1e-12), 7.0);
}

// f(1) <= 0 and f(1 + max a_i) > 0 for every valid spec, checked in exact
// integer arithmetic; equality at 1 only for the k = 1, a = 1 spec.
TEST(DominantRoot, BracketValidity) {
    std::mt19937 gen(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(gen() % 6);
        std::vector<long long> coeffs(static_cast<size_t>(k));
        for (auto& c : coeffs) c = 1 + static_cast<long long>(gen() % 9);
        const CharPolynomial poly = char_polynomial(make_spec(coeffs));
        const BigRat at_one = poly.eval_exact(BigRat(1));
        if (k == 1 && coeffs[0] == 1)
            EXPECT_EQ(at_one, 0);
        else
            EXPECT_LT(at_one, 0);
        EXPECT_GT(poly.eval_exact(BigRat(BigInt(1) + poly.max_recurrence_coeff())), 0);
    }
}

TEST(DominantRoot, SecondOrderClosedFormCrossCheck) {
    for (long long a = 1; a <= 20; ++a)
        for (long long b = 1; b <= 20; ++b) {
            const double closed =
                (a + std::sqrt(static_cast<double>(a) * a + 4.0 * b)) / 2.0;
            const double root = dominant_root(char_polynomial(make_spec({a, b})), 1e-13);
            ASSERT_NEAR(root, closed, 1e-12) << "a=" << a << " b=" << b;
        }
}

TEST(AllRoots, KnownRootSets) {
    const auto fib = all_roots(char_polynomial(make_spec({1, 1})));
    ASSERT_EQ(fib.size(), 2u);
    EXPECT_NEAR(fib[0].real(), kPhi, 1e-10);
    EXPECT_NEAR(fib[0].imag(), 0.0, 1e-10);
    EXPECT_NEAR(fib[1].real(), 1.0 - kPhi, 1e-10);
    EXPECT_LT(std::abs(fib[1]), fib[0].real());

    const auto jac = all_roots(char_polynomial(make_spec({1, 2})));
    EXPECT_NEAR(jac[0].real(), 2.0, 1e-10);
    EXPECT_NEAR(jac[1].real(), -1.0, 1e-10);

    const auto tri = all_roots(char_polynomial(make_spec({1, 1, 1})));
    ASSERT_EQ(tri.size(), 3u);
    EXPECT_NEAR(tri[0].real(), 1.839286755214161, 1e-10);
    EXPECT_NEAR(std::abs(tri[1]), 0.737353705576307, 1e-9);
    EXPECT_NEAR(std::abs(tri[2]), 0.737353705576307, 1e-9);
    // |product of roots| = a_k = 1
    EXPECT_NEAR(std::abs(tri[0] * tri[1] * tri[2]), 1.0, 1e-9);
}

TEST(AllRoots, ResidualsSmallAndDegreeCapped) {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + static_cast<int>(gen() % 15); // up to the cap
        std::vector<long long> coeffs(static_cast<size_t>(k));
        for (auto& c : coeffs) c = 1 + static_cast<long long>(gen() % 9);
        const CharPolynomial poly = char_polynomial(make_spec(coeffs));
        for (const auto& root : all_roots(poly)) {
            double scale = std::pow(std::abs(root), k);
            for (int i = 1; i <= k; ++i)
                scale += static_cast<double>(-poly.coeffs[static_cast<size_t>(i)]) *
                         std::pow(std::abs(root), k - i);
            ASSERT_LT(std::abs(poly.eval(root)), 1e-8 * scale) << "k=" << k;
        }
    }
    EXPECT_THROW(all_roots(char_polynomial(make_spec(std::vector<long long>(17, 1)))),
                 DegreeTooLarge);
}

// Descartes: one sign change in the coefficients, hence exactly one positive
// real root, visible in the computed root set.
TEST(AllRoots, ExactlyOnePositiveRealRoot) {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(gen() % 6);
        std::vector<long long> coeffs(static_cast<size_t>(k));
        for (auto& c : coeffs) c = 1 + static_cast<long long>(gen() % 9);
        int positive = 0;
        for (const auto& root : all_roots(char_polynomial(make_spec(coeffs))))
            if (std::abs(root.imag()) < 1e-7 && root.real() > 1e-7) ++positive;
        ASSERT_EQ(positive, 1);
    }
}

TEST(Lemma1, FlagsForKnownSpecs) {
    const CharAnalysis fib = analyze(make_spec({1, 1}));
    EXPECT_TRUE(fib.is_simple);
    EXPECT_TRUE(fib.is_strictly_dominant);
    EXPECT_TRUE(fib.exceeds_golden_ratio); // equality case, flagged via is_fibonacci_case
    EXPECT_TRUE(fib.is_fibonacci_case);
    EXPECT_NEAR(fib.R, kPhi, 1e-12);
    EXPECT_LE(fib.precision, 1e-12);

    const CharAnalysis jac = analyze(make_spec({1, 2}));
    EXPECT_TRUE(jac.is_simple && jac.is_strictly_dominant && jac.exceeds_golden_ratio);
    EXPECT_FALSE(jac.is_fibonacci_case);

    const CharAnalysis cubic = analyze(make_spec({3, 3, 3}));
    EXPECT_TRUE(cubic.is_simple && cubic.is_strictly_dominant && cubic.exceeds_golden_ratio);
}

TEST(Lemma1, DominanceAndSimplicityOnRandomCorpus) {
    std::mt19937 gen(123);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(gen() % 5);
        std::vector<long long> coeffs(static_cast<size_t>(k));
        for (auto& c : coeffs) c = 1 + static_cast<long long>(gen() % 9);
        const RecurrenceSpec spec = make_spec(coeffs);
        const CharPolynomial poly = char_polynomial(spec);
        const CharAnalysis analysis = analyze(spec);
        ASSERT_TRUE(analysis.is_simple);
        ASSERT_TRUE(analysis.is_strictly_dominant);
        ASSERT_GT(std::abs(poly.deriv(analysis.R)), 0.0);
        // Golden-ratio floor (k >= 2): equality only for Fibonacci.
        if (k == 2 && coeffs[0] == 1 && coeffs[1] == 1)
            ASSERT_NEAR(analysis.R, kPhi, 1e-12);
        else
            ASSERT_GT(analysis.R, kPhi);
    }
}

TEST(Lemma1, ReportMatchesAnalysis) {
    const RecurrenceSpec spec = make_spec({2, 1});
    const CharAnalysis analysis = analyze(spec);
    const Lemma1Report report = verify_lemma1(char_polynomial(spec), analysis);
    EXPECT_EQ(report.is_simple, analysis.is_simple);
    EXPECT_EQ(report.is_strictly_dominant, analysis.is_strictly_dominant);
    EXPECT_EQ(report.exceeds_golden_ratio, analysis.exceeds_golden_ratio);
}

TEST(CharAnalysisSerialization, JsonShape) {
    const Json j = to_json(analyze(make_spec({1, 2})));
    EXPECT_EQ(j["R"].get<std::string>(), "2"); // hit exactly, width 0
    EXPECT_EQ(j["precision"].get<std::string>(), "0");
    EXPECT_TRUE(j["is_simple"].get<bool>());
    EXPECT_TRUE(j["is_strictly_dominant"].get<bool>());
    EXPECT_FALSE(j["is_fibonacci_case"].get<bool>());
    ASSERT_EQ(j["roots"].size(), 2u);
    EXPECT_NEAR(std::stod(j["roots"][0]["re"].get<std::string>()), 2.0, 1e-9);
    EXPECT_NEAR(std::stod(j["roots"][1]["re"].get<std::string>()), -1.0, 1e-9);
}
