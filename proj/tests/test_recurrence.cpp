#include <gtest/gtest.h>

#include <vector>

#include "recdist/charpoly.hpp"
#include "recdist/recurrence.hpp"
#include "recdist/serialize.hpp"

using namespace recdist;

namespace {

std::vector<long long> to_ll(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const BigInt& x : v) out.push_back(static_cast<long long>(x));
    return out;
}

// Small fixed corpus spanning orders 1..5 and mixed coefficients/inits.
std::vector<RecurrenceSpec> corpus() {
    return {
        make_spec({1, 1}),          make_spec({1, 2}),       make_spec({2, 1}),
        make_spec({1, 3}),          make_spec({3, 3}),       make_spec({1, 1, 1}),
        make_spec({2, 2, 1}),       make_spec({1, 1, 1, 1}), make_spec({5, 1, 2, 4, 3}),
        make_spec({1, 4}, {3, 1}),  make_spec({2}),          make_spec({1}),
        make_spec({1, 1}, {2, 7}),
    };
}

} // namespace

TEST(MakeSpec, ValidatesEntries) {
    EXPECT_THROW(make_spec({}, {}), EmptySpec);
    EXPECT_THROW(make_spec({1, 1}, {1}), LengthMismatch);
    EXPECT_THROW(make_spec({1, 0}, {1, 1}), NonPositiveEntry);
    EXPECT_THROW(make_spec({0, 1}), NonPositiveEntry);
    EXPECT_THROW(make_spec({1, 1}, {1, -3}), NonPositiveEntry);

    const RecurrenceSpec fib = make_spec({1, 1}, {1, 1});
    EXPECT_EQ(fib.order(), 2);
    EXPECT_TRUE(fib.is_fibonacci());
    EXPECT_EQ(make_spec({1, 2}).inits, (std::vector<BigInt>{1, 1})); // default inits all ones
    EXPECT_FALSE(make_spec({1, 2}).is_fibonacci());
}

TEST(Generate, KnownPrefixes) {
    EXPECT_EQ(to_ll(generate(make_spec({1, 1}), 8).values),
              (std::vector<long long>{1, 1, 2, 3, 5, 8, 13, 21}));
    EXPECT_EQ(to_ll(generate(make_spec({1, 3}), 7).values),
              (std::vector<long long>{1, 1, 4, 7, 19, 40, 97}));
    EXPECT_EQ(to_ll(generate(make_spec({1, 2}), 4).values),
              (std::vector<long long>{1, 1, 3, 5}));
}

TEST(Generate, ShortPrefixReturnsInits) {
    const Sequence seq = generate(make_spec({1, 1, 1}, {2, 3, 4}), 2);
    EXPECT_EQ(to_ll(seq.values), (std::vector<long long>{2, 3}));
    EXPECT_THROW(generate(make_spec({1, 1}), 0), IndexOutOfRange);
}

TEST(Generate, OneBasedAccess) {
    const Sequence seq = generate(make_spec({1, 1}), 5);
    EXPECT_EQ(seq.at(1), 1);
    EXPECT_EQ(seq.at(5), 5);
    EXPECT_THROW(seq.at(0), IndexOutOfRange);
    EXPECT_THROW(seq.at(6), IndexOutOfRange);
}

TEST(Generate, RecurrenceIdentityExactAtN500) {
    for (const RecurrenceSpec& spec : corpus()) {
        const Sequence seq = generate(spec, 500);
        const int k = spec.order();
        for (long n = k + 1; n <= 500; ++n) {
            BigInt expect = 0;
            for (int i = 1; i <= k; ++i)
                expect += spec.coeffs[static_cast<size_t>(i - 1)] * seq.at(n - i);
            ASSERT_EQ(seq.at(n), expect) << "spec order " << k << " at n=" << n;
        }
        for (const BigInt& v : seq.values) ASSERT_GT(v, 0);
    }
}

TEST(Generate, MonotoneGrowthBeyondInits) {
    for (const RecurrenceSpec& spec : corpus()) {
        const Sequence seq = generate(spec, 80);
        const int k = spec.order();
        for (long n = k; n < 80; ++n) {
            ASSERT_GE(seq.at(n + 1), seq.at(n)) << "at n=" << n;
            if (k >= 2 && n > k) ASSERT_GT(seq.at(n + 1), seq.at(n)) << "at n=" << n;
        }
    }
}

TEST(RatioEstimate, ConvergesToDominantRoot) {
    EXPECT_NEAR(ratio_estimate(generate(make_spec({1, 1}), 30)), kPhi, 1e-10);
    EXPECT_NEAR(ratio_estimate(generate(make_spec({1, 2}), 30)), 2.0, 1e-7);
    EXPECT_DOUBLE_EQ(ratio_estimate(generate(make_spec({1, 1}), 2)), 1.0);
    EXPECT_THROW(ratio_estimate(generate(make_spec({1, 1}), 1)), SequenceTooShort);
}

// |f[60]/f[59] - R| < 1e-9 for every spec with k <= 4, coefficients <= 5.
TEST(RatioEstimate, GeometricConvergenceSweep) {
    std::vector<std::vector<long long>> stack{{}};
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::vector<long long>> next;
        for (const auto& prefix : stack)
            for (long long c = 1; c <= 5; ++c) {
                auto coeffs = prefix;
                coeffs.push_back(c);
                next.push_back(coeffs);
            }
        stack = next;
        for (const auto& coeffs : next) {
            const RecurrenceSpec spec = make_spec(coeffs);
            const double root = dominant_root(char_polynomial(spec), 1e-13);
            const double ratio = ratio_estimate(generate(spec, 60));
            ASSERT_LT(std::abs(ratio - root), 1e-9) << "k=" << k;
        }
    }
}

TEST(ClosedFormCheck, MatchesExactSequenceWhenAIsOne) {
    EXPECT_NEAR(closed_form_check(1, 1, 10), 55.0, 1e-6);
    EXPECT_NEAR(closed_form_check(1, 2, 5), 11.0, 1e-6); // (2^5 - (-1)^5)/3
    for (long long b = 1; b <= 3; ++b) {
        const Sequence seq = generate(make_spec({1, b}), 40);
        for (long n = 1; n <= 40; ++n) {
            const double exact = to_double(BigRat(seq.at(n)));
            ASSERT_NEAR(closed_form_check(1, b, n) / exact, 1.0, 1e-6) << "b=" << b << " n=" << n;
        }
    }
}

// With a >= 2 the closed form forces f[2] = a, so it departs from the
// (1,1)-initialized sequence; the check stays an asymptotic tool only.
TEST(ClosedFormCheck, ExposesInitMismatchForLargerA) {
    EXPECT_NEAR(closed_form_check(2, 1, 2), 2.0, 1e-9);
    EXPECT_EQ(generate(make_spec({2, 1}), 2).at(2), 1);
}

TEST(SequenceSerialization, DecimalStringsAndCsv) {
    const Sequence seq = generate(make_spec({1, 1}), 95);
    const Json values = to_json(seq);
    ASSERT_EQ(values.size(), 95u);
    // f[95] overflows 64-bit; must round-trip as a decimal string.
    EXPECT_EQ(values[94].get<std::string>(), "31940434634990099905");
    EXPECT_EQ(values[94].get<std::string>(), seq.at(95).str());

    const std::string csv = to_csv(generate(make_spec({1, 2}), 3));
    EXPECT_EQ(csv, "n,f_n\n1,1\n2,1\n3,3\n");
}
