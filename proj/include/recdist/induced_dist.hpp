#pragma once

#include <optional>
#include <vector>

#include "recdist/charpoly.hpp"
#include "recdist/errors.hpp"
#include "recdist/numeric.hpp"
#include "recdist/recurrence.hpp"

namespace recdist {

enum class Orientation { Increasing, Decreasing };

inline const char* orientation_name(Orientation o) {
    return o == Orientation::Increasing ? "increasing" : "decreasing";
}

// The distribution a finite positive sequence induces on {1..N}:
// increasing uses p(n) = f[n]/S, decreasing the flipped p(n) = f[N+1-n]/S,
// with S the exact sum. The two pmfs are mirror images of each other.
struct InducedDistribution {
    Orientation orientation = Orientation::Increasing;
    long n = 0;
    std::vector<BigRat> pmf; // pmf[i] = p(i+1), exact, sums to 1
    RecurrenceSpec source_spec;
};

inline InducedDistribution induce(const Sequence& seq, Orientation orientation) {
    const long n = seq.length();
    BigInt total = 0;
    for (const BigInt& v : seq.values) total += v;
    InducedDistribution dist{orientation, n, {}, seq.spec};
    dist.pmf.reserve(static_cast<size_t>(n));
    for (long m = 1; m <= n; ++m) {
        const BigInt& w = orientation == Orientation::Increasing ? seq.at(m) : seq.at(n + 1 - m);
        dist.pmf.emplace_back(w, total);
    }
    return dist;
}

inline double limit_mean_decreasing(double r) {
    if (!(r > 1)) throw RNotGreaterThanOne("need R > 1, got " + format_real(r));
    return r / (r - 1);
}

// Same limit for both orientations.
inline double limit_variance(double r) {
    if (!(r > 1)) throw RNotGreaterThanOne("need R > 1, got " + format_real(r));
    return r / ((r - 1) * (r - 1));
}

// E(X) for the increasing orientation diverges like N - 1/(R-1).
inline double asymptotic_mean_increasing(double r, long n) {
    if (!(r > 1)) throw RNotGreaterThanOne("need R > 1, got " + format_real(r));
    return static_cast<double>(n) - 1.0 / (r - 1);
}

// lim Var(X)/E(X) = 1/(R-1) for the decreasing orientation.
inline double variance_over_mean_limit(double r) {
    if (!(r > 1)) throw RNotGreaterThanOne("need R > 1, got " + format_real(r));
    return 1.0 / (r - 1);
}

// Exact finite-N moments plus the paper limits. limit_mean is empty when the
// mean diverges (increasing orientation, and the degenerate R <= 1 case where
// the induced distribution flattens out).
struct MomentReport {
    BigRat mean;
    BigRat variance;
    std::vector<BigRat> raw_moments; // raw_moments[j-1] = E(X^j), j = 1..m
    std::optional<double> limit_mean;
    std::optional<double> limit_variance;
};

constexpr int kMaxMomentOrder = 12; // desk-scale cap

inline MomentReport moments(const InducedDistribution& dist, int m, double r) {
    if (m < 2 || m > kMaxMomentOrder)
        throw MomentOrderOutOfRange("moment order must lie in [2, " +
                                    std::to_string(kMaxMomentOrder) + "], got " +
                                    std::to_string(m));
    MomentReport report;
    report.raw_moments.assign(static_cast<size_t>(m), BigRat(0));
    for (long n = 1; n <= dist.n; ++n) {
        BigRat npow = 1;
        for (int j = 1; j <= m; ++j) {
            npow *= n;
            report.raw_moments[static_cast<size_t>(j - 1)] +=
                npow * dist.pmf[static_cast<size_t>(n - 1)];
        }
    }
    report.mean = report.raw_moments[0];
    report.variance = report.raw_moments[1] - report.mean * report.mean;
    if (r > 1) {
        if (dist.orientation == Orientation::Decreasing)
            report.limit_mean = limit_mean_decreasing(r);
        report.limit_variance = limit_variance(r);
    }
    return report;
}

inline MomentReport moments(const InducedDistribution& dist, int m) {
    const double r = dominant_root(char_polynomial(dist.source_spec), 1e-13);
    return moments(dist, m, r);
}

} // namespace recdist
