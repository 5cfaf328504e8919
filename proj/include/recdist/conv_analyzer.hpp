#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recdist/errors.hpp"
#include "recdist/numeric.hpp"
#include "recdist/recurrence.hpp"

namespace recdist {

// Where the maximum of the self linear convolution y = x * x is predicted to
// sit, as a function of the largest positive real root R of the
// characteristic polynomial:
//   R < 2            -> 2N-1
//   R = 2 (exact)    -> 2N-1 for even N, 2N for odd N
//   R > 2            -> 2N
//   order 1, a = 1   -> the central index N+1 (x is constant, y is a strict
//                       pyramid; the paper states this location in
//                       length-(2N-1) conv indexing, where it reads "N")
enum class PeakClass { At2NMinus1, At2N, ParityDependent, CentralPeak };

inline const char* peak_class_name(PeakClass c) {
    switch (c) {
        case PeakClass::At2NMinus1: return "2N-1";
        case PeakClass::At2N: return "2N";
        case PeakClass::ParityDependent: return "parity-dependent";
        case PeakClass::CentralPeak: return "central-peak";
    }
    return "?";
}

// Exact integer test for R = 2: f(2) = 2^k - sum a_i 2^{k-i} == 0.
inline bool char_root_is_two(const RecurrenceSpec& spec) {
    const int k = spec.order();
    BigInt v = BigInt(1) << static_cast<unsigned>(k);
    for (int i = 0; i < k; ++i)
        v -= spec.coeffs[static_cast<size_t>(i)] << static_cast<unsigned>(k - 1 - i);
    return v == 0;
}

inline PeakClass predict_argmax_class(const RecurrenceSpec& spec) {
    if (spec.order() == 1 && spec.coeffs[0] == 1) return PeakClass::CentralPeak;
    const int k = spec.order();
    BigInt v = BigInt(1) << static_cast<unsigned>(k);
    for (int i = 0; i < k; ++i)
        v -= spec.coeffs[static_cast<size_t>(i)] << static_cast<unsigned>(k - 1 - i);
    if (v == 0) return PeakClass::ParityDependent;
    return v > 0 ? PeakClass::At2NMinus1 : PeakClass::At2N; // f(2) > 0 iff R < 2
}

inline long predicted_index(PeakClass c, long n) {
    switch (c) {
        case PeakClass::At2NMinus1: return 2 * n - 1;
        case PeakClass::At2N: return 2 * n;
        case PeakClass::ParityDependent: return n % 2 == 0 ? 2 * n - 1 : 2 * n;
        case PeakClass::CentralPeak: return n + 1;
    }
    return 0;
}

// Exact self linear convolution y[n] = sum_k x_k x_{n-k}, indices 2..2N.
struct ConvolutionResult {
    long n = 0;
    std::vector<BigInt> values; // values[i] = y[i+2]
    long argmax_index = 0;      // smallest index attaining the maximum
    bool tie = false;           // maximum attained at more than one index
    PeakClass predicted = PeakClass::At2NMinus1;
    bool agrees = false; // the predicted index attains the maximum at this N

    const BigInt& y(long idx) const { // 1-based convolution index in [2, 2N]
        if (idx < 2 || idx > 2 * n)
            throw IndexOutOfRange("y index " + std::to_string(idx) + " outside [2, " +
                                  std::to_string(2 * n) + "]");
        return values[static_cast<size_t>(idx - 2)];
    }
};

namespace detail {
inline std::vector<BigInt> convolve_values(const Sequence& seq) {
    const long n = seq.length();
    std::vector<BigInt> y(static_cast<size_t>(2 * n - 1), BigInt(0)); // y[2..2N]
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) y[static_cast<size_t>(i + j - 2)] += seq.at(i) * seq.at(j);
    return y;
}
} // namespace detail

inline ConvolutionResult self_convolve(const Sequence& seq) {
    if (seq.length() < 2)
        throw SequenceTooShort("self convolution needs N >= 2, have " +
                               std::to_string(seq.length()));
    ConvolutionResult result;
    result.n = seq.length();
    result.values = detail::convolve_values(seq);
    size_t best = 0;
    for (size_t i = 1; i < result.values.size(); ++i) {
        if (result.values[i] > result.values[best]) {
            best = i;
            result.tie = false;
        } else if (result.values[i] == result.values[best]) {
            result.tie = true;
        }
    }
    result.argmax_index = static_cast<long>(best) + 2;
    result.predicted = predict_argmax_class(seq.spec);
    const long want = predicted_index(result.predicted, result.n);
    result.agrees = want >= 2 && want <= 2 * result.n &&
                    result.values[static_cast<size_t>(want - 2)] == result.values[best];
    return result;
}

// y[N+j] - y[N+j-1], exact. The final difference (j = N) equals
// x_N^2 - 2 x_N x_{N-1}, the quantity whose sign decides 2N vs 2N-1.
inline BigInt tail_difference(const Sequence& seq, long j) {
    const long n = seq.length();
    if (n < 2) throw SequenceTooShort("need N >= 2");
    if (j < 1 || j > n)
        throw IndexOutOfRange("j = " + std::to_string(j) + " outside [1, " + std::to_string(n) +
                              "]");
    const std::vector<BigInt> y = detail::convolve_values(seq);
    return y[static_cast<size_t>(n + j - 2)] - y[static_cast<size_t>(n + j - 3)];
}

// Per-N comparison of observed argmax against the root-based prediction.
struct PredictionReport {
    struct Row {
        long n = 0;
        long argmax = 0;
        long predicted_idx = 0;
        bool agrees = false;
        bool tie = false;
    };
    PeakClass predicted = PeakClass::At2NMinus1;
    std::vector<Row> rows;
    // Least N0 such that prediction and observation agree for every
    // N in [N0, Nmax]; empty when even Nmax disagrees.
    std::optional<long> minimal_agreement_n;
};

inline PredictionReport verify_prediction(const RecurrenceSpec& spec, long n_min, long n_max) {
    if (n_min < 2 || n_min > n_max || n_max > 300)
        throw IndexOutOfRange("need 2 <= Nmin <= Nmax <= 300");
    PredictionReport report;
    report.predicted = predict_argmax_class(spec);
    std::optional<long> last_bad;
    for (long n = n_min; n <= n_max; ++n) {
        const ConvolutionResult c = self_convolve(generate(spec, n));
        report.rows.push_back({n, c.argmax_index, predicted_index(c.predicted, n), c.agrees, c.tie});
        if (!c.agrees) last_bad = n;
    }
    if (!last_bad)
        report.minimal_agreement_n = n_min;
    else if (*last_bad < n_max)
        report.minimal_agreement_n = *last_bad + 1;
    return report;
}

// f_{2k} < min{2 f_{2k-1}, f_{2k+1}/2} for the a=1, b=2 sequence, checked as
// integer inequalities (2 f_{2k} < f_{2k+1}) so nothing leaves exact
// arithmetic.
inline bool jacobsthal_parity_check(long kmax) {
    if (kmax < 1) throw IndexOutOfRange("kmax must be >= 1");
    const Sequence seq = generate(make_spec({1, 2}), 2 * kmax + 1);
    for (long k = 1; k <= kmax; ++k) {
        if (!(seq.at(2 * k) < 2 * seq.at(2 * k - 1))) return false;
        if (!(2 * seq.at(2 * k) < seq.at(2 * k + 1))) return false;
    }
    return true;
}

} // namespace recdist
