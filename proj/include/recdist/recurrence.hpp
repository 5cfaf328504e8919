#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "recdist/errors.hpp"
#include "recdist/numeric.hpp"

namespace recdist {

// A k-th order linear recurrence f[n] = a1 f[n-1] + ... + ak f[n-k] with
// positive integer coefficients and positive integer initial values
// f[1]..f[k]. All public indexing is 1-based.
struct RecurrenceSpec {
    std::vector<BigInt> coeffs; // a1..ak, a1 multiplies f[n-1]
    std::vector<BigInt> inits;  // f[1]..f[k]

    int order() const { return static_cast<int>(coeffs.size()); }

    bool is_fibonacci() const {
        return order() == 2 && coeffs[0] == 1 && coeffs[1] == 1 &&
               inits[0] == 1 && inits[1] == 1;
    }

    bool operator==(const RecurrenceSpec&) const = default;
};

inline RecurrenceSpec make_spec(const std::vector<long long>& coeffs,
                                const std::vector<long long>& inits) {
    if (coeffs.empty() || inits.empty())
        throw EmptySpec("coefficient and initial-value lists must be non-empty");
    if (coeffs.size() != inits.size())
        throw LengthMismatch("got " + std::to_string(coeffs.size()) + " coefficients but " +
                             std::to_string(inits.size()) + " initial values");
    RecurrenceSpec spec;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 1)
            throw NonPositiveEntry("coefficient a" + std::to_string(i + 1) + " = " +
                                   std::to_string(coeffs[i]) + " (every entry must be >= 1)");
        spec.coeffs.emplace_back(coeffs[i]);
    }
    for (size_t i = 0; i < inits.size(); ++i) {
        if (inits[i] < 1)
            throw NonPositiveEntry("initial value f[" + std::to_string(i + 1) + "] = " +
                                   std::to_string(inits[i]) + " (every entry must be >= 1)");
        spec.inits.emplace_back(inits[i]);
    }
    return spec;
}

// Default initial values: all ones (f[1] = ... = f[k] = 1).
inline RecurrenceSpec make_spec(const std::vector<long long>& coeffs) {
    if (coeffs.empty())
        throw EmptySpec("coefficient list must be non-empty");
    return make_spec(coeffs, std::vector<long long>(coeffs.size(), 1));
}

// A finite prefix f[1..N], exact integers throughout.
struct Sequence {
    RecurrenceSpec spec;
    std::vector<BigInt> values; // values[n-1] = f[n]

    long length() const { return static_cast<long>(values.size()); }

    const BigInt& at(long n) const { // 1-based
        if (n < 1 || n > length())
            throw IndexOutOfRange("n = " + std::to_string(n) + " outside [1, " +
                                  std::to_string(length()) + "]");
        return values[static_cast<size_t>(n - 1)];
    }
};

inline Sequence generate(const RecurrenceSpec& spec, long n) {
    if (n < 1)
        throw IndexOutOfRange("sequence length must be >= 1, got " + std::to_string(n));
    const int k = spec.order();
    Sequence seq{spec, {}};
    seq.values.reserve(static_cast<size_t>(n));
    for (int i = 0; i < k && i < n; ++i) seq.values.push_back(spec.inits[static_cast<size_t>(i)]);
    for (long m = k; m < n; ++m) {
        BigInt next = 0;
        for (int i = 0; i < k; ++i)
            next += spec.coeffs[static_cast<size_t>(i)] * seq.values[static_cast<size_t>(m - 1 - i)];
        seq.values.push_back(std::move(next));
    }
    return seq;
}

// f[N]/f[N-1] from the exact integers, accurate to ~1 ulp of double.
inline double ratio_estimate(const Sequence& seq) {
    if (seq.length() < 2)
        throw SequenceTooShort("ratio needs at least 2 terms, have " +
                               std::to_string(seq.length()));
    return to_double(BigRat(seq.values.back(), seq.values[seq.values.size() - 2]));
}

// Evaluates C [R^n - Rs^n] for the second-order recurrence, with
// R = (a + sqrt(a^2+4b))/2, Rs = -b/R, C = 1/sqrt(a^2+4b). This reproduces
// the (1,1)-initialized sequence only when a = 1 (it forces f[2] = a), so it
// serves as an asymptotic cross-check, never as a generator.
inline double closed_form_check(long long a, long long b, long n) {
    if (a < 1 || b < 1) throw NonPositiveEntry("a and b must be >= 1");
    if (n < 1) throw IndexOutOfRange("n must be >= 1");
    const double disc = std::sqrt(static_cast<double>(a) * a + 4.0 * b);
    const double root = (a + disc) / 2.0;
    const double other = (a - disc) / 2.0;
    return (std::pow(root, n) - std::pow(other, n)) / disc;
}

} // namespace recdist
