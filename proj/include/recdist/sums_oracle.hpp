#pragma once

#include <cmath>

#include "recdist/errors.hpp"
#include "recdist/numeric.hpp"
#include "recdist/recurrence.hpp"

namespace recdist {

// Closed forms for the finite sums G(x) = sum x^n, sum n x^n, sum n^2 x^n
// over n = 1..N, plus the exact and asymptotic sum bundles the distribution
// modules use as oracles.

inline BigRat geometric_sum_closed(const BigRat& x, long n) {
    if (x == 1) throw XEqualsOne("closed form needs x != 1");
    BigRat xn = rat_pow(x, static_cast<unsigned long>(n));
    return (xn * x - x) / (x - 1);
}

inline BigRat weighted_sum_closed(const BigRat& x, long n) {
    if (x == 1) throw XEqualsOne("closed form needs x != 1");
    BigRat xn1 = rat_pow(x, static_cast<unsigned long>(n + 1));
    BigRat d = x - 1;
    return (n * xn1 * x - (n + 1) * xn1 + x) / (d * d);
}

// sum n^2 x^n = [N^2 x^{N+3} - (2N^2+2N-1) x^{N+2} + (N+1)^2 x^{N+1} - x^2 - x] / (x-1)^3
inline BigRat square_weighted_sum_closed(const BigRat& x, long n) {
    if (x == 1) throw XEqualsOne("closed form needs x != 1");
    BigRat xn1 = rat_pow(x, static_cast<unsigned long>(n + 1));
    BigRat d = x - 1;
    BigRat nn(n);
    return (nn * nn * xn1 * x * x - (2 * nn * nn + 2 * nn - 1) * xn1 * x +
            (nn + 1) * (nn + 1) * xn1 - x * x - x) /
           (d * d * d);
}

struct PowerSums {
    BigRat g;  // sum x^n
    BigRat g1; // sum n x^n
    BigRat g2; // sum n^2 x^n
};

// Bundle path: at the singular point x = 1 the sums are N, N(N+1)/2,
// N(N+1)(2N+1)/6, returned explicitly instead of erroring.
inline PowerSums power_sums_closed(const BigRat& x, long n) {
    if (x == 1) {
        BigInt nn(n);
        return {BigRat(nn), BigRat(nn * (nn + 1), 2), BigRat(nn * (nn + 1) * (2 * nn + 1), 6)};
    }
    return {geometric_sum_closed(x, n), weighted_sum_closed(x, n),
            square_weighted_sum_closed(x, n)};
}

// S, S1, S2 over the sequence as given plus the same sums over the flipped
// sequence, every one computed by direct summation so the flip identities
// stay independently testable.
struct SumBundle {
    long n = 0;
    BigInt s, s1, s2;    // sum f[n], sum n f[n], sum n^2 f[n]
    BigInt sd, sd1, sd2; // same with f[N+1-n] in place of f[n]
};

inline SumBundle exact_bundle(const Sequence& seq) {
    const long n = seq.length();
    SumBundle b;
    b.n = n;
    for (long m = 1; m <= n; ++m) {
        const BigInt& up = seq.at(m);
        const BigInt& down = seq.at(n + 1 - m);
        b.s += up;
        b.s1 += m * up;
        b.s2 += m * m * up;
        b.sd += down;
        b.sd1 += m * down;
        b.sd2 += m * m * down;
    }
    return b;
}

struct AsymptoticBundle {
    long n = 0;
    double s = 0, s1 = 0, s2 = 0;
};

// Leading-order forms: every sum is C * (closed power sum at x = R), with
// C = 1/sqrt(a^2+4b). They approximate sums of the sequence the closed form
// C(R^n - Rs^n) generates, whose initial values are f[1] = 1, f[2] = a.
inline AsymptoticBundle asymptotic_bundle(long long a, long long b, long n, double R) {
    if (a < 1 || b < 1) throw NonPositiveEntry("a and b must be >= 1");
    const double c = 1.0 / std::sqrt(static_cast<double>(a) * a + 4.0 * b);
    const double d = R - 1.0;
    const double rn1 = std::pow(R, n + 1);
    AsymptoticBundle out;
    out.n = n;
    out.s = c * rn1 / d;
    out.s1 = c * (n * rn1 * R - (n + 1) * rn1 + R) / (d * d);
    const double nn = static_cast<double>(n);
    out.s2 = c *
             (nn * nn * rn1 * R * R - (2 * nn * nn + 2 * nn - 1) * rn1 * R +
              (nn + 1) * (nn + 1) * rn1 - R * R - R) /
             (d * d * d);
    return out;
}

} // namespace recdist
