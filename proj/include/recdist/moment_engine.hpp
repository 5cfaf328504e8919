#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "recdist/charpoly.hpp"
#include "recdist/errors.hpp"
#include "recdist/induced_dist.hpp"
#include "recdist/numeric.hpp"
#include "recdist/recurrence.hpp"

namespace recdist {

// The geometric law Y on {1,2,...} with p(n) = rho^n (1-rho)/rho, rho = 1/R,
// to which the decreasing-orientation distribution converges.
struct GeometricLimit {
    double rho = 0.0;

    double pmf(long n) const { return std::pow(rho, n) * (1.0 - rho) / rho; }
    double tail(long n) const { return std::pow(rho, n); } // P(Y > n), exact closed form
    double mean() const { return 1.0 / (1.0 - rho); }      // = R/(R-1)
    double variance() const { return rho / ((1.0 - rho) * (1.0 - rho)); } // = R/(R-1)^2
};

inline GeometricLimit geometric_limit(double r) {
    if (!(r > 1)) throw RNotGreaterThanOne("need R > 1, got " + format_real(r));
    return {1.0 / r};
}

// P_{k-1}, the degree-(k-1) integer polynomial with
//   sum_{n>=1} n^k x^n (1-x)/x = P_{k-1}(x) / (1-x)^k.
// These are the Eulerian polynomials: coefficients positive, palindromic,
// summing to k!.
struct MomentPolynomial {
    int order = 0;              // the moment order k
    std::vector<BigInt> coeffs; // ascending powers, size k
};

// Recursion P_r = (1-x){P_{r-1} + x P_{r-1}'} + (r+1) x P_{r-1}, from
// differentiating sum n^r x^n = x P_{r-1}(x)/(1-x)^{r+1}. The base cases
// P_0 = 1, P_1 = 1 + x pin the (r+1) multiplier; the exact-series oracle in
// the tests arbitrates.
inline MomentPolynomial moment_polynomial(int k) {
    if (k < 1) throw MomentOrderOutOfRange("k must be >= 1, got " + std::to_string(k));
    std::vector<BigInt> p{1}; // P_0
    for (int r = 1; r < k; ++r) {
        std::vector<BigInt> next(p.size() + 1, BigInt(0));
        for (size_t i = 0; i < p.size(); ++i) {
            const BigInt t = (BigInt(i) + 1) * p[i]; // coeffs of P + xP'
            next[i] += t;
            next[i + 1] -= t;
            next[i + 1] += (r + 1) * p[i];
        }
        p = std::move(next);
    }
    return {k, std::move(p)};
}

// E(Y^k) = P_{k-1}(rho) / (1-rho)^k with rho = 1/R. Templated so identity
// checks can run in extended precision; tolerances like 1e-10 at the k = 8
// magnitudes (~1e7) sit below double epsilon.
template <typename Real>
Real geometric_moment_t(const Real& r, int k) {
    if (!(r > 1)) throw RNotGreaterThanOne("need R > 1");
    const MomentPolynomial p = moment_polynomial(k);
    const Real rho = Real(1) / r;
    Real acc = 0;
    for (size_t i = p.coeffs.size(); i-- > 0;) acc = acc * rho + Real(p.coeffs[i]);
    Real d = 1 - rho;
    Real dk = 1;
    for (int i = 0; i < k; ++i) dk *= d;
    return acc / dk;
}

inline double geometric_moment(double r, int k) { return geometric_moment_t<double>(r, k); }

// |E(X^k at N, decreasing) - E(Y^k)|, exact finite moment against the closed
// form. k = 0 is normalization: both sides are 1, gap 0.
inline double moment_convergence_gap(const RecurrenceSpec& spec, long n, int k) {
    if (k == 0) return 0.0;
    if (k < 0 || k > kMaxMomentOrder)
        throw MomentOrderOutOfRange("k must lie in [0, " + std::to_string(kMaxMomentOrder) +
                                    "], got " + std::to_string(k));
    if (n < k) throw IndexOutOfRange("need N >= k");
    const Sequence seq = generate(spec, n);
    const InducedDistribution dist = induce(seq, Orientation::Decreasing);
    BigRat finite = 0;
    for (long m = 1; m <= n; ++m) {
        BigRat npow = 1;
        for (int j = 0; j < k; ++j) npow *= m;
        finite += npow * dist.pmf[static_cast<size_t>(m - 1)];
    }
    const double r = dominant_root(char_polynomial(spec), 1e-13);
    return std::abs(to_double(finite) - geometric_moment(r, k));
}

// Total variation distance between the finite decreasing-orientation
// distribution and the geometric limit:
//   1/2 [ sum_{n<=N} |p_N(n) - p(n)| + sum_{n>N} p(n) ],
// with the tail in closed form rho^N. Summation order is fixed (n ascending).
inline double tv_distance(const InducedDistribution& dist, const GeometricLimit& geo) {
    if (dist.orientation != Orientation::Decreasing)
        throw OrientationMismatch("tv_distance compares the decreasing orientation");
    double acc = 0.0;
    for (long n = 1; n <= dist.n; ++n)
        acc += std::abs(to_double(dist.pmf[static_cast<size_t>(n - 1)]) - geo.pmf(n));
    return 0.5 * (acc + geo.tail(dist.n));
}

// Z[phi] element u + v*phi; multiplication reduces with phi^2 = phi + 1.
struct ZPhi {
    BigInt u, v;

    ZPhi operator*(const ZPhi& o) const {
        return {u * o.u + v * o.v, u * o.v + v * o.u + v * o.v};
    }
};

// For the Fibonacci case E(Y^k) = P_{k-1}(phi - 1) * phi^{2k}, an element of
// Z[phi]; reduced exactly to A*phi + B.
struct PhiLinearForm {
    int k = 0;
    BigInt a, b; // E(Y^k) = a*phi + b
};

inline PhiLinearForm phi_linearize(int k) {
    const MomentPolynomial p = moment_polynomial(k);
    const ZPhi x{-1, 1}; // phi - 1 = 1/phi
    ZPhi acc{p.coeffs.back(), 0};
    for (size_t i = p.coeffs.size() - 1; i-- > 0;) {
        acc = acc * x;
        acc.u += p.coeffs[i];
    }
    ZPhi phi_pow{1, 0};
    for (int i = 0; i < 2 * k; ++i) phi_pow = phi_pow * ZPhi{0, 1};
    const ZPhi value = acc * phi_pow;
    return {k, value.v, value.u};
}

} // namespace recdist
