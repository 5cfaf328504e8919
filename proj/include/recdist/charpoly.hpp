#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "recdist/errors.hpp"
#include "recdist/numeric.hpp"
#include "recdist/recurrence.hpp"

namespace recdist {

// Characteristic polynomial f(x) = x^k - a1 x^{k-1} - ... - ak.
// coeffs[0] = +1, coeffs[i] = -a_i for i >= 1, all exact integers.
struct CharPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    BigRat eval_exact(const BigRat& x) const {
        BigRat acc = coeffs[0];
        for (size_t i = 1; i < coeffs.size(); ++i) acc = acc * x + coeffs[i];
        return acc;
    }

    double eval(double x) const {
        double acc = static_cast<double>(coeffs[0]);
        for (size_t i = 1; i < coeffs.size(); ++i)
            acc = acc * x + static_cast<double>(coeffs[i]);
        return acc;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> acc = static_cast<double>(coeffs[0]);
        for (size_t i = 1; i < coeffs.size(); ++i)
            acc = acc * x + static_cast<double>(coeffs[i]);
        return acc;
    }

    double deriv(double x) const {
        const int k = degree();
        double acc = k * static_cast<double>(coeffs[0]);
        for (int i = 1; i < k; ++i)
            acc = acc * x + (k - i) * static_cast<double>(coeffs[static_cast<size_t>(i)]);
        return acc;
    }

    BigInt max_recurrence_coeff() const {
        BigInt m = 0;
        for (size_t i = 1; i < coeffs.size(); ++i) m = std::max(m, BigInt(-coeffs[i]));
        return m;
    }
};

inline CharPolynomial char_polynomial(const RecurrenceSpec& spec) {
    CharPolynomial poly;
    poly.coeffs.reserve(static_cast<size_t>(spec.order()) + 1);
    poly.coeffs.emplace_back(1);
    for (const BigInt& a : spec.coeffs) poly.coeffs.push_back(-a);
    return poly;
}

namespace detail {
struct RootBracket {
    double value;
    double width; // achieved bracket width, 0 when the root was hit exactly
};

// Bisection with exact sign evaluation at rational midpoints. The bracket
// [1, 1 + max a_i] is guaranteed: f(1) = 1 - sum(a_i) <= 0 and f at the upper
// end is >= 1 because f(x) >= x^k - M (x^k - 1)/(x - 1) with x - 1 = M.
// Exact signs mean the bisection can never step over the root.
inline RootBracket bisect_dominant_root(const CharPolynomial& poly, double tol) {
    constexpr double kMinTol = 1e-15; // floor imposed by the double return type
    if (!(tol > 0) || tol < kMinTol)
        throw ToleranceTooSmall("tol must lie in [1e-15, inf), got " + format_real(tol));

    BigRat lo(1), hi(BigInt(1) + poly.max_recurrence_coeff());
    if (poly.eval_exact(lo) == 0) return {1.0, 0.0}; // only k = 1, a1 = 1
    const BigRat rat_tol(tol);
    while (hi - lo >= rat_tol) {
        BigRat mid = (lo + hi) / 2;
        const BigRat v = poly.eval_exact(mid);
        if (v == 0) return {to_double(mid), 0.0};
        if (v < 0)
            lo = mid;
        else
            hi = mid;
    }
    return {to_double((lo + hi) / 2), to_double(hi - lo)};
}
} // namespace detail

// Largest positive real root, bracket width < tol on return.
inline double dominant_root(const CharPolynomial& poly, double tol) {
    return detail::bisect_dominant_root(poly, tol).value;
}

// All k roots via Durand-Kerner, desk-scale diagnostic (k <= 16). Sorted by
// descending modulus, then descending real part, then ascending imaginary
// part, so output order is deterministic.
inline std::vector<std::complex<double>> all_roots(const CharPolynomial& poly) {
    const int k = poly.degree();
    if (k > 16)
        throw DegreeTooLarge("degree " + std::to_string(k) + " exceeds desk-scale cap 16");
    if (k == 1) return {{static_cast<double>(-poly.coeffs[1]), 0.0}};

    const double radius = 1.0 + static_cast<double>(poly.max_recurrence_coeff()); // Cauchy bound
    std::vector<std::complex<double>> w(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double angle = 2.0 * M_PI * j / k + 0.4; // offset breaks axis symmetry
        w[static_cast<size_t>(j)] = std::polar(radius, angle);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (int j = 0; j < k; ++j) {
            std::complex<double> denom = 1.0;
            for (int m = 0; m < k; ++m)
                if (m != j) denom *= w[static_cast<size_t>(j)] - w[static_cast<size_t>(m)];
            const std::complex<double> step = poly.eval(w[static_cast<size_t>(j)]) / denom;
            w[static_cast<size_t>(j)] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-14 * radius) break;
    }
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() < b.imag();
    });
    return w;
}

struct Lemma1Report {
    bool is_simple = false;
    bool is_strictly_dominant = false;
    bool exceeds_golden_ratio = false;
};

struct CharAnalysis {
    double R = 0.0;                              // dominant positive real root
    double precision = 0.0;                      // achieved bracket width
    std::vector<std::complex<double>> root_set;  // all k roots (desk scale)
    bool is_simple = false;
    bool is_strictly_dominant = false;
    bool exceeds_golden_ratio = false;
    bool is_fibonacci_case = false; // k = 2, a = b = 1, where R = phi exactly
};

// The three claims, checked numerically. exceeds_golden_ratio admits equality
// at R = phi; is_fibonacci_case on the analysis tells the two cases apart.
inline Lemma1Report verify_lemma1(const CharPolynomial& poly, const CharAnalysis& analysis,
                                  double tol = 1e-9) {
    Lemma1Report report;
    report.is_simple = std::abs(poly.deriv(analysis.R)) > tol;
    double max_other = 0.0;
    double best = std::numeric_limits<double>::infinity();
    size_t best_idx = 0;
    for (size_t i = 0; i < analysis.root_set.size(); ++i) {
        const double d = std::abs(analysis.root_set[i] - std::complex<double>(analysis.R, 0.0));
        if (d < best) best = d, best_idx = i;
    }
    for (size_t i = 0; i < analysis.root_set.size(); ++i)
        if (i != best_idx) max_other = std::max(max_other, std::abs(analysis.root_set[i]));
    report.is_strictly_dominant =
        analysis.root_set.size() <= 1 || max_other < analysis.R - tol;
    report.exceeds_golden_ratio = analysis.R > kPhi - 1e-12;
    return report;
}

inline CharAnalysis analyze(const RecurrenceSpec& spec, double tol = 1e-12) {
    const CharPolynomial poly = char_polynomial(spec);
    CharAnalysis analysis;
    const auto root = detail::bisect_dominant_root(poly, tol);
    analysis.R = root.value;
    analysis.precision = root.width;
    analysis.root_set = all_roots(poly);
    analysis.is_fibonacci_case =
        spec.order() == 2 && spec.coeffs[0] == 1 && spec.coeffs[1] == 1;
    const Lemma1Report report = verify_lemma1(poly, analysis);
    analysis.is_simple = report.is_simple;
    analysis.is_strictly_dominant = report.is_strictly_dominant;
    analysis.exceeds_golden_ratio = report.exceeds_golden_ratio;
    return analysis;
}

} // namespace recdist
