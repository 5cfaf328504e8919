#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace recdist {

// Exact arithmetic carries every sequence value and probability; doubles
// appear only at comparison/reporting boundaries. Real50 is for checks whose
// stated tolerances sit below double epsilon at the magnitudes involved.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Real50 = boost::multiprecision::cpp_bin_float_50;

inline const double kPhi = 1.6180339887498948482045868343656;

inline Real50 phi50() {
    return (1 + sqrt(Real50(5))) / 2;
}

inline Real50 to_real50(const BigRat& q) {
    return Real50(numerator(q)) / Real50(denominator(q));
}

inline double to_double(const BigRat& q) {
    return static_cast<double>(to_real50(q));
}

// Fixed 15 significant digits; the serialization contract for reals.
inline std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

// Always "num/den", denominator kept even when 1, so output is uniform.
inline std::string rational_string(const BigRat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigRat rat_pow(BigRat x, unsigned long e) {
    BigRat r = 1;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

} // namespace recdist
