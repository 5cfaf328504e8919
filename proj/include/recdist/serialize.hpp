#pragma once

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recdist/charpoly.hpp"
#include "recdist/conv_analyzer.hpp"
#include "recdist/induced_dist.hpp"
#include "recdist/moment_engine.hpp"
#include "recdist/numeric.hpp"
#include "recdist/recurrence.hpp"

namespace recdist {

// Serialization rules: big integers and rationals as decimal strings (never
// through binary floating point), reals as strings at 15 significant digits,
// divergent limits as the explicit marker "divergent".
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kDivergent = "divergent";

inline Json real_or_divergent(const std::optional<double>& v) {
    return v ? Json(format_real(*v)) : Json(kDivergent);
}

inline Json to_json(const RecurrenceSpec& spec) {
    Json j;
    j["order"] = spec.order();
    Json coeffs = Json::array(), inits = Json::array();
    for (const BigInt& a : spec.coeffs) coeffs.push_back(a.str());
    for (const BigInt& f : spec.inits) inits.push_back(f.str());
    j["coeffs"] = coeffs;
    j["inits"] = inits;
    return j;
}

inline Json to_json(const Sequence& seq) {
    Json values = Json::array();
    for (const BigInt& v : seq.values) values.push_back(v.str());
    return values;
}

inline std::string to_csv(const Sequence& seq) {
    std::ostringstream out;
    out << "n,f_n\n";
    for (long n = 1; n <= seq.length(); ++n) out << n << "," << seq.at(n).str() << "\n";
    return out.str();
}

inline Json to_json(const CharAnalysis& analysis) {
    Json j;
    j["R"] = format_real(analysis.R);
    j["precision"] = format_real(analysis.precision);
    Json roots = Json::array();
    for (const std::complex<double>& r : analysis.root_set)
        roots.push_back(Json{{"re", format_real(r.real())}, {"im", format_real(r.imag())}});
    j["roots"] = roots;
    j["is_simple"] = analysis.is_simple;
    j["is_strictly_dominant"] = analysis.is_strictly_dominant;
    j["exceeds_golden_ratio"] = analysis.exceeds_golden_ratio;
    j["is_fibonacci_case"] = analysis.is_fibonacci_case;
    return j;
}

inline Json to_json(const InducedDistribution& dist) {
    Json j;
    j["orientation"] = orientation_name(dist.orientation);
    j["n"] = dist.n;
    Json pmf = Json::array();
    for (const BigRat& p : dist.pmf) pmf.push_back(rational_string(p));
    j["pmf"] = pmf;
    return j;
}

inline Json to_json(const ConvolutionResult& conv) {
    Json j;
    j["n"] = conv.n;
    Json values = Json::array();
    for (const BigInt& v : conv.values) values.push_back(v.str());
    j["values"] = values; // y[2..2N]
    j["argmax_index"] = conv.argmax_index;
    j["tie"] = conv.tie;
    j["predicted_class"] = peak_class_name(conv.predicted);
    j["agrees"] = conv.agrees;
    return j;
}

inline Json to_json(const PhiLinearForm& form) {
    return Json{{"k", form.k}, {"A", form.a.str()}, {"B", form.b.str()}};
}

} // namespace recdist
