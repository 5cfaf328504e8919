#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "recdist/serialize.hpp"
#include "recdist/verify.hpp"

namespace recdist {

// Report builders behind the CLI subcommands. Builders are pure functions of
// their inputs; identical inputs produce byte-identical output.

inline Json gen_report(const Sequence& seq, const CharAnalysis& analysis) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "gen";
    j["spec"] = to_json(seq.spec);
    j["n"] = seq.length();
    j["values"] = to_json(seq);
    Json ratios = Json::array();
    for (long n = 2; n <= seq.length(); ++n)
        ratios.push_back(format_real(to_double(BigRat(seq.at(n), seq.at(n - 1)))));
    j["ratios"] = ratios;
    j["dominant_root"] = format_real(analysis.R);
    j["root_precision"] = format_real(analysis.precision);
    return j;
}

inline Json roots_report(const RecurrenceSpec& spec, const CharAnalysis& analysis) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "roots";
    j["spec"] = to_json(spec);
    j.update(to_json(analysis));
    return j;
}

inline std::string roots_csv(const CharAnalysis& analysis) {
    std::ostringstream out;
    out << "R,precision,is_simple,is_strictly_dominant,exceeds_golden_ratio,is_fibonacci_case,"
           "root_re,root_im\n";
    for (const auto& root : analysis.root_set)
        out << format_real(analysis.R) << "," << format_real(analysis.precision) << ","
            << analysis.is_simple << "," << analysis.is_strictly_dominant << ","
            << analysis.exceeds_golden_ratio << "," << analysis.is_fibonacci_case << ","
            << format_real(root.real()) << "," << format_real(root.imag()) << "\n";
    return out.str();
}

struct DistRow {
    long n = 0;
    BigRat mean_inc, var_inc, mean_dec, var_dec;
    double asym_mean_inc = 0;  // N - 1/(R-1)
    double gap_mean_inc = 0;   // |E_inc - asymptote|
    double gap_mean_dec = 0;   // |E_dec - R/(R-1)|
    double gap_var = 0;        // |Var_dec - R/(R-1)^2| (= increasing gap, Var is flip-invariant)
    double tv = 0;
    double var_over_mean_dec = 0;
};

struct DistTable {
    RecurrenceSpec spec;
    double r = 0;
    double limit_mean_dec = 0;
    double limit_var = 0;
    double var_over_mean = 0;
    std::vector<DistRow> rows;
};

inline DistTable build_dist_table(const RecurrenceSpec& spec, long n_min, long n_max) {
    DistTable table;
    table.spec = spec;
    table.r = dominant_root(char_polynomial(spec), 1e-13);
    table.limit_mean_dec = limit_mean_decreasing(table.r);
    table.limit_var = limit_variance(table.r);
    table.var_over_mean = variance_over_mean_limit(table.r);
    const GeometricLimit geo = geometric_limit(table.r);
    for (long n = n_min; n <= n_max; ++n) {
        const Sequence seq = generate(spec, n);
        const InducedDistribution inc = induce(seq, Orientation::Increasing);
        const InducedDistribution dec = induce(seq, Orientation::Decreasing);
        DistRow row;
        row.n = n;
        const auto [mi, vi] = detail::exact_mean_var(inc);
        const auto [md, vd] = detail::exact_mean_var(dec);
        row.mean_inc = mi;
        row.var_inc = vi;
        row.mean_dec = md;
        row.var_dec = vd;
        row.asym_mean_inc = asymptotic_mean_increasing(table.r, n);
        row.gap_mean_inc = std::abs(to_double(mi) - row.asym_mean_inc);
        row.gap_mean_dec = std::abs(to_double(md) - table.limit_mean_dec);
        row.gap_var = std::abs(to_double(vd) - table.limit_var);
        row.tv = tv_distance(dec, geo);
        row.var_over_mean_dec = to_double(vd / md);
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline Json dist_report(const DistTable& table) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "dist";
    j["spec"] = to_json(table.spec);
    j["R"] = format_real(table.r);
    j["limit_mean_decreasing"] = format_real(table.limit_mean_dec);
    j["limit_variance"] = format_real(table.limit_var);
    j["limit_var_over_mean"] = format_real(table.var_over_mean);
    Json rows = Json::array();
    for (const DistRow& row : table.rows) {
        Json rj;
        rj["n"] = row.n;
        rj["mean_increasing"] = rational_string(row.mean_inc);
        rj["variance_increasing"] = rational_string(row.var_inc);
        rj["mean_decreasing"] = rational_string(row.mean_dec);
        rj["variance_decreasing"] = rational_string(row.var_dec);
        rj["asymptotic_mean_increasing"] = format_real(row.asym_mean_inc);
        rj["gap_mean_increasing"] = format_real(row.gap_mean_inc);
        rj["gap_mean_decreasing"] = format_real(row.gap_mean_dec);
        rj["gap_variance"] = format_real(row.gap_var);
        rj["tv_distance"] = format_real(row.tv);
        rj["var_over_mean_decreasing"] = format_real(row.var_over_mean_dec);
        rows.push_back(std::move(rj));
    }
    j["rows"] = rows;
    return j;
}

// One increasing and one decreasing row per N. The increasing mean diverges:
// its limit column carries the divergent marker and its gap column measures
// the distance to the N-dependent asymptote N - 1/(R-1).
inline std::string dist_csv(const DistTable& table) {
    std::ostringstream out;
    out << "N,orientation,mean,variance,limit_mean,limit_variance,abs_gap_mean,abs_gap_variance\n";
    for (const DistRow& row : table.rows) {
        out << row.n << ",increasing," << rational_string(row.mean_inc) << ","
            << rational_string(row.var_inc) << "," << kDivergent << ","
            << format_real(table.limit_var) << "," << format_real(row.gap_mean_inc) << ","
            << format_real(row.gap_var) << "\n";
        out << row.n << ",decreasing," << rational_string(row.mean_dec) << ","
            << rational_string(row.var_dec) << "," << format_real(table.limit_mean_dec) << ","
            << format_real(table.limit_var) << "," << format_real(row.gap_mean_dec) << ","
            << format_real(row.gap_var) << "\n";
    }
    return out.str();
}

// Moment-convergence table: decreasing-orientation moments against E(Y^k).
inline std::string moments_csv(const RecurrenceSpec& spec, long n_min, long n_max, int m) {
    const double r = dominant_root(char_polynomial(spec), 1e-13);
    const GeometricLimit geo = geometric_limit(r);
    std::ostringstream out;
    out << "N,k,finite_moment,limit_moment,gap,tv_distance\n";
    for (long n = n_min; n <= n_max; ++n) {
        const Sequence seq = generate(spec, n);
        const InducedDistribution dec = induce(seq, Orientation::Decreasing);
        const double tv = tv_distance(dec, geo);
        for (int k = 1; k <= m; ++k) {
            BigRat finite = 0;
            for (long i = 1; i <= n; ++i) {
                BigRat npow = 1;
                for (int j = 0; j < k; ++j) npow *= i;
                finite += npow * dec.pmf[static_cast<size_t>(i - 1)];
            }
            const double limit = geometric_moment(r, k);
            out << n << "," << k << "," << rational_string(finite) << "," << format_real(limit)
                << "," << format_real(std::abs(to_double(finite) - limit)) << ","
                << format_real(tv) << "\n";
        }
    }
    return out.str();
}

inline Json conv_report(const RecurrenceSpec& spec, const PredictionReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "conv";
    j["spec"] = to_json(spec);
    j["predicted_class"] = peak_class_name(report.predicted);
    j["minimal_agreement_n"] =
        report.minimal_agreement_n ? Json(*report.minimal_agreement_n) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& row : report.rows)
        rows.push_back(Json{{"n", row.n},
                            {"argmax", row.argmax},
                            {"predicted_index", row.predicted_idx},
                            {"agrees", row.agrees},
                            {"tie", row.tie}});
    j["rows"] = rows;
    return j;
}

// Second-order specs fill the a and b columns; other orders put the
// semicolon-joined coefficient list under a and leave b empty.
inline std::string conv_csv(const RecurrenceSpec& spec, const PredictionReport& report) {
    std::string a, b;
    if (spec.order() == 2) {
        a = spec.coeffs[0].str();
        b = spec.coeffs[1].str();
    } else {
        for (size_t i = 0; i < spec.coeffs.size(); ++i)
            a += (i ? ";" : "") + spec.coeffs[i].str();
    }
    std::ostringstream out;
    out << "a,b,N,argmax,predicted_class,agrees,tie\n";
    for (const auto& row : report.rows)
        out << a << "," << b << "," << row.n << "," << row.argmax << ","
            << peak_class_name(report.predicted) << "," << row.agrees << "," << row.tie << "\n";
    return out.str();
}

struct SweepRow {
    long a = 0, b = 0;
    double r = 0, limit_mean = 0, limit_var = 0;
    bool is_maximizer = false;
};

struct SweepTable {
    std::vector<SweepRow> rows; // sorted by a, then b
    long max_a = 0, max_b = 0;
    double mean_margin = 0, var_margin = 0; // min lead of the maximizer
};

inline SweepTable build_sweep_table(long grid_a, long grid_b) {
    if (grid_a < 1 || grid_b < 1 || grid_a > 20 || grid_b > 20)
        throw IndexOutOfRange("grid bounds must lie in [1, 20]");
    SweepTable table;
    double best_mean = -1, best_var = -1;
    for (long a = 1; a <= grid_a; ++a)
        for (long b = 1; b <= grid_b; ++b) {
            SweepRow row;
            row.a = a;
            row.b = b;
            row.r = dominant_root(char_polynomial(make_spec({a, b})), 1e-13);
            row.limit_mean = limit_mean_decreasing(row.r);
            row.limit_var = limit_variance(row.r);
            if (row.limit_mean > best_mean) {
                best_mean = row.limit_mean;
                table.max_a = a;
                table.max_b = b;
            }
            best_var = std::max(best_var, row.limit_var);
            table.rows.push_back(row);
        }
    table.mean_margin = 1e300;
    table.var_margin = 1e300;
    for (SweepRow& row : table.rows) {
        row.is_maximizer = row.a == table.max_a && row.b == table.max_b;
        if (!row.is_maximizer) {
            table.mean_margin = std::min(table.mean_margin, best_mean - row.limit_mean);
            table.var_margin = std::min(table.var_margin, best_var - row.limit_var);
        }
    }
    if (table.rows.size() == 1) table.mean_margin = table.var_margin = 0;
    return table;
}

inline Json sweep_report(const SweepTable& table) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "sweep";
    j["maximizer"] = Json{{"a", table.max_a}, {"b", table.max_b}};
    j["mean_margin"] = format_real(table.mean_margin);
    j["variance_margin"] = format_real(table.var_margin);
    Json rows = Json::array();
    for (const SweepRow& row : table.rows)
        rows.push_back(Json{{"a", row.a},
                            {"b", row.b},
                            {"R", format_real(row.r)},
                            {"limit_mean", format_real(row.limit_mean)},
                            {"limit_variance", format_real(row.limit_var)},
                            {"is_maximizer", row.is_maximizer}});
    j["rows"] = rows;
    return j;
}

inline std::string sweep_csv(const SweepTable& table) {
    std::ostringstream out;
    out << "a,b,R,limit_mean,limit_variance,is_maximizer\n";
    for (const SweepRow& row : table.rows)
        out << row.a << "," << row.b << "," << format_real(row.r) << ","
            << format_real(row.limit_mean) << "," << format_real(row.limit_var) << ","
            << row.is_maximizer << "\n";
    return out.str();
}

inline Json verify_report(const std::vector<CheckResult>& checks, double tol) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify-all";
    j["tolerance"] = format_real(tol);
    bool all = true;
    Json rows = Json::array();
    for (const CheckResult& check : checks) {
        all = all && check.passed;
        Json items = Json::array();
        for (const CheckItem& item : check.items)
            items.push_back(Json{{"name", item.name},
                                 {"passed", item.passed},
                                 {"expected", item.expected},
                                 {"observed", item.observed},
                                 {"tolerance", item.tolerance}});
        rows.push_back(Json{{"name", check.name}, {"passed", check.passed}, {"items", items}});
    }
    j["passed"] = all;
    j["checks"] = rows;
    return j;
}

inline std::string verify_csv(const std::vector<CheckResult>& checks) {
    std::ostringstream out;
    out << "check,item,passed,expected,observed,tolerance\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    for (const CheckResult& check : checks)
        for (const CheckItem& item : check.items)
            out << quote(check.name) << "," << quote(item.name) << "," << item.passed << ","
                << quote(item.expected) << "," << quote(item.observed) << ","
                << quote(item.tolerance) << "\n";
    return out.str();
}

inline std::string verify_text(const std::vector<CheckResult>& checks) {
    std::ostringstream out;
    for (const CheckResult& check : checks) {
        out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << "\n";
        for (const CheckItem& item : check.items)
            out << "  " << (item.passed ? "[pass] " : "[FAIL] ") << item.name << " (expected "
                << item.expected << ", observed " << item.observed << ", tolerance "
                << item.tolerance << ")\n";
    }
    return out.str();
}

} // namespace recdist
