#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "rhoq/catalog.hpp"
#include "rhoq/integer.hpp"
#include "rhoq/rho.hpp"

namespace rhoq {

enum class OutputFormat { plain, csv, json };

inline std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

// Counter values are serialized as decimal strings in JSON: they are exact
// unbounded integers, and strings survive any JSON parser unchanged. Small
// structural numbers (n, order, elapsed_ms) stay native.
using json = nlohmann::ordered_json;

inline json params_to_json(const VariantSpec& spec) {
    json params = json::object();
    if (requires_ell(spec.variant)) params["ell"] = spec.ell;
    if (requires_colors(spec.variant)) params["k"] = spec.k;
    return params;
}

inline json table_to_json(const VariantSpec& spec, std::span<const Int> values) {
    json doc;
    doc["variant"] = variant_name(spec.variant);
    doc["params"] = params_to_json(spec);
    doc["order"] = spec.order;
    json rows = json::array();
    for (std::size_t n = 0; n < values.size(); ++n)
        rows.push_back({{"n", n}, {"value", values[n].str()}});
    doc["values"] = std::move(rows);
    return doc;
}

inline json report_to_json(const VerificationReport& report) {
    json doc;
    doc["variant"] = variant_name(report.spec.variant);
    doc["params"] = params_to_json(report.spec);
    doc["order"] = report.checked_order;
    doc["oracle"] = oracle_name(report.oracle);
    json mismatches = json::array();
    for (const Mismatch& m : report.mismatches)
        mismatches.push_back({{"n", m.n},
                              {"series", m.series_value.str()},
                              {"oracle", m.oracle_value.str()}});
    doc["mismatches"] = std::move(mismatches);
    doc["elapsed_ms"] = report.elapsed_ms;
    return doc;
}

inline json reports_to_json(std::span<const VerificationReport> reports) {
    json doc = json::array();
    for (const VerificationReport& report : reports) doc.push_back(report_to_json(report));
    return doc;
}

inline json recurrence_to_json(std::span<const RecurrenceCheck> rows) {
    json doc;
    bool all_hold = true;
    json out_rows = json::array();
    for (const RecurrenceCheck& row : rows) {
        all_hold = all_hold && row.holds;
        out_rows.push_back({{"n", row.n},
                            {"rho_a", row.rho_a_value.str()},
                            {"lhs", row.lhs.str()},
                            {"rhs", row.rhs.str()},
                            {"holds", row.holds}});
    }
    doc["all_hold"] = all_hold;
    doc["rows"] = std::move(out_rows);
    return doc;
}

namespace detail {

inline std::string spec_label(const VariantSpec& spec) {
    std::string label = variant_name(spec.variant);
    if (requires_ell(spec.variant)) label += " ell=" + std::to_string(spec.ell);
    if (requires_colors(spec.variant)) label += " k=" + std::to_string(spec.k);
    return label;
}

// variant,ell,k,order,oracle,mismatch_count,first_mismatch_n
inline void report_csv_row(std::ostream& out, const VerificationReport& report) {
    out << variant_name(report.spec.variant) << ',';
    if (requires_ell(report.spec.variant)) out << report.spec.ell;
    out << ',';
    if (requires_colors(report.spec.variant)) out << report.spec.k;
    out << ',' << report.checked_order << ',' << oracle_name(report.oracle) << ','
        << report.mismatches.size() << ',';
    if (!report.mismatches.empty()) out << report.mismatches.front().n;
    out << '\n';
}

inline void report_plain_lines(std::ostream& out, const VerificationReport& report) {
    out << spec_label(report.spec) << " order=" << report.checked_order
        << " oracle=" << oracle_name(report.oracle)
        << " mismatches=" << report.mismatches.size() << ' '
        << (report.ok() ? "ok" : "MISMATCH") << '\n';
    for (const Mismatch& m : report.mismatches)
        out << "  n=" << m.n << " series=" << m.series_value
            << " oracle=" << m.oracle_value << '\n';
}

inline constexpr const char* report_csv_header =
    "variant,ell,k,order,oracle,mismatch_count,first_mismatch_n\n";

}  // namespace detail

inline void render_table(std::ostream& out, const VariantSpec& spec,
                         std::span<const Int> values, OutputFormat format) {
    switch (format) {
        case OutputFormat::plain:
            for (std::size_t n = 0; n < values.size(); ++n)
                out << n << ' ' << values[n] << '\n';
            break;
        case OutputFormat::csv:
            out << "n,value\n";
            for (std::size_t n = 0; n < values.size(); ++n)
                out << n << ',' << values[n] << '\n';
            break;
        case OutputFormat::json:
            out << table_to_json(spec, values).dump(2) << '\n';
            break;
    }
}

inline void render_report(std::ostream& out, const VerificationReport& report,
                          OutputFormat format) {
    switch (format) {
        case OutputFormat::plain:
            detail::report_plain_lines(out, report);
            break;
        case OutputFormat::csv:
            out << detail::report_csv_header;
            detail::report_csv_row(out, report);
            break;
        case OutputFormat::json:
            out << report_to_json(report).dump(2) << '\n';
            break;
    }
}

inline void render_reports(std::ostream& out, std::span<const VerificationReport> reports,
                           OutputFormat format) {
    switch (format) {
        case OutputFormat::plain: {
            std::size_t failed = 0;
            for (const VerificationReport& report : reports) {
                detail::report_plain_lines(out, report);
                if (!report.ok()) ++failed;
            }
            if (failed == 0)
                out << "all " << reports.size() << " identities verified\n";
            else
                out << failed << " of " << reports.size() << " identities FAILED\n";
            break;
        }
        case OutputFormat::csv:
            out << detail::report_csv_header;
            for (const VerificationReport& report : reports) detail::report_csv_row(out, report);
            break;
        case OutputFormat::json:
            out << reports_to_json(reports).dump(2) << '\n';
            break;
    }
}

inline void render_recurrence(std::ostream& out, std::span<const RecurrenceCheck> rows,
                              OutputFormat format) {
    switch (format) {
        case OutputFormat::plain:
            for (const RecurrenceCheck& row : rows)
                out << "n=" << row.n << " rho_a=" << row.rho_a_value << " lhs=" << row.lhs
                    << " rhs=" << row.rhs << ' ' << (row.holds ? "ok" : "FAIL") << '\n';
            break;
        case OutputFormat::csv:
            out << "n,rho_a,lhs,rhs,holds\n";
            for (const RecurrenceCheck& row : rows)
                out << row.n << ',' << row.rho_a_value << ',' << row.lhs << ',' << row.rhs
                    << ',' << (row.holds ? "true" : "false") << '\n';
            break;
        case OutputFormat::json:
            out << recurrence_to_json(rows).dump(2) << '\n';
            break;
    }
}

}  // namespace rhoq
