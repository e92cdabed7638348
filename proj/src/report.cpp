#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ngspec/scan.hpp"

namespace ngspec {

namespace {

const char* kColumns[] = {"bound", "g6", "status", "lhs", "rhs", "slack", "holds",
                          "equality", "tight", "skipped", "side", "reason", "note"};

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_real(double x) { return std::isfinite(x) ? format_real(x) : "null"; }

// RFC 4180: quote when the field holds a comma, quote, CR or LF.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* flag(bool b) { return b ? "true" : "false"; }

void write_jsonl(const ScanReport& report, std::ostream& out) {
    for (const auto& r : report.rows) {
        const bool have = !r.skipped;
        out << "{\"bound\":" << json_string(r.bound) << ",\"g6\":" << json_string(r.g6)
            << ",\"status\":" << json_string(std::string(status_name(r.status)))
            << ",\"lhs\":" << (have ? json_real(r.lhs) : "null") << ",\"rhs\":" << (have ? json_real(r.rhs) : "null")
            << ",\"slack\":" << (have ? json_real(r.slack) : "null") << ",\"holds\":" << flag(r.holds)
            << ",\"equality\":" << flag(r.equality) << ",\"tight\":" << flag(r.tight)
            << ",\"skipped\":" << flag(r.skipped) << ",\"side\":" << json_string(r.side)
            << ",\"reason\":" << json_string(r.reason) << ",\"note\":" << json_string(r.note) << "}\n";
    }
}

void write_csv(const ScanReport& report, std::ostream& out) {
    for (std::size_t k = 0; k < std::size(kColumns); ++k) out << (k ? "," : "") << kColumns[k];
    out << "\r\n";
    for (const auto& r : report.rows) {
        const bool have = !r.skipped;
        const std::string fields[] = {r.bound,
                                      r.g6,
                                      std::string(status_name(r.status)),
                                      have ? format_real(r.lhs) : "",
                                      have ? format_real(r.rhs) : "",
                                      have ? format_real(r.slack) : "",
                                      flag(r.holds),
                                      flag(r.equality),
                                      flag(r.tight),
                                      flag(r.skipped),
                                      r.side,
                                      r.reason,
                                      r.note};
        for (std::size_t k = 0; k < std::size(fields); ++k) out << (k ? "," : "") << csv_field(fields[k]);
        out << "\r\n";
    }
}

void write_summary(const ScanReport& report, std::ostream& out) {
    for (const auto& [key, value] : report.metadata) out << "# " << key << ": " << value << '\n';
    out << "# graphs: " << report.graphs << '\n';
    out << std::left << std::setw(15) << "bound" << std::setw(22) << "status" << std::right << std::setw(11)
        << "evaluated" << std::setw(11) << "skipped" << std::setw(11) << "violations" << std::setw(11) << "equalities"
        << std::setw(20) << "min_slack" << "  argmin_g6\n";
    for (const auto& a : report.aggregates) {
        out << std::left << std::setw(15) << a.bound << std::setw(22) << status_name(a.status) << std::right
            << std::setw(11) << a.evaluated << std::setw(11) << a.skipped << std::setw(11) << a.violations
            << std::setw(11) << a.equalities << std::setw(20) << (a.evaluated ? format_real(a.min_slack) : "-")
            << "  " << (a.evaluated ? a.argmin_g6 : "-") << '\n';
    }
    for (const auto& r : report.rows)
        if (r.violated())
            out << "violation " << r.bound << ' ' << r.g6 << " lhs=" << format_real(r.lhs)
                << " rhs=" << format_real(r.rhs) << " slack=" << format_real(r.slack) << '\n';
    out << "VIOLATIONS: " << report.violations() << '\n';
}

} // namespace

std::string format_real(double x) {
    if (!std::isfinite(x)) return "";
    if (x == 0.0) return "0"; // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

ReportFormat report_format_from_name(std::string_view name) {
    if (name == "jsonl") return ReportFormat::jsonl;
    if (name == "csv") return ReportFormat::csv;
    if (name == "summary" || name == "summary-text") return ReportFormat::summary;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

void write_report(const ScanReport& report, ReportFormat format, std::ostream& out) {
    switch (format) {
    case ReportFormat::jsonl: write_jsonl(report, out); break;
    case ReportFormat::csv: write_csv(report, out); break;
    case ReportFormat::summary: write_summary(report, out); break;
    }
    if (!out) throw std::runtime_error("report sink is not writable");
}

std::string render_report(const ScanReport& report, ReportFormat format) {
    std::ostringstream out;
    write_report(report, format, out);
    return out.str();
}

std::string subgraph_pair_json(const SubgraphPair& p) {
    std::ostringstream out;
    out << "{\"mode\":" << json_string(p.mode == SubgraphMode::edge ? "edge" : "full")
        << ",\"parent\":" << json_string(p.parent_g6) << ",\"child\":" << json_string(p.child_g6)
        << ",\"deletion\":" << json_string(p.deletion) << ",\"s_plus_parent\":" << json_real(p.parent_s_plus)
        << ",\"s_plus_child\":" << json_real(p.child_s_plus) << "}";
    return out.str();
}

} // namespace ngspec
