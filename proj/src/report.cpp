#include "zetaforge/report.hpp"

#include "zetaforge/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zetaforge::cli {

namespace {

const char* format_name(RunConfig::Format f) {
    switch (f) {
        case RunConfig::Format::Json: return "json";
        case RunConfig::Format::Markdown: return "markdown";
        default: return "plain";
    }
}

RunConfig::Format format_from(const std::string& s) {
    if (s == "json") return RunConfig::Format::Json;
    if (s == "markdown") return RunConfig::Format::Markdown;
    if (s == "plain") return RunConfig::Format::Plain;
    throw config_error("unknown report format: " + s);
}

} // namespace

bool ReportDocument::same_results(const ReportDocument& other) const {
    return tool_version == other.tool_version && config.ids == other.config.ids &&
           config.tol == other.config.tol && config.jobs == other.config.jobs &&
           config.max_terms == other.config.max_terms && rows == other.rows &&
           summary.total == other.summary.total && summary.passed == other.summary.passed &&
           summary.failed == other.summary.failed &&
           summary.max_residual == other.summary.max_residual;
}

ReportDocument build_report(const RunConfig& config,
                            const std::vector<corpus::VerificationResult>& results,
                            double wall_ms) {
    ReportDocument doc;
    doc.tool_version = kToolVersion;
    doc.config = config;
    doc.rows.reserve(results.size());
    for (const auto& r : results) {
        ReportRow row;
        row.id = r.id;
        row.param = r.param;
        row.lhs = r.lhs.to_string(30);
        row.rhs = r.rhs.to_string(30);
        row.lhs_err = r.lhs_err;
        row.rhs_err = r.rhs_err;
        row.residual = r.residual;
        row.tol = r.tol;
        row.pass = r.pass;
        row.error = r.error;
        doc.rows.push_back(std::move(row));
    }
    doc.summary.total = (long)results.size();
    doc.summary.passed = (long)std::count_if(results.begin(), results.end(),
                                             [](const auto& r) { return r.pass; });
    doc.summary.failed = doc.summary.total - doc.summary.passed;
    double mx = 0.0;
    for (const auto& r : results) mx = std::max(mx, r.residual);
    doc.summary.max_residual = mx;
    doc.summary.wall_ms = wall_ms;
    return doc;
}

std::string to_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["tool_version"] = doc.tool_version;
    j["config"] = {{"ids", doc.config.ids},
                   {"tol", doc.config.tol},
                   {"jobs", doc.config.jobs},
                   {"report", format_name(doc.config.format)},
                   {"max_terms", doc.config.max_terms}};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : doc.rows) {
        rows.push_back({{"id", r.id},
                        {"param", r.param},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"lhs_err", r.lhs_err},
                        {"rhs_err", r.rhs_err},
                        {"residual", r.residual},
                        {"tol", r.tol},
                        {"pass", r.pass},
                        {"error", r.error}});
    }
    j["rows"] = rows;
    j["summary"] = {{"total", doc.summary.total},
                    {"passed", doc.summary.passed},
                    {"failed", doc.summary.failed},
                    {"max_residual", doc.summary.max_residual},
                    {"wall_ms", doc.summary.wall_ms}};
    return j.dump(2) + "\n";
}

ReportDocument from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw config_error("report: unsupported schema");
    ReportDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    const auto& c = j.at("config");
    doc.config.ids = c.at("ids").get<std::vector<std::string>>();
    doc.config.tol = c.at("tol").get<double>();
    doc.config.jobs = c.at("jobs").get<int>();
    doc.config.format = format_from(c.at("report").get<std::string>());
    doc.config.max_terms = c.at("max_terms").get<long>();
    for (const auto& r : j.at("rows")) {
        ReportRow row;
        row.id = r.at("id").get<std::string>();
        row.param = r.at("param").get<std::string>();
        row.lhs = r.at("lhs").get<std::string>();
        row.rhs = r.at("rhs").get<std::string>();
        row.lhs_err = r.at("lhs_err").get<double>();
        row.rhs_err = r.at("rhs_err").get<double>();
        row.residual = r.at("residual").get<double>();
        row.tol = r.at("tol").get<double>();
        row.pass = r.at("pass").get<bool>();
        row.error = r.at("error").get<std::string>();
        doc.rows.push_back(std::move(row));
    }
    const auto& s = j.at("summary");
    doc.summary.total = s.at("total").get<long>();
    doc.summary.passed = s.at("passed").get<long>();
    doc.summary.failed = s.at("failed").get<long>();
    doc.summary.max_residual = s.at("max_residual").get<double>();
    doc.summary.wall_ms = s.at("wall_ms").get<double>();
    return doc;
}

std::string to_markdown(const ReportDocument& doc) {
    std::ostringstream out;
    out << "# Verification report (v" << doc.tool_version << ")\n\n";
    out << "| id | param | residual | tol | pass |\n";
    out << "|----|-------|----------|-----|------|\n";
    char buf[64];
    for (const auto& r : doc.rows) {
        std::snprintf(buf, sizeof buf, "%.3e", r.residual);
        out << "| " << r.id << " | " << r.param << " | " << buf << " | ";
        std::snprintf(buf, sizeof buf, "%.0e", r.tol);
        out << buf << " | " << (r.pass ? "yes" : (r.error.empty() ? "NO" : "error")) << " |\n";
    }
    out << "\n" << doc.summary.passed << "/" << doc.summary.total << " passed";
    std::snprintf(buf, sizeof buf, "%.3e", doc.summary.max_residual);
    out << ", max residual " << buf << ", " << doc.summary.wall_ms << " ms\n";
    return out.str();
}

std::string to_plain(const ReportDocument& doc) {
    std::ostringstream out;
    char buf[160];
    for (const auto& r : doc.rows) {
        std::snprintf(buf, sizeof buf, "%-6s %-16s residual %.3e  tol %.0e  %s", r.id.c_str(),
                      r.param.c_str(), r.residual, r.tol,
                      r.pass ? "pass" : (r.error.empty() ? "FAIL" : r.error.c_str()));
        out << buf << "\n";
    }
    std::snprintf(buf, sizeof buf, "%ld/%ld passed, max residual %.3e, %.0f ms",
                  doc.summary.passed, doc.summary.total, doc.summary.max_residual,
                  doc.summary.wall_ms);
    out << buf << "\n";
    return out.str();
}

} // namespace zetaforge::cli
