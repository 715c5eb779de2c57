#pragma once

// Verification reports: a deterministic document (values as decimal strings)
// serialized to JSON, markdown, or plain text.  Wall time is isolated in a
// single summary field so identical configurations produce byte-identical
// JSON up to that one member.

#include "zetaforge/corpus.hpp"

#include <string>
#include <vector>

namespace zetaforge::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    std::vector<std::string> ids;   // id/prefix selectors; empty = all
    double tol = 0.0;               // 0 = per-record defaults
    int jobs = 1;
    enum class Format { Plain, Markdown, Json } format = Format::Plain;
    std::string out_path;           // empty = stdout
    long max_terms = 1L << 24;
};

struct ReportRow {
    std::string id;
    std::string param;
    std::string lhs;     // decimal string, 30 significant digits
    std::string rhs;
    double lhs_err = 0.0;
    double rhs_err = 0.0;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string error;

    bool operator==(const ReportRow&) const = default;
};

struct ReportDocument {
    std::string tool_version;
    RunConfig config;
    std::vector<ReportRow> rows;
    struct Summary {
        long total = 0;
        long passed = 0;
        long failed = 0;
        double max_residual = 0.0;
        double wall_ms = 0.0;   // the single non-deterministic field
    } summary;

    /// Equality over everything except summary.wall_ms.
    bool same_results(const ReportDocument& other) const;
};

ReportDocument build_report(const RunConfig& config,
                            const std::vector<corpus::VerificationResult>& results,
                            double wall_ms);

std::string to_json(const ReportDocument& doc);
ReportDocument from_json(const std::string& text);
std::string to_markdown(const ReportDocument& doc);
std::string to_plain(const ReportDocument& doc);

} // namespace zetaforge::cli
