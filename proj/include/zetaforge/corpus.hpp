#pragma once

// The identity catalog: every registered identity carries at least two
// evaluators with distinct terminal routes, fixed parameter samples, and a
// tolerance; verification judges the maximum pairwise residual.

#include "zetaforge/extended_real.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetaforge::corpus {

using numerics::ExtendedReal;

struct EvalContext {
    long max_terms = 1L << 24;   // cap for the summation engine
};

struct ParamSample {
    std::vector<std::pair<std::string, double>> values;

    std::string label() const;                 // "k=2", "s=1.5 a=0.5", or ""
    double get(const std::string& name) const; // throws std::out_of_range
};

struct Evaluator {
    std::string name;                    // short route description
    std::vector<std::string> routes;     // terminal functions (independence audit)
    std::function<ExtendedReal(const ParamSample&, const EvalContext&)> fn;
};

struct IdentityRecord {
    std::string id;
    std::vector<std::string> aliases;    // extra filter keys (group tags)
    std::string statement;               // the identity in plain notation
    std::vector<ParamSample> params;     // empty: a single unparameterized run
    std::vector<Evaluator> evaluators;   // >= 2; route sets pairwise distinct
    double tol = 1e-9;
    enum class Cost { Fast, Slow } cost = Cost::Fast;
    std::string notes;
};

struct VerificationResult {
    std::string id;
    std::string param;       // sample label ("" when unparameterized)
    DDouble lhs{0.0};        // first evaluator
    DDouble rhs{0.0};        // second evaluator
    double lhs_err = 0.0;
    double rhs_err = 0.0;
    double residual = 0.0;   // max pairwise difference over all evaluators
    double tol = 0.0;
    bool pass = false;
    double elapsed_ms = 0.0;
    std::string error;       // evaluator failure message (implies pass = false)
};

class Registry {
public:
    static const Registry& instance();

    /// Records matching the filter: "" for all, an id/alias prefix, or the
    /// cost classes "fast"/"slow".  Stable ordering by id.
    std::vector<const IdentityRecord*> list(const std::string& filter = "") const;

    const IdentityRecord* find(const std::string& id) const;   // nullptr if absent
    const std::vector<IdentityRecord>& records() const { return records_; }

    /// JSON catalog {schema, identities: [{id, paper_ref, params, tol, notes}]}.
    std::string catalog_json(const std::string& filter = "") const;

private:
    Registry();
    std::vector<IdentityRecord> records_;
};

/// One (record, sample) evaluation.  Deterministic given (id, param, context).
VerificationResult evaluate_identity(const IdentityRecord& rec, const ParamSample* param,
                                     const EvalContext& ctx = {}, double tol_override = 0.0);

/// Lookup by id; with no param given, every sample is evaluated and the
/// worst-residual result is returned.  Unknown id -> std::out_of_range.
VerificationResult evaluate_identity(const std::string& id, const ParamSample* param = nullptr,
                                     const EvalContext& ctx = {}, double tol_override = 0.0);

/// Evaluate all matching (record, sample) rows, optionally on several
/// threads.  Per-row evaluator failures are captured in the row, never
/// thrown.  Output ordering is independent of the job count.
std::vector<VerificationResult> evaluate_suite(const std::string& filter = "", int jobs = 1,
                                               const EvalContext& ctx = {},
                                               double tol_override = 0.0);

/// Same, over an explicit record list (kept in the given order).
std::vector<VerificationResult> evaluate_records(const std::vector<const IdentityRecord*>& recs,
                                                 int jobs = 1, const EvalContext& ctx = {},
                                                 double tol_override = 0.0);

} // namespace zetaforge::corpus
