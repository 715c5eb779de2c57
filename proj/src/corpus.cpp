#include "zetaforge/corpus.hpp"

#include "zetaforge/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace zetaforge::corpus {

std::string ParamSample::label() const {
    std::string out;
    for (const auto& [k, v] : values) {
        if (!out.empty()) out += " ";
        char buf[64];
        if (v == std::floor(v) && std::abs(v) < 1e15)
            std::snprintf(buf, sizeof buf, "%s=%lld", k.c_str(), (long long)v);
        else
            std::snprintf(buf, sizeof buf, "%s=%g", k.c_str(), v);
        out += buf;
    }
    return out;
}

double ParamSample::get(const std::string& name) const {
    for (const auto& [k, v] : values)
        if (k == name) return v;
    throw std::out_of_range("parameter not in sample: " + name);
}

// ---------------------------------------------------------------------------

std::vector<const IdentityRecord*> Registry::list(const std::string& filter) const {
    std::vector<const IdentityRecord*> out;
    for (const auto& r : records_) {
        bool match;
        if (filter.empty()) {
            match = true;
        } else if (filter == "fast") {
            match = r.cost == IdentityRecord::Cost::Fast;
        } else if (filter == "slow") {
            match = r.cost == IdentityRecord::Cost::Slow;
        } else {
            match = r.id.rfind(filter, 0) == 0;
            for (const auto& a : r.aliases)
                match = match || a.rfind(filter, 0) == 0;
        }
        if (match) out.push_back(&r);
    }
    std::sort(out.begin(), out.end(),
              [](const IdentityRecord* a, const IdentityRecord* b) { return a->id < b->id; });
    return out;
}

const IdentityRecord* Registry::find(const std::string& id) const {
    for (const auto& r : records_)
        if (r.id == id) return &r;
    return nullptr;
}

std::string Registry::catalog_json(const std::string& filter) const {
    nlohmann::ordered_json out;
    out["schema"] = 1;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const IdentityRecord* r : list(filter)) {
        nlohmann::ordered_json j;
        j["id"] = r->id;
        j["paper_ref"] = r->statement;
        nlohmann::ordered_json ps = nlohmann::ordered_json::array();
        for (const auto& p : r->params) ps.push_back(p.label());
        j["params"] = ps;
        j["tol"] = r->tol;
        j["notes"] = r->notes;
        items.push_back(j);
    }
    out["identities"] = items;
    return out.dump(2);
}

// ---------------------------------------------------------------------------

VerificationResult evaluate_identity(const IdentityRecord& rec, const ParamSample* param,
                                     const EvalContext& ctx, double tol_override) {
    static const ParamSample empty_sample{};
    const ParamSample& sample = param ? *param : empty_sample;

    VerificationResult out;
    out.id = rec.id;
    out.param = sample.label();
    out.tol = tol_override > 0.0 ? tol_override : rec.tol;

    auto t0 = std::chrono::steady_clock::now();
    std::vector<ExtendedReal> values;
    try {
        values.reserve(rec.evaluators.size());
        for (const auto& ev : rec.evaluators) values.push_back(ev.fn(sample, ctx));
    } catch (const std::exception& e) {
        out.error = e.what();
        out.pass = false;
        out.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return out;
    }

    out.lhs = values[0].value;
    out.rhs = values[1].value;
    out.lhs_err = values[0].err;
    out.rhs_err = values[1].err;
    double max_res = 0.0, max_err = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        max_err = std::max(max_err, values[i].err);
        for (size_t j = i + 1; j < values.size(); ++j)
            max_res = std::max(max_res, std::abs((values[i].value - values[j].value).hi()));
    }
    out.residual = max_res;
    out.pass = max_res <= out.tol && max_err <= out.tol / 10.0;
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

VerificationResult evaluate_identity(const std::string& id, const ParamSample* param,
                                     const EvalContext& ctx, double tol_override) {
    const IdentityRecord* rec = Registry::instance().find(id);
    if (!rec) throw std::out_of_range("unknown identity id: " + id);
    if (param || rec->params.empty()) return evaluate_identity(*rec, param, ctx, tol_override);
    VerificationResult worst;
    double total_ms = 0.0;
    bool all_pass = true;
    for (size_t i = 0; i < rec->params.size(); ++i) {
        VerificationResult r = evaluate_identity(*rec, &rec->params[i], ctx, tol_override);
        total_ms += r.elapsed_ms;
        all_pass = all_pass && r.pass;
        if (i == 0 || r.residual > worst.residual || !r.error.empty()) worst = r;
    }
    worst.pass = all_pass;
    worst.elapsed_ms = total_ms;
    return worst;
}

std::vector<VerificationResult> evaluate_suite(const std::string& filter, int jobs,
                                               const EvalContext& ctx, double tol_override) {
    return evaluate_records(Registry::instance().list(filter), jobs, ctx, tol_override);
}

std::vector<VerificationResult> evaluate_records(const std::vector<const IdentityRecord*>& recs,
                                                 int jobs, const EvalContext& ctx,
                                                 double tol_override) {
    if (jobs < 1) throw config_error("evaluate_suite requires jobs >= 1");
    struct Row {
        const IdentityRecord* rec;
        const ParamSample* param;
    };
    std::vector<Row> rows;
    for (const IdentityRecord* rec : recs) {
        if (rec->params.empty()) {
            rows.push_back({rec, nullptr});
        } else {
            for (const auto& p : rec->params) rows.push_back({rec, &p});
        }
    }

    std::vector<VerificationResult> results(rows.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            results[i] = evaluate_identity(*rows[i].rec, rows[i].param, ctx, tol_override);
        }
    };
    int n = std::min<int>(jobs, (int)rows.size());
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

} // namespace zetaforge::corpus
