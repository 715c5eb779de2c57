// zetaforge command-line front end: run identity verifications, evaluate
// individual special functions, inspect the constants cache.

#include "zetaforge/constants.hpp"
#include "zetaforge/corpus.hpp"
#include "zetaforge/errors.hpp"
#include "zetaforge/nielsen.hpp"
#include "zetaforge/report.hpp"
#include "zetaforge/specfun.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

namespace {

using namespace zetaforge;

int write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::vector<std::string> split_ids(const std::string& list) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : list) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int run_verify(const cli::RunConfig& config) {
    using corpus::Registry;

    // expand selectors to records, preserving the id-sorted registry order
    std::vector<std::string> filters = config.ids.empty() ? std::vector<std::string>{""}
                                                          : config.ids;
    std::set<std::string> selected;
    for (const auto& f : filters) {
        auto recs = Registry::instance().list(f);
        if (recs.empty()) {
            std::cerr << "unknown identity or prefix: '" << f << "'. Valid ids:\n ";
            for (const auto* r : Registry::instance().list()) std::cerr << " " << r->id;
            std::cerr << "\n";
            return 2;
        }
        // an exact id hit selects just that record; otherwise the token is a
        // prefix (aliases included, so "L2" covers the whole family)
        std::vector<const corpus::IdentityRecord*> exact;
        for (const auto* r : recs)
            if (r->id == f) exact.push_back(r);
        for (const auto* r : exact.empty() ? recs : exact) selected.insert(r->id);
    }

    corpus::EvalContext ctx;
    ctx.max_terms = config.max_terms;

    std::vector<const corpus::IdentityRecord*> chosen;
    for (const auto* rec : Registry::instance().list())
        if (selected.count(rec->id)) chosen.push_back(rec);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<corpus::VerificationResult> results =
        corpus::evaluate_records(chosen, config.jobs, ctx, config.tol);
    double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    cli::ReportDocument doc = cli::build_report(config, results, wall);
    std::string text;
    switch (config.format) {
        case cli::RunConfig::Format::Json: text = cli::to_json(doc); break;
        case cli::RunConfig::Format::Markdown: text = cli::to_markdown(doc); break;
        default: text = cli::to_plain(doc); break;
    }
    int rc = write_out(text, config.out_path);
    if (rc != 0) return rc;
    return doc.summary.failed == 0 ? 0 : 1;
}

int run_eval(const std::string& name, const std::vector<double>& args) {
    using numerics::ExtendedReal;
    struct Entry {
        const char* name;
        size_t arity;
        std::function<ExtendedReal(const std::vector<double>&)> fn;
    };
    static const std::vector<Entry> table = {
        {"zeta", 1, [](const auto& a) { return specfun::zeta(a[0]); }},
        {"hurwitz_zeta", 2, [](const auto& a) { return specfun::hurwitz_zeta(a[0], a[1]); }},
        {"eta", 1, [](const auto& a) { return specfun::dirichlet_eta(a[0]); }},
        {"polygamma", 2, [](const auto& a) { return specfun::polygamma((int)a[0], a[1]); }},
        {"harmonic", 1, [](const auto& a) { return specfun::harmonic_number((long)a[0]); }},
        {"stieltjes1", 1, [](const auto& a) { return specfun::stieltjes_gamma1(a[0]); }},
        {"polylog", 2, [](const auto& a) { return specfun::polylog((int)a[0], a[1]); }},
        {"gamma0", 1, [](const auto& a) { return specfun::upper_gamma0(a[0]); }},
        {"log_gamma", 1, [](const auto& a) { return specfun::log_gamma(a[0]); }},
        {"arccot", 1, [](const auto& a) { return specfun::arccot(a[0]); }},
        {"xi", 1, [](const auto& a) { return nielsen::xi_series(a[0]); }},
    };
    for (const auto& e : table) {
        if (name != e.name) continue;
        if (args.size() != e.arity) {
            std::cerr << name << " expects " << e.arity << " argument(s)\n";
            return 2;
        }
        try {
            ExtendedReal v = e.fn(args);
            std::cout << name << "(";
            for (size_t i = 0; i < args.size(); ++i) std::cout << (i ? ", " : "") << args[i];
            char err[32];
            std::snprintf(err, sizeof err, "%.2e", v.err);
            std::cout << ") = " << v.value.to_string(33) << "  +/- " << err << "\n";
            return 0;
        } catch (const std::exception& ex) {
            std::cerr << name << ": " << ex.what() << "\n";
            return 2;
        }
    }
    std::cerr << "unknown function: " << name << " (try: ";
    for (const auto& e : table) std::cerr << e.name << " ";
    std::cerr << ")\n";
    return 2;
}

int run_list(const std::string& prefix, bool as_json) {
    auto recs = corpus::Registry::instance().list(prefix);
    if (recs.empty()) {
        std::cerr << "no identities match '" << prefix << "'\n";
        return 2;
    }
    if (as_json) {
        std::cout << corpus::Registry::instance().catalog_json(prefix) << "\n";
        return 0;
    }
    for (const auto* r : recs) {
        std::string params;
        for (const auto& p : r->params) {
            if (!params.empty()) params += "; ";
            params += p.label();
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.0e", r->tol);
        std::cout << r->id << "  [tol " << buf << ", "
                  << (r->cost == corpus::IdentityRecord::Cost::Slow ? "slow" : "fast") << "]";
        if (!params.empty()) std::cout << "  (" << params << ")";
        std::cout << "\n    " << r->statement << "\n";
    }
    return 0;
}

int run_constants(const std::string& out_path) {
    try {
        auto cache = specfun::ConstantsCache::validated_builtin();
        return write_out(cache.to_json() + "\n", out_path);
    } catch (const std::exception& ex) {
        std::cerr << "constants validation failed: " << ex.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"special-function identity verification harness"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "evaluate identities and report residuals");
    std::string ids_arg, report_arg = "plain", out_arg;
    cli::RunConfig config;
    verify->add_option("--ids", ids_arg, "comma-separated ids or prefixes")
        ->envname("ZETAFORGE_IDS");
    verify->add_option("--tol", config.tol, "tolerance override")->envname("ZETAFORGE_TOL");
    verify->add_option("--jobs", config.jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->envname("ZETAFORGE_JOBS");
    verify->add_option("--report", report_arg, "report format: plain|markdown|json")
        ->check(CLI::IsMember({"plain", "markdown", "json"}))
        ->envname("ZETAFORGE_REPORT");
    verify->add_option("--out", out_arg, "write the report to a file")->envname("ZETAFORGE_OUT");
    verify->add_option("--max-terms", config.max_terms, "summation engine cap")
        ->check(CLI::PositiveNumber)
        ->envname("ZETAFORGE_MAX_TERMS");

    // list
    auto* list = app.add_subcommand("list", "show registered identities");
    std::string prefix;
    bool list_json = false;
    list->add_option("prefix", prefix, "id/alias prefix or cost class (fast|slow)");
    list->add_flag("--json", list_json, "emit the JSON catalog");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    std::string fn_name;
    std::vector<double> fn_args;
    eval->add_option("name", fn_name, "function name")->required();
    eval->add_option("args", fn_args, "numeric arguments");

    // constants
    auto* consts = app.add_subcommand("constants", "validate and print the constants cache");
    std::string consts_out;
    consts->add_option("--out", consts_out, "write the JSON to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (config.tol < 0.0) {
                std::cerr << "tolerance must be positive\n";
                return 2;
            }
            if (report_arg == "json") config.format = cli::RunConfig::Format::Json;
            else if (report_arg == "markdown") config.format = cli::RunConfig::Format::Markdown;
            else config.format = cli::RunConfig::Format::Plain;
            config.ids = split_ids(ids_arg);
            config.out_path = out_arg;
            return run_verify(config);
        }
        if (list->parsed()) return run_list(prefix, list_json);
        if (eval->parsed()) return run_eval(fn_name, fn_args);
        if (consts->parsed()) return run_constants(consts_out);
    } catch (const config_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
