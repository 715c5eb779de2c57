#include "doctest.h"

#include "zetaforge/corpus.hpp"

#include <cmath>
#include <set>

using namespace zetaforge::corpus;

TEST_CASE("registry census") {
    const auto& reg = Registry::instance();
    auto all = reg.list();
    CHECK(all.size() >= 40);

    const char* required[] = {
        "E1.1",  "E1.2",  "E1.4",  "E1.5",  "E1.8",  "E1.10", "E1.12", "P1",    "E1.14",
        "E1.17", "E1.18", "E1.20", "E1.24", "E1.25", "E1.26", "E1.27", "P2",    "E1.31",
        "E1.32", "E1.33", "E1.34", "E1.36", "E1.37", "P3",    "E1.40", "E1.41", "E1.42",
        "L1",    "C1",    "E1.47", "E1.49", "L2a",   "L2b",   "L2c",   "L2d",   "L2e",
        "L2f",   "E2.8",  "E2.10", "E2.11", "E2.12", "E3.1",  "E3.3",  "E3.4",  "E3.5",
        "E3.7"};
    for (const char* id : required) CHECK(reg.find(id) != nullptr);

    CHECK(reg.find("E1.2")->params.size() == 9);   // k = 2..10
    CHECK(reg.find("E1.49")->params.size() == 3);

    // section filter: exactly the xi-function records
    auto e3 = reg.list("E3");
    std::set<std::string> ids;
    for (const auto* r : e3) ids.insert(r->id);
    CHECK(ids == std::set<std::string>{"E3.1", "E3.3", "E3.4", "E3.5", "E3.7"});

    // the partial-summation family is seven records (a-f plus the derivative)
    CHECK(reg.list("L2").size() == 7);

    auto fast = reg.list("fast");
    auto slow = reg.list("slow");
    CHECK(fast.size() + slow.size() == all.size());
    CHECK(slow.size() >= 3);
}

TEST_CASE("independence audit holds for every record") {
    for (const auto& r : Registry::instance().records()) {
        REQUIRE(r.evaluators.size() >= 2);
        for (size_t i = 0; i < r.evaluators.size(); ++i) {
            std::set<std::string> a(r.evaluators[i].routes.begin(),
                                    r.evaluators[i].routes.end());
            for (size_t j = i + 1; j < r.evaluators.size(); ++j) {
                std::set<std::string> b(r.evaluators[j].routes.begin(),
                                        r.evaluators[j].routes.end());
                CHECK(a != b);
            }
        }
    }
}

TEST_CASE("catalog export is well-formed") {
    std::string json = Registry::instance().catalog_json();
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("\"paper_ref\"") != std::string::npos);
    CHECK(json.find("E1.41") != std::string::npos);
}

TEST_CASE("evaluate_identity basics") {
    VerificationResult r = evaluate_identity("E1.4");
    CHECK(r.pass);
    CHECK(r.residual < 1e-9);
    CHECK(r.lhs_err <= r.tol / 10.0);

    CHECK_THROWS_AS(evaluate_identity("NOPE"), std::out_of_range);

    // forced failure under an unreachable tolerance, well-formed result
    VerificationResult f = evaluate_identity("E1.4", nullptr, {}, 1e-30);
    CHECK(!f.pass);
    CHECK(f.error.empty());
    CHECK(f.residual > 1e-30);
}

TEST_CASE("parameterized evaluation picks the worst sample") {
    const IdentityRecord* rec = Registry::instance().find("E1.2");
    REQUIRE(rec);
    VerificationResult all = evaluate_identity("E1.2");
    double worst = 0.0;
    for (const auto& p : rec->params) {
        VerificationResult one = evaluate_identity(*rec, &p, {});
        CHECK(one.pass);
        worst = std::max(worst, one.residual);
    }
    CHECK(all.residual == worst);
}

TEST_CASE("evaluator failures are captured per row, not thrown") {
    EvalContext tiny;
    tiny.max_terms = 32;   // below any tail model's validity window
    VerificationResult row = evaluate_identity("E1.4", nullptr, tiny);
    CHECK(!row.pass);
    CHECK(row.error.find("unreachable") != std::string::npos);
}

TEST_CASE("suite evaluation is deterministic across job counts") {
    auto a = evaluate_suite("E3", 1);
    auto b = evaluate_suite("E3", 8);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].param == b[i].param);
        CHECK(a[i].lhs == b[i].lhs);         // bit-for-bit
        CHECK(a[i].rhs == b[i].rhs);
        CHECK(a[i].residual == b[i].residual);
    }
}

TEST_CASE("fast records finish quickly") {
    auto rows = evaluate_suite("fast", 2);
    for (const auto& r : rows) {
        CHECK(r.pass);
        CHECK(r.elapsed_ms < 1000.0);
    }
}

TEST_CASE("pass flag matches the residual/error contract") {
    auto rows = evaluate_suite("E1", 2);
    for (const auto& r : rows) {
        bool expected = r.error.empty() && r.residual <= r.tol &&
                        std::max(r.lhs_err, r.rhs_err) <= r.tol / 10.0;
        // the internal check also covers third/fourth evaluators, so pass
        // may only be stricter than this two-route reconstruction
        if (r.pass) CHECK(expected);
    }
}
