// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Exit status 0 iff all pass.

#include "zetaforge/corpus.hpp"
#include "zetaforge/nielsen.hpp"
#include "zetaforge/series_catalog.hpp"
#include "zetaforge/specfun.hpp"
#include "zetaforge/summation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

using namespace zetaforge;
using namespace zetaforge::numerics;
using zetaforge::corpus::evaluate_identity;
using zetaforge::corpus::evaluate_suite;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* what, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what,
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

// 1. the four published decimal values, under 30 s
void criterion_flagship() {
    auto t0 = std::chrono::steady_clock::now();
    struct Case {
        const char* id;
        double expected;
        double tol;
    };
    const Case cases[] = {
        {"E1.1", -0.102321900856, 1e-9},
        {"P1", 0.262903, 5e-6},
        {"P2", 0.0868281269673, 1e-10},
        {"P3", -0.215191890953, 1e-9},
    };
    bool ok = true;
    double worst = 0.0;
    for (const auto& c : cases) {
        auto r = evaluate_identity(c.id);
        double delta = std::abs(r.lhs.hi() - c.expected);
        worst = std::max(worst, delta / c.tol);
        ok = ok && r.pass && delta < c.tol;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 30.0;
    report(1, ok, "flagship decimals reproduce",
           fmt("worst |delta|/tol = %.2e, %.2f s", worst, secs));
}

// 2. the full registry passes at its tolerances, under 120 s at jobs=4
void criterion_full_corpus() {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = evaluate_suite("", 4);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    long failed = 0;
    double max_res = 0.0;
    for (const auto& r : rows) {
        if (!r.pass) ++failed;
        max_res = std::max(max_res, r.residual);
    }
    size_t records = corpus::Registry::instance().list().size();
    bool ok = failed == 0 && records >= 40 && secs < 120.0;
    char detail[160];
    std::snprintf(detail, sizeof detail, "%zu records, %zu rows, %ld failed, max residual %.2e, %.2f s",
                  records, rows.size(), failed, max_res, secs);
    report(2, ok, "full corpus passes", detail);
}

// 3. gamma_1 - gamma_1(1/2) = ln^2 2 + 2 gamma ln 2 by the limit route
void criterion_stieltjes() {
    DDouble lhs = specfun::stieltjes_gamma1(1.0).value - specfun::stieltjes_gamma1(0.5).value;
    DDouble rhs = ddc::ln2() * ddc::ln2() + 2.0 * specfun::const_gamma() * ddc::ln2();
    double delta = std::abs((lhs - rhs).hi());
    report(3, delta < 1e-12, "stieltjes difference relation", fmt("|delta| = %.2e", delta));
}

// 4. partial-summation and xi representation cross-checks
void criterion_representations() {
    bool ok = true;
    double worst_l2 = 0.0;
    for (const char* id : {"L2a", "L2b", "L2c", "L2d", "L2e", "L2f", "E2.12"}) {
        auto rows = evaluate_suite(id, 2);
        for (const auto& r : rows) {
            worst_l2 = std::max(worst_l2, r.residual);
            ok = ok && r.error.empty() && r.residual < 1e-10;
        }
    }
    double worst_xi = 0.0;
    for (double x : {0.5, 1.0, 1.5, 2.0, 5.0}) {
        double d = std::abs((nielsen::xi_series(x).value - nielsen::xi_integral(x).value).hi());
        worst_xi = std::max(worst_xi, d);
        ok = ok && d < 1e-11;
    }
    nielsen::XiMean mean = nielsen::xi_mean();
    ok = ok && mean.max_pairwise_residual < 1e-9;
    report(4, ok, "representation cross-checks",
           fmt("sbp worst %.2e, xi routes worst %.2e", worst_l2, worst_xi) +
               fmt(", mean pairwise %.2e", mean.max_pairwise_residual));
}

// 5. quadrature oracles
void criterion_quadrature() {
    bool ok = true;
    double worst = 0.0;
    for (auto& r : evaluate_suite("E1.49", 2)) {
        worst = std::max(worst, r.residual);
        ok = ok && r.error.empty() && r.residual < 1e-12;
    }
    for (auto& r : evaluate_suite("E1.27", 2)) {
        worst = std::max(worst, r.residual);
        ok = ok && r.error.empty() && r.residual < 1e-12;
    }
    double worst_l1 = 0.0;
    for (auto& r : evaluate_suite("L1", 2)) {
        worst_l1 = std::max(worst_l1, r.residual);
        ok = ok && r.error.empty() && r.residual < 1e-9;
    }
    report(5, ok, "quadrature oracles",
           fmt("arc-cotangent/log-ratio worst %.2e, oscillatory worst %.2e", worst, worst_l1));
}

// 6. oracle equivalence and tail/recurrence invariants
void criterion_oracles() {
    bool ok = true;

    // tail-closed summation vs extrapolation on five registry series
    std::vector<SeriesSpec> specs = {
        corpus::series_log_ratio_corr(),      corpus::series_inv_rm1_r3(),
        corpus::series_harmonic_log_kernel(), corpus::series_inv_log_up(),
        corpus::series_arccot_over_l(),
    };
    double worst_routes = 0.0;
    for (auto& spec : specs) {
        ExtendedReal direct = sum_series(spec, 1e-11);
        std::vector<Partial> partials;
        CompensatedAccumulator acc;
        long n = spec.n0 - 1;
        for (long mark = 128; mark <= 32768; mark <<= 1) {
            while (n < mark) acc.add(spec.term(++n));
            partials.push_back({mark, acc.result().value});
        }
        ExtendedReal ext = extrapolate(partials, ExtrapolationModel::LogOverN);
        double d = std::abs((direct.value - ext.value).hi());
        worst_routes = std::max(worst_routes, d);
        ok = ok && d < 1e-8;
    }

    // tail consistency across the three split points
    double worst_tail = 0.0;
    const long splits[3] = {100, 1000, 10000};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            long n1 = splits[i], n2 = splits[j];
            CompensatedAccumulator zs, ls, hs_sum;
            HarmonicSequence hs;
            hs.at(n1);
            for (long n = n1 + 1; n <= n2; ++n) {
                DDouble inv3 = powi(DDouble(1.0) / (double)n, 3);
                zs.add(ExtendedReal::exact(inv3));
                ls.add(ExtendedReal::exact(log(DDouble((double)n)) * inv3));
                hs_sum.add(ExtendedReal::exact(hs.at(n) * inv3));
            }
            auto gap = [&](ExtendedReal bridge, ExtendedReal t1) {
                double d = std::abs((bridge.value - t1.value).hi());
                worst_tail = std::max(worst_tail, d);
                return d <= bridge.err + t1.err + 1e-25;
            };
            ok = ok && gap(zs.result() + zeta_tail(3.0, n2), zeta_tail(3.0, n1));
            ok = ok && gap(ls.result() + log_zeta_tail(3.0, n2), log_zeta_tail(3.0, n1));
            ok = ok && gap(hs_sum.result() + harmonic_tail(3, n2), harmonic_tail(3, n1));
        }
    }

    // recurrence invariants at dyadic sample points
    std::mt19937 rng(20260808);
    auto grid = [&rng](double lo, double hi) {
        std::uniform_int_distribution<long> d((long)(lo * 65536), (long)(hi * 65536));
        return (double)d(rng) / 65536.0;
    };
    double worst_rec = 0.0;
    for (int i = 0; i < 100; ++i) {
        double x = grid(0.1, 20.0), a = grid(0.1, 10.0), s = grid(1.1, 8.0);
        double d1 = std::abs((specfun::polygamma(0, x + 1.0).value -
                              specfun::polygamma(0, x).value - DDouble(1.0) / x)
                                 .hi());
        double d2 = std::abs((specfun::polygamma(1, x + 1.0).value -
                              specfun::polygamma(1, x).value + DDouble(1.0) / (DDouble(x) * x))
                                 .hi());
        DDouble as = exp(-DDouble(s) * log(DDouble(a)));
        double d3 = std::abs(
            (specfun::hurwitz_zeta(s, a).value - specfun::hurwitz_zeta(s, a + 1.0).value - as)
                .hi());
        worst_rec = std::max({worst_rec, d1, d2, d3});
    }
    ok = ok && worst_rec < 1e-20;

    report(6, ok, "oracle equivalence and invariants",
           fmt("route gap %.2e, tail gap %.2e", worst_routes, worst_tail) +
               fmt(", recurrence %.2e", worst_rec));
}

// 7. composing the component sums reproduces the flagship closed form
void criterion_assembly() {
    auto r = evaluate_identity("E1.11");
    report(7, r.pass && r.residual < 1e-10, "derivation-chain coherence",
           fmt("residual = %.2e", r.residual));
}

} // namespace

int main() {
    criterion_flagship();
    criterion_full_corpus();
    criterion_stieltjes();
    criterion_representations();
    criterion_quadrature();
    criterion_oracles();
    criterion_assembly();
    if (failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failing\n", failures);
    return 1;
}
