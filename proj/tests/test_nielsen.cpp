#include "doctest.h"

#include "zetaforge/errors.hpp"
#include "zetaforge/nielsen.hpp"
#include "zetaforge/specfun.hpp"

#include <cmath>

using namespace zetaforge;
using namespace zetaforge::nielsen;
using namespace zetaforge::specfun;

namespace {
double dd_abs(DDouble v) { return std::abs(v.hi()); }
}

TEST_CASE("sbp representations match the direct routes") {
    for (double s : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        auto v = sbp_eval(SbpKind::ZetaSbp, {s});
        CHECK(dd_abs(v.value - zeta(s + 1.0).value) < 1e-12);
        CHECK(v.err <= 1e-15);
    }
    for (double s : {1.0, 2.0, 2.5, 3.0, 4.0}) {
        auto v = sbp_eval(SbpKind::EtaSbp, {s});
        DDouble ref = (DDouble(1.0) - exp(-DDouble(s) * ddc::ln2())) * zeta(s + 1.0).value;
        CHECK(dd_abs(v.value - ref) < 1e-12);
    }
    for (auto [s, a] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {1.5, 2.0}, {3.0, 1.5}, {2.0, 3.0}}) {
        auto v = sbp_eval(SbpKind::HurwitzSbp, {s, a});
        CHECK(dd_abs(v.value - hurwitz_zeta(s + 1.0, a).value) < 1e-12);
    }
    for (double x : {0.5, 1.0, 2.0, 3.7, 5.0}) {
        auto v = sbp_eval(SbpKind::DigammaSbp, {x});
        CHECK(dd_abs(v.value - polygamma(0, x).value) < 1e-12);
        auto w = sbp_eval(SbpKind::TrigammaSbp, {x});
        CHECK(dd_abs(w.value - polygamma(1, x).value) < 1e-12);
    }
    for (auto [j, x] : {std::pair{2.0, 1.0}, {2.0, 2.5}, {3.0, 1.5}, {4.0, 2.0}, {3.0, 3.0}}) {
        auto v = sbp_eval(SbpKind::PolygammaSbp, {j, x});
        CHECK(dd_abs(v.value - polygamma((int)j, x).value) < 1e-12);
    }
}

TEST_CASE("sbp digamma at 1 telescopes to -gamma") {
    auto v = sbp_eval(SbpKind::DigammaSbp, {1.0});
    CHECK(dd_abs(v.value + const_gamma()) < 1e-15);
}

TEST_CASE("sbp derivative representation hits zeta'(2)") {
    auto v = sbp_eval(SbpKind::HurwitzDerivSbp, {1.0, 1.0});
    CHECK(dd_abs(v.value - hurwitz_zeta_deriv(2.0, 1.0).value) < 1e-10);
    for (auto [s, a] : {std::pair{2.0, 1.0}, {1.5, 0.5}, {2.0, 2.0}}) {
        auto w = sbp_eval(SbpKind::HurwitzDerivSbp, {s, a});
        CHECK(dd_abs(w.value - hurwitz_zeta_deriv(s + 1.0, a).value) < 1e-12);
    }
}

TEST_CASE("sbp domain and arity errors") {
    CHECK_THROWS_AS(sbp_eval(SbpKind::ZetaSbp, {-1.0}), std::domain_error);
    CHECK_THROWS_AS(sbp_eval(SbpKind::HurwitzSbp, {2.0, -1.0}), std::domain_error);
    CHECK_THROWS_AS(sbp_eval(SbpKind::PolygammaSbp, {1.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(sbp_eval(SbpKind::DigammaSbp, {1.0, 2.0}), config_error);
}

TEST_CASE("xi series values") {
    CHECK(xi_series(1.0).value == DDouble(0.0));
    CHECK(dd_abs(xi_series(0.0).value - const_zeta2()) < 1e-13);
    CHECK_THROWS_AS(xi_series(-3.0), std::domain_error);
    CHECK_THROWS_AS(xi_integral(-0.5), std::domain_error);
    CHECK_THROWS_AS(xi_integral(0.0), std::domain_error);
}

TEST_CASE("xi route coherence") {
    for (double x : {0.5, 1.0, 1.5, 2.0, 5.0}) {
        auto s = xi_series(x);
        auto i = xi_integral(x);
        CHECK(dd_abs(s.value - i.value) < 1e-11);
    }
    // the x -> 0+ limit approaches zeta(2)
    CHECK(dd_abs(xi_integral(1e-4).value - const_zeta2()) < 3e-4);
}

TEST_CASE("harmonic-square relation across x samples") {
    for (double x : {0.25, 0.5, 1.0, 2.0, 5.0}) {
        DDouble lhs = polygamma(0, x).value + const_gamma();
        lhs = lhs * lhs;
        DDouble rhs = polygamma(1, x).value - const_zeta2() - ldexp(xi_series(x).value, 1);
        CHECK(dd_abs(lhs - rhs) < 1e-11);
    }
}

TEST_CASE("xi mean: three routes agree") {
    XiMean m = xi_mean();
    CHECK(m.max_pairwise_residual < 1e-9);
    CHECK(dd_abs(m.closed.value - m.series.value) < 1e-10);
    CHECK(dd_abs(m.closed.value - m.integral.value) < 1e-9);
    // and the exponential-variable form of the same mean
    CHECK(dd_abs(xi_mean_exp_integral().value - m.closed.value) < 1e-10);
}

TEST_CASE("stieltjes limit identities") {
    // gamma1(b) - gamma1(a) at (a,b) = (1/2, 1) equals ln^2 2 + 2 gamma ln 2
    DDouble lhs = stieltjes_gamma1(1.0).value - stieltjes_gamma1(0.5).value;
    DDouble rhs = ddc::ln2() * ddc::ln2() + 2.0 * const_gamma() * ddc::ln2();
    CHECK(dd_abs(lhs - rhs) < 1e-12);

    // zeta(2) - gamma1(a) against the cached Laurent data
    for (double a : {1.0, 0.5}) {
        DDouble engine = zeta(2.0).value - stieltjes_gamma1(a).value;
        DDouble cached = const_zeta2() - const_gamma1();
        if (a == 0.5) cached += ddc::ln2() * ddc::ln2() + 2.0 * const_gamma() * ddc::ln2();
        CHECK(dd_abs(engine - cached) < 1e-10);
    }
}
