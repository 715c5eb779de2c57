#include "doctest.h"

#include "zetaforge/quadrature.hpp"
#include "zetaforge/specfun.hpp"

#include <cmath>
#include <random>

using namespace zetaforge;
using namespace zetaforge::quad;
using zetaforge::numerics::ExtendedReal;

namespace {

double dd_abs(DDouble v) { return std::abs(v.hi()); }

IntegralSpec finite(Integrand f, double a, double b, SingularityFlags flags = {}) {
    IntegralSpec s;
    s.integrand = std::move(f);
    s.domain = IntegralSpec::Domain::Finite;
    s.lo = DDouble(a);
    s.hi = DDouble(b);
    s.flags = flags;
    return s;
}

IntegralSpec semi(Integrand f, double a, SingularityFlags flags = {}) {
    IntegralSpec s;
    s.integrand = std::move(f);
    s.domain = IntegralSpec::Domain::SemiInfinite;
    s.lo = DDouble(a);
    s.flags = flags;
    return s;
}

} // namespace

TEST_CASE("plain finite integrals") {
    auto one = finite(plain([](DDouble) { return DDouble(1.0); }), 0.0, 1.0);
    ExtendedReal r = integrate_finite(one);
    CHECK(dd_abs(r.value - DDouble(1.0)) < 1e-28);

    auto cubic = finite(plain([](DDouble t) { return t * t * t; }), 0.0, 2.0);
    CHECK(dd_abs(integrate_finite(cubic).value - DDouble(4.0)) < 1e-25);

    auto expo = finite(plain([](DDouble t) { return exp(t); }), 0.0, 1.0);
    CHECK(dd_abs(integrate_finite(expo).value - (exp(DDouble(1.0)) - 1.0)) < 1e-24);
}

TEST_CASE("dilogarithm endpoint integral") {
    // int_0^1 -ln(1-u)/u du = zeta(2)
    SingularityFlags flags;
    flags.log_at_1 = true;
    auto spec = finite([](DDouble t, DDouble, DDouble to_hi) { return -log(to_hi) / t; },
                       0.0, 1.0, flags);
    ExtendedReal r = integrate_finite(spec, 1e-13);
    CHECK(dd_abs(r.value - specfun::const_zeta2()) < 1e-13);
    CHECK(r.err <= 1e-12);
}

TEST_CASE("polylog kernel integral reduces to zeta(3) at k=2") {
    // 2 int_0^1 [Li_2(t) - t zeta(2)] / (t(t-1)) dt = 2 zeta(3)
    SingularityFlags flags;
    flags.log_at_1 = true;
    flags.removable_at_0 = true;
    auto spec = finite(
        [](DDouble t, DDouble, DDouble to_hi) {
            DDouble li = specfun::polylog(2, DDouble(1.0) - to_hi).value;
            return (li - t * specfun::const_zeta2()) / (t * (-to_hi));
        },
        0.0, 1.0, flags);
    ExtendedReal r = integrate_finite(spec, 1e-12);
    CHECK(dd_abs(2.0 * r.value - 2.0 * specfun::const_zeta3()) < 1e-11);
}

TEST_CASE("substitution consistency per index") {
    // int_0^1 t^{n-1}(t-1)/ln t dt = ln((n+1)/n)
    for (long n : {1L, 2L, 5L, 20L}) {
        SingularityFlags flags;
        flags.log_at_0 = true;
        auto spec = finite(
            [n](DDouble t, DDouble, DDouble to_hi) {
                return powi(t, n - 1) * (-to_hi) / log(t);
            },
            0.0, 1.0, flags);
        ExtendedReal r = integrate_finite(spec, 1e-13);
        DDouble ref = log(DDouble((double)(n + 1)) / (double)n);
        CHECK(dd_abs(r.value - ref) < 1e-12);
    }
}

TEST_CASE("linearity on random smooth integrands") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        double c1 = coef(rng), c2 = coef(rng), alpha = coef(rng), beta = coef(rng);
        auto f = [c1](DDouble t) { return sin(t * 2.0) + c1 * t * t; };
        auto g = [c2](DDouble t) { return exp(-t) + DDouble(c2) / (t + 2.0); };
        auto combo = finite(plain([=](DDouble t) { return alpha * f(t) + beta * g(t); }), 0.0, 3.0);
        ExtendedReal lhs = integrate_finite(combo);
        ExtendedReal rf = integrate_finite(finite(plain(f), 0.0, 3.0));
        ExtendedReal rg = integrate_finite(finite(plain(g), 0.0, 3.0));
        DDouble rhs = alpha * rf.value + beta * rg.value;
        double tol = lhs.err + std::abs(alpha) * rf.err + std::abs(beta) * rg.err + 1e-25;
        CHECK(dd_abs(lhs.value - rhs) <= tol);
    }
}

TEST_CASE("non-integrable singularities are reported") {
    auto inv = finite(plain([](DDouble t) { return DDouble(1.0) / t; }), 0.0, 1.0);
    CHECK_THROWS_AS(integrate_finite(inv), integrability_error);

    SingularityFlags flags;
    flags.log_at_0 = true;
    auto inv2 = finite([](DDouble t, DDouble, DDouble) { return DDouble(1.0) / t; }, 0.0, 1.0,
                       flags);
    CHECK_THROWS_AS(integrate_finite(inv2), integrability_error);
}

TEST_CASE("semi-infinite integrals") {
    auto decay = semi(plain([](DDouble t) { return exp(-t); }), 0.0);
    ExtendedReal r = integrate_semi_infinite(decay);
    CHECK(dd_abs(r.value - DDouble(1.0)) < 1e-13);

    // sin(u)/u e^{-ku} = arccot(k)
    for (double k : {1.0, 2.0}) {
        auto spec = semi(plain([k](DDouble u) {
                             DDouble kernel = u.hi() < 1e-30 ? DDouble(1.0) : sin(u) / u;
                             return kernel * exp(-u * k);
                         }),
                         0.0);
        ExtendedReal v = integrate_semi_infinite(spec, 1e-13);
        CHECK(dd_abs(v.value - atan(DDouble(1.0) / k)) < 1e-12);
    }

    // k = 0 has no exponential decay: the oscillatory split still sums it
    SingularityFlags osc;
    osc.oscillatory_log = true;
    auto dirichlet = semi(plain([](DDouble u) {
                              return u.hi() < 1e-30 ? DDouble(1.0) : sin(u) / u;
                          }),
                          0.0, osc);
    ExtendedReal v0 = integrate_semi_infinite(dirichlet, 1e-12);
    CHECK(dd_abs(v0.value - ddc::half_pi()) < 1e-12);

    // and without the flag the non-decay is detected
    auto lorentz = semi(plain([](DDouble t) { return DDouble(1.0) / (t * t + 1.0); }), 0.0);
    CHECK_THROWS_AS(integrate_semi_infinite(lorentz), integrability_error);
}

TEST_CASE("oscillatory log kernel") {
    // int_0^1 sin(ln t)/(t ln t) g(t) dt with g(t) = -ln(1-zt):
    // equals sum_{l>=2} z^l arccot(l)/l + (pi/4) z
    auto run = [](double z, bool log_flag) {
        SingularityFlags flags;
        flags.oscillatory_log = true;
        flags.log_at_0 = log_flag;
        IntegralSpec spec;
        spec.integrand = [z](DDouble, DDouble t, DDouble one_minus_t) {
            if (z == 1.0) return -log(one_minus_t);
            return -log1p(-z * t);
        };
        spec.flags = flags;
        return integrate_log_oscillatory(spec, 1e-11);
    };

    // z = 0: integrand vanishes identically
    CHECK(dd_abs(run(0.0, false).value) < 1e-20);

    // z = 1/2 against the direct series
    {
        DDouble series(0.0);
        DDouble zp(0.5);
        for (long l = 2; l <= 120; ++l) {
            zp *= 0.5;
            series += zp * atan(DDouble(1.0) / (double)l) / (double)l;
        }
        DDouble ref = series + ddc::quarter_pi() * 0.5;
        ExtendedReal v = run(0.5, false);
        CHECK(dd_abs(v.value - ref) < 1e-10);
    }

    // unbounded factor near t = 0 is rejected
    {
        IntegralSpec bad;
        bad.flags.oscillatory_log = true;
        bad.integrand = [](DDouble, DDouble t, DDouble) { return DDouble(1.0) / t; };
        CHECK_THROWS_AS(integrate_log_oscillatory(bad), integrability_error);
    }
}

TEST_CASE("oscillatory segments eventually alternate") {
    // direct check on sin(u)/u over [m pi, (m+1) pi]
    double prev = 0.0;
    for (int m = 1; m <= 8; ++m) {
        auto seg = finite(plain([](DDouble u) { return sin(u) / u; }), m * M_PI, (m + 1) * M_PI);
        double v = integrate_finite(seg).value.hi();
        if (m > 1) CHECK(v * prev < 0.0);
        prev = v;
    }
}
