#include "zetaforge/corpus.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/nielsen.hpp"
#include "zetaforge/quadrature.hpp"
#include "zetaforge/series_catalog.hpp"
#include "zetaforge/specfun.hpp"
#include "zetaforge/summation.hpp"

#include <algorithm>
#include <set>

namespace zetaforge::corpus {

using numerics::CompensatedAccumulator;
using numerics::ExtendedReal;
using numerics::SeriesSpec;
using specfun::const_gamma;
using specfun::const_gamma1;
using specfun::const_ln2;
using specfun::const_pi;
using specfun::const_zeta2;
using specfun::const_zeta3;
using specfun::zeta_int;

namespace {

using Fn = std::function<ExtendedReal(const ParamSample&, const EvalContext&)>;

ExtendedReal cache_value(DDouble v) { return ExtendedReal(v, 1e-29); }

ExtendedReal run_series(const SeriesSpec& spec, double eps, const EvalContext& ctx) {
    return numerics::sum_series(spec, eps, ctx.max_terms);
}

// sum_{k>=k0} term(k) where |term| decays at least geometrically with ratio
// <= 0.6; stops once |term| < eps and bounds the rest by 2 |last term|
ExtendedReal geometric_zeta_sum(const std::function<ExtendedReal(int)>& term, int k0, double eps,
                                int k_max = 400) {
    CompensatedAccumulator acc;
    double last = 0.0;
    for (int k = k0; k <= k_max; ++k) {
        ExtendedReal t = term(k);
        acc.add(t);
        last = std::abs(t.value.hi());
        if (last < eps && k > k0 + 4) break;
    }
    ExtendedReal out = acc.result();
    out.err += 2.0 * last;
    return out;
}

// sum_{m=1}^{k-2} zeta(k-m) zeta(m+1)
ExtendedReal zeta_product_bracket(int k) {
    CompensatedAccumulator acc;
    for (int m = 1; m <= k - 2; ++m) acc.add(zeta_int(k - m) * zeta_int(m + 1));
    return acc.result();
}

// sum_{l=1}^{2r-1} (-1)^{l+1} zeta(l+1) zeta(2r-l+1)
ExtendedReal alt_zeta_product_bracket(int r) {
    CompensatedAccumulator acc;
    for (int l = 1; l <= 2 * r - 1; ++l) {
        ExtendedReal t = zeta_int(l + 1) * zeta_int(2 * r - l + 1);
        acc.add((l % 2) ? t : -t);
    }
    return acc.result();
}

quad::IntegralSpec finite_spec(quad::Integrand f, double a, double b,
                               quad::SingularityFlags flags = {}) {
    quad::IntegralSpec s;
    s.integrand = std::move(f);
    s.domain = quad::IntegralSpec::Domain::Finite;
    s.lo = DDouble(a);
    s.hi = DDouble(b);
    s.flags = flags;
    return s;
}

quad::IntegralSpec semi_spec(quad::Integrand f, double a, quad::SingularityFlags flags = {}) {
    quad::IntegralSpec s;
    s.integrand = std::move(f);
    s.domain = quad::IntegralSpec::Domain::SemiInfinite;
    s.lo = DDouble(a);
    s.flags = flags;
    return s;
}

// sum over l >= 2 of z^l arccot(l)/l for |z| < 1 (geometric decay)
ExtendedReal arccot_power_series(double z) {
    CompensatedAccumulator acc;
    DDouble zp(z);
    double az = std::abs(z);
    double bound = 1.0;
    for (long l = 2; l <= 400; ++l) {
        zp *= z;
        DDouble t = zp * atan(DDouble(1.0) / (double)l) / (double)l;
        acc.add(ExtendedReal(t, 4.0 * ddc::eps * std::abs(t.hi())));
        bound = std::abs(t.hi()) * az / (1.0 - az);
        if (std::abs(t.hi()) < 1e-26) break;
    }
    ExtendedReal out = acc.result();
    out.err += bound;
    return out;
}

std::vector<ParamSample> k_samples(std::initializer_list<double> ks) {
    std::vector<ParamSample> out;
    for (double k : ks) out.push_back({{{"k", k}}});
    return out;
}

} // namespace

Registry::Registry() {
    auto add = [this](IdentityRecord r) { records_.push_back(std::move(r)); };

    const double slow_tol = 1e-8;

    // ---------------------------------------------------------------- E1.1
    add({
        "E1.1",
        {},
        "sum_{k>=3} (1/k)[sum_{m=1}^{k-2} zeta(k-m) zeta(m+1) - k] = 3 + gamma^2 + 2 gamma_1 - pi^2/3",
        {},
        {
            {"outer zeta-product sum, geometric tail bound",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int k) {
                         ExtendedReal br = zeta_product_bracket(k) - ExtendedReal::exact(DDouble((double)k));
                         return (1.0 / (double)k) * br;
                     },
                     3, 1e-13);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 DDouble g = const_gamma(), g1 = const_gamma1(), pi = const_pi();
                 return cache_value(DDouble(3.0) + g * g + ldexp(g1, 1) - pi * pi / 3.0);
             }},
        },
        slow_tol,
        IdentityRecord::Cost::Slow,
        "",
    });

    // ---------------------------------------------------------------- E1.2
    add({
        "E1.2",
        {},
        "2 sum_{n>=1} psi(n)/n^k = k zeta(k+1) - 2 gamma zeta(k) - sum_{l=1}^{k-2} zeta(l+1) zeta(k-l)",
        k_samples({2, 3, 4, 5, 6, 7, 8, 9, 10}),
        {
            {"psi series with harmonic tail closure",
             {"numerics.sum_series"},
             [](const ParamSample& p, const EvalContext& ctx) {
                 int k = (int)p.get("k");
                 ExtendedReal s = run_series(series_psi_over_pow(k), 1e-13, ctx);
                 return 2.0 * s;
             }},
            {"zeta products and cached gamma",
             {"specfun.zeta", "constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 int k = (int)p.get("k");
                 ExtendedReal rhs = (double)k * zeta_int(k + 1) -
                                    2.0 * (ExtendedReal(const_gamma(), 1e-30) * zeta_int(k));
                 return rhs - zeta_product_bracket(k);
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "inner product sum is empty at k=2",
    });

    // ---------------------------------------------------------------- E1.4
    add({
        "E1.4",
        {},
        "sum_{r>=2} [ln(r/(r-1)) - 1/(2r^2) - 1/r] = 3/2 - gamma - zeta(2)/2",
        {},
        {
            {"tail-closed series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_log_ratio_corr(), 1e-12, ctx);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 return cache_value(DDouble(1.5) - const_gamma() - ldexp(const_zeta2(), -1));
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.5
    add({
        "E1.5",
        {},
        "sum_{r>=2} 1/((r-1) r^3) = 3 - zeta(2) - zeta(3)",
        {},
        {
            {"tail-closed series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_inv_rm1_r3(), 1e-12, ctx);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 return cache_value(DDouble(3.0) - const_zeta2() - const_zeta3());
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.8
    add({
        "E1.8",
        {},
        "sum_{n>=2} [ln(n/(n-1)) - 1/n] = 1 - gamma",
        {},
        {
            {"tail-closed series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_log_ratio_minus_inv(), 1e-12, ctx);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 return cache_value(DDouble(1.0) - const_gamma());
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.10
    add({
        "E1.10",
        {},
        "sum_{n>=1} H_n [ln((n+1)/n) - 1/(n+1)] = zeta(2)/2 - gamma^2/2 - gamma_1",
        {},
        {
            {"harmonic series with harmonic tails",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_harmonic_log_kernel(), 1e-12, ctx);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 DDouble g = const_gamma();
                 return cache_value(ldexp(const_zeta2() - g * g, -1) - const_gamma1());
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.11
    add({
        "E1.11",
        {},
        "assembly of the three partial sums reproduces 3 - 2 zeta(2) + gamma^2 + 2 gamma_1",
        {},
        {
            {"computed component series assembled per the derivation",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 DDouble g = const_gamma();
                 ExtendedReal A = run_series(series_inv_rm1_r3(), 2e-13, ctx);
                 ExtendedReal B = run_series(series_log_ratio_corr(), 2e-13, ctx);
                 ExtendedReal s10 = run_series(series_harmonic_log_kernel(), 2e-13, ctx);
                 ExtendedReal s8 = run_series(series_log_ratio_minus_inv(), 2e-13, ctx);
                 // the 1/(2n^2) part contributes gamma zeta(2)/2 - zeta(3)/2 - gamma/2
                 ExtendedReal C =
                     cache_value(ldexp(g * const_zeta2() - const_zeta3() - g, -1)) + s10 -
                     ExtendedReal(g, 1e-30) * s8;
                 return A - 2.0 * (ExtendedReal(g, 1e-30) * B) - 2.0 * C;
             }},
            {"closed form from cached constants",
             {"constants.cache", "specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 DDouble g = const_gamma();
                 return cache_value(DDouble(3.0) - ldexp(const_zeta2(), 1) + g * g +
                                    ldexp(const_gamma1(), 1));
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "derivation-chain coherence over computed component sums",
    });

    // ---------------------------------------------------------------- E1.12
    add({
        "E1.12",
        {},
        "2 int_0^1 [Li_k(t) - t zeta(k)]/(t(t-1)) dt = k zeta(k+1) - sum_{l=1}^{k-2} zeta(l+1) zeta(k-l)",
        k_samples({2, 3, 4}),
        {
            {"polylog kernel integral",
             {"quad.finite", "specfun.polylog"},
             [](const ParamSample& p, const EvalContext&) {
                 int k = (int)p.get("k");
                 DDouble zk = zeta_int(k).value;
                 quad::SingularityFlags flags;
                 flags.log_at_1 = true;
                 flags.removable_at_0 = true;
                 auto spec = finite_spec(
                     [k, zk](DDouble t, DDouble, DDouble to_hi) {
                         DDouble li = specfun::polylog(k, DDouble(1.0) - to_hi).value;
                         return (li - t * zk) / (t * (-to_hi));
                     },
                     0.0, 1.0, flags);
                 return 2.0 * quad::integrate_finite(spec, 1e-12);
             }},
            {"zeta products",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 int k = (int)p.get("k");
                 return (double)k * zeta_int(k + 1) - zeta_product_bracket(k);
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- P1
    add({
        "P1",
        {"E1.13"},
        "sum_{r>=1} 1/(2r+1) [sum_{l=1}^{2r-1} (-1)^{l+1} zeta(l+1) zeta(2r-l+1) - 2] = "
        "sum_{n>=2} (1/n) ln(n/(n-1)) + 2 - zeta(2) - 2 gamma_1 - gamma^2 - ln 2",
        {},
        {
            {"outer alternating-product sum",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int r) {
                         ExtendedReal br = alt_zeta_product_bracket(r) - ExtendedReal::exact(DDouble(2.0));
                         return (1.0 / (double)(2 * r + 1)) * br;
                     },
                     1, 1e-13);
             }},
            {"logarithmic series plus cached constants",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 DDouble g = const_gamma();
                 ExtendedReal s = run_series(series_inv_log_down(), 1e-12, ctx);
                 return s + cache_value(DDouble(2.0) - const_zeta2() - ldexp(const_gamma1(), 1) -
                                        g * g - const_ln2());
             }},
        },
        slow_tol,
        IdentityRecord::Cost::Slow,
        "",
    });

    // ---------------------------------------------------------------- E1.14
    add({
        "E1.14",
        {},
        "sum_{l=1}^{k-2} (-1)^{l+1} zeta(l+1) zeta(k-l) = 2 sum psi(n)/n^k + 2 zeta(k+1) + 2 gamma zeta(k), odd k",
        k_samples({3, 5, 7}),
        {
            {"finite alternating zeta products",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 int k = (int)p.get("k");
                 return alt_zeta_product_bracket((k - 1) / 2);
             }},
            {"psi series and cached gamma",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample& p, const EvalContext& ctx) {
                 int k = (int)p.get("k");
                 ExtendedReal s = run_series(series_psi_over_pow(k), 1e-13, ctx);
                 return 2.0 * s + 2.0 * zeta_int(k + 1) +
                        2.0 * (ExtendedReal(const_gamma(), 1e-30) * zeta_int(k));
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.17
    add({
        "E1.17",
        {},
        "sum_{l>=2} [atanh(1/l) - 1/l] = 1 - gamma - ln(2)/2",
        {},
        {
            {"tail-closed series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_atanh_corr(), 1e-12, ctx);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 return cache_value(DDouble(1.0) - const_gamma() - ldexp(const_ln2(), -1));
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.18
    add({
        "E1.18",
        {},
        "sum_{r>=1} [zeta(2r+2)-1]/(2r+1) = (1/2) sum_{l>=2} (1/l) ln((l+1)/(l-1)) - zeta(2) + 1",
        {},
        {
            {"even-zeta series",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int r) {
                         return (1.0 / (double)(2 * r + 1)) *
                                (zeta_int(2 * r + 2) - ExtendedReal::exact(DDouble(1.0)));
                     },
                     1, 1e-13);
             }},
            {"symmetric log series plus constants",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 ExtendedReal s = run_series(series_inv_log_sym(), 1e-12, ctx);
                 return 0.5 * s + cache_value(DDouble(1.0) - const_zeta2());
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.20
    add({
        "E1.20",
        {},
        "sum_{n>=2} H_{n-1}[atanh(1/n) - 1/n] = zeta(2)/2 - gamma_1 - gamma^2/2 - "
        "(1/2) sum_{n>=2} (1/n) ln((n+1)/n) - ln(2)/2",
        {},
        {
            {"harmonic atanh series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_harmonic_atanh_corr(), 1e-12, ctx);
             }},
            {"log series and cached constants",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 DDouble g = const_gamma();
                 ExtendedReal s = run_series(series_inv_log_up(), 1e-12, ctx);
                 return cache_value(ldexp(const_zeta2() - g * g - const_ln2(), -1) - const_gamma1()) -
                        0.5 * s;
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.24
    add({
        "E1.24",
        {},
        "sum_{r>=1} [zeta(2r+1)-1] t^{2r+1}/(2r+1) = (1/2)[lnG(2-t) - lnG(2+t)] + (1-gamma) t, |t|<2",
        {{{{"t", 0.5}}}, {{{"t", 1.0}}}, {{{"t", 1.5}}}},
        {
            {"odd-zeta power series",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 double t = p.get("t");
                 DDouble td(t);
                 return geometric_zeta_sum(
                     [td](int r) {
                         ExtendedReal z = zeta_int(2 * r + 1) - ExtendedReal::exact(DDouble(1.0));
                         DDouble pw = powi(td, 2 * r + 1);
                         return (1.0 / (double)(2 * r + 1)) * (ExtendedReal(pw, 0.0) * z);
                     },
                     1, 1e-14);
             }},
            {"log-gamma closed form",
             {"specfun.log_gamma", "constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 double t = p.get("t");
                 ExtendedReal lg = specfun::log_gamma(2.0 - t) - specfun::log_gamma(2.0 + t);
                 return 0.5 * lg + cache_value((DDouble(1.0) - const_gamma()) * t);
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "summand power read as t^(2r+1) to match the summation index",
    });

    // ---------------------------------------------------------------- E1.25
    add({
        "E1.25",
        {},
        "2 sum_{k>=0} [zeta(2k+2)-1]/(2k+1) = sum_{l>=2} (1/l) ln((l+1)/(l-1)) = "
        "int_0^1 [psi(2+t) - psi(2-t)]/t dt",
        {},
        {
            {"even-zeta series",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 ExtendedReal s = geometric_zeta_sum(
                     [](int k) {
                         return (1.0 / (double)(2 * k + 1)) *
                                (zeta_int(2 * k + 2) - ExtendedReal::exact(DDouble(1.0)));
                     },
                     0, 1e-13);
                 return 2.0 * s;
             }},
            {"symmetric log series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_inv_log_sym(), 1e-12, ctx);
             }},
            {"digamma difference integral",
             {"quad.finite", "specfun.polygamma"},
             [](const ParamSample&, const EvalContext&) {
                 quad::SingularityFlags flags;
                 flags.removable_at_0 = true;
                 auto spec = finite_spec(
                     [](DDouble t, DDouble, DDouble) {
                         DDouble up = specfun::polygamma(0, 2.0 + t.hi()).value;
                         DDouble dn = specfun::polygamma(0, 2.0 - t.hi()).value;
                         return (up - dn) / t;
                     },
                     0.0, 1.0, flags);
                 return quad::integrate_finite(spec, 1e-11);
             }},
        },
        1e-8,
        IdentityRecord::Cost::Fast,
        "three-route record",
    });

    // ---------------------------------------------------------------- E1.26
    add({
        "E1.26",
        {},
        "sum_{n>=2} (1/n) ln((n+1)/n) = sum_{k>=1} (-1)^{k+1} [zeta(k+1)-1]/k = "
        "int_0^inf [gamma + G(0,t) + ln t] dt/(e^t - 1) - ln 2 = "
        "int_0^1 (t-1)/ln t [-1 - ln(1-t)/t] dt",
        {},
        {
            {"tail-closed log series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_inv_log_up(), 1e-12, ctx);
             }},
            {"alternating zeta series",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int k) {
                         ExtendedReal z = zeta_int(k + 1) - ExtendedReal::exact(DDouble(1.0));
                         ExtendedReal t = (1.0 / (double)k) * z;
                         return (k % 2) ? t : -t;
                     },
                     1, 1e-13);
             }},
            {"entire-series integral over (0,inf)",
             {"quad.semi_infinite", "specfun.gamma0", "constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 quad::SingularityFlags flags;
                 flags.removable_at_0 = true;
                 auto spec = semi_spec(
                     [](DDouble t, DDouble, DDouble) {
                         return specfun::ein(t).value / expm1(t);
                     },
                     0.0, flags);
                 ExtendedReal v = quad::integrate_semi_infinite(spec, 1e-11);
                 return v - cache_value(const_ln2());
             }},
            {"finite logarithmic-ratio integral",
             {"quad.finite"},
             [](const ParamSample&, const EvalContext&) {
                 quad::SingularityFlags flags;
                 flags.log_at_0 = true;
                 flags.log_at_1 = true;
                 auto spec = finite_spec(
                     [](DDouble t, DDouble, DDouble to_hi) {
                         DDouble bracket = DDouble(-1.0) - log(to_hi) / t;
                         return (-to_hi) / log(t) * bracket;
                     },
                     0.0, 1.0, flags);
                 return quad::integrate_finite(spec, 1e-11);
             }},
        },
        1e-8,
        IdentityRecord::Cost::Fast,
        "multi-route record over all four representations",
    });

    // ---------------------------------------------------------------- E1.27
    add({
        "E1.27",
        {},
        "int_0^1 t^{n-1} (t-1)/ln t dt = ln((n+1)/n)",
        {{{{"n", 1}}}, {{{"n", 2}}}, {{{"n", 5}}}, {{{"n", 20}}}},
        {
            {"endpoint-transformed quadrature",
             {"quad.finite"},
             [](const ParamSample& p, const EvalContext&) {
                 long n = (long)p.get("n");
                 quad::SingularityFlags flags;
                 flags.log_at_0 = true;
                 auto spec = finite_spec(
                     [n](DDouble t, DDouble, DDouble to_hi) {
                         return powi(t, n - 1) * (-to_hi) / log(t);
                     },
                     0.0, 1.0, flags);
                 return quad::integrate_finite(spec, 1e-13);
             }},
            {"elementary logarithm",
             {"elementary.log"},
             [](const ParamSample& p, const EvalContext&) {
                 long n = (long)p.get("n");
                 DDouble v = log(DDouble((double)(n + 1)) / (double)n);
                 return ExtendedReal(v, 4.0 * ddc::eps * std::abs(v.hi()));
             }},
        },
        1e-12,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- P2
    add({
        "P2",
        {"E1.29"},
        "sum_{k>=3} ((-1)^k/k)[sum_{m=1}^{k-2} zeta(k-m) zeta(m+1) - k] = "
        "2 zeta(2) - 1/2 - 2 gamma_1 - gamma^2 - 2 sum_{n>=1} (1/n) ln((n+1)/n)",
        {},
        {
            {"alternating outer zeta-product sum",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int k) {
                         ExtendedReal br = zeta_product_bracket(k) - ExtendedReal::exact(DDouble((double)k));
                         ExtendedReal t = (1.0 / (double)k) * br;
                         return (k % 2) ? -t : t;
                     },
                     3, 1e-13);
             }},
            {"logarithmic series plus cached constants",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 DDouble g = const_gamma();
                 ExtendedReal s = run_series(series_inv_log_up(), 1e-12, ctx);
                 ExtendedReal full = s + cache_value(const_ln2());   // extend to n = 1
                 return cache_value(ldexp(const_zeta2(), 1) - DDouble(0.5) -
                                    ldexp(const_gamma1(), 1) - g * g) -
                        2.0 * full;
             }},
        },
        slow_tol,
        IdentityRecord::Cost::Slow,
        "",
    });

    // ---------------------------------------------------------------- E1.31
    add({
        "E1.31",
        {},
        "sum_{k>=3} (-1)^k [zeta(k+1)-1] = zeta(2) - 1/2 - zeta(3)",
        {},
        {
            {"alternating zeta series",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int k) {
                         ExtendedReal z = zeta_int(k + 1) - ExtendedReal::exact(DDouble(1.0));
                         return (k % 2) ? -z : z;
                     },
                     3, 1e-13);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 return cache_value(const_zeta2() - DDouble(0.5) - const_zeta3());
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.32
    add({
        "E1.32",
        {},
        "sum_{k>=1} t^k [zeta(k+1)-1] = t/(t-1) - gamma - psi(1-t)",
        {{{{"t", -1.0}}}, {{{"t", 0.5}}}, {{{"t", -0.5}}}},
        {
            {"zeta power series",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 double t = p.get("t");
                 DDouble td(t);
                 return geometric_zeta_sum(
                     [td](int k) {
                         ExtendedReal z = zeta_int(k + 1) - ExtendedReal::exact(DDouble(1.0));
                         return ExtendedReal(powi(td, k), 0.0) * z;
                     },
                     1, 1e-14);
             }},
            {"digamma closed form",
             {"specfun.polygamma", "constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 double t = p.get("t");
                 ExtendedReal psi = specfun::polygamma(0, 1.0 - t);
                 return cache_value(DDouble(t) / (t - 1.0) - const_gamma()) - psi;
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.33
    add({
        "E1.33",
        {},
        "sum_{k>=3} ((-1)^k/k)[zeta(k)-1] = ln 2 - 1/2 + gamma - zeta(2)/2",
        {},
        {
            {"alternating zeta series",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int k) {
                         ExtendedReal z = zeta_int(k) - ExtendedReal::exact(DDouble(1.0));
                         ExtendedReal t = (1.0 / (double)k) * z;
                         return (k % 2) ? -t : t;
                     },
                     3, 1e-13);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 return cache_value(const_ln2() - DDouble(0.5) + const_gamma() -
                                    ldexp(const_zeta2(), -1));
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.34
    add({
        "E1.34",
        {},
        "sum_{k>=2} (t^k/k)[zeta(k)-1] = t(1-gamma) + ln(1-t) + lnG(1-t)",
        {{{{"t", -1.0}}}},
        {
            {"zeta power series",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 double t = p.get("t");
                 DDouble td(t);
                 return geometric_zeta_sum(
                     [td](int k) {
                         ExtendedReal z = zeta_int(k) - ExtendedReal::exact(DDouble(1.0));
                         return (1.0 / (double)k) * (ExtendedReal(powi(td, k), 0.0) * z);
                     },
                     2, 1e-14);
             }},
            {"log-gamma closed form",
             {"specfun.log_gamma", "constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 double t = p.get("t");
                 ExtendedReal lg = specfun::log_gamma(1.0 - t);
                 DDouble head = DDouble(t) * (DDouble(1.0) - const_gamma()) + log1p(DDouble(-t));
                 return cache_value(head) + lg;
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "summand restored with the t^k factor; at t=-1 this reduces to the k>=3 alternating sum",
    });

    // ---------------------------------------------------------------- E1.36
    add({
        "E1.36",
        {},
        "sum_{n>=2} [ln(n/(n+1)) + 1/n - 1/(2n^2)] = -1/2 + gamma - zeta(2)/2 + ln 2",
        {},
        {
            {"tail-closed series",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_neg_log_corr(), 1e-12, ctx);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 return cache_value(DDouble(-0.5) + const_gamma() - ldexp(const_zeta2(), -1) +
                                    const_ln2());
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.37
    add({
        "E1.37",
        {},
        "sum_{n>=2} H_{n-1}[ln(n/(n+1)) + 1/n - 1/(2n^2)] = -zeta(2)/2 + gamma_1 + gamma^2/2 - "
        "zeta(3)/2 + sum_{n>=1} (1/n) ln((n+1)/n)",
        {},
        {
            {"harmonic series with harmonic tails",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_harmonic_neg_log_corr(), 1e-12, ctx);
             }},
            {"log series and cached constants",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 DDouble g = const_gamma();
                 ExtendedReal s = run_series(series_inv_log_up(), 1e-12, ctx);
                 ExtendedReal full = s + cache_value(const_ln2());
                 return cache_value(ldexp(g * g - const_zeta2() - const_zeta3(), -1) +
                                    const_gamma1()) +
                        full;
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- P3
    add({
        "P3",
        {"E1.38"},
        "sum_{r>=1} ((-1)^r/(2r+1))[sum_{l=1}^{2r-1} (-1)^{l+1} zeta(l+1) zeta(2r-l+1) - 2] = "
        "2 sum_{l>=2} arccot(l)/l - 2 zeta(2) + 2 + 2 sum_{n>=2} H_{n-1}(arccot(n) - 1/n)",
        {},
        {
            {"alternating outer zeta-product sum",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int r) {
                         ExtendedReal br = alt_zeta_product_bracket(r) - ExtendedReal::exact(DDouble(2.0));
                         ExtendedReal t = (1.0 / (double)(2 * r + 1)) * br;
                         return (r % 2) ? -t : t;
                     },
                     1, 1e-13);
             }},
            {"arc-cotangent series plus cached constants",
             {"numerics.sum_series", "elementary.atan", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 ExtendedReal a = run_series(series_arccot_over_l(), 1e-12, ctx);
                 ExtendedReal b = run_series(series_harmonic_arccot_corr(), 1e-12, ctx);
                 return 2.0 * a + 2.0 * b +
                        cache_value(DDouble(2.0) - ldexp(const_zeta2(), 1));
             }},
        },
        slow_tol,
        IdentityRecord::Cost::Slow,
        "",
    });

    // ---------------------------------------------------------------- E1.40
    add({
        "E1.40",
        {},
        "arccot(x) = sum_{k>=0} (-1)^k x^{-(2k+1)}/(2k+1), x >= 1",
        {{{{"x", 2.0}}}},
        {
            {"descending arccot series",
             {"specfun.arccot"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::arccot(p.get("x"));
             }},
            {"arctangent of the reciprocal",
             {"elementary.atan"},
             [](const ParamSample& p, const EvalContext&) {
                 DDouble v = atan(DDouble(1.0) / p.get("x"));
                 return ExtendedReal(v, 4.0 * ddc::eps * std::abs(v.hi()));
             }},
        },
        1e-12,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.41
    add({
        "E1.41",
        {},
        "sum_{r>=1} ((-1)^r/(2r+1))[zeta(2r+1)-1] = 1 - gamma - pi/4 - Im lnG(1+i)",
        {},
        {
            {"alternating odd-zeta series",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int r) {
                         ExtendedReal z = zeta_int(2 * r + 1) - ExtendedReal::exact(DDouble(1.0));
                         ExtendedReal t = (1.0 / (double)(2 * r + 1)) * z;
                         return (r % 2) ? -t : t;
                     },
                     1, 2e-14);
             }},
            {"complex recurrence for Im lnG(1+i)",
             {"specfun.im_log_gamma", "constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 ExtendedReal im = specfun::im_log_gamma_one_plus_i();
                 return cache_value(DDouble(1.0) - const_gamma() - const_pi() / 4.0) - im;
             }},
        },
        1e-12,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.42
    add({
        "E1.42",
        {},
        "sum_{r>=1} ((-1)^r/(2r+1))[zeta(2r+2)-1] = sum_{l>=2} arccot(l)/l - zeta(2) + 1",
        {},
        {
            {"alternating even-zeta series",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) {
                 return geometric_zeta_sum(
                     [](int r) {
                         ExtendedReal z = zeta_int(2 * r + 2) - ExtendedReal::exact(DDouble(1.0));
                         ExtendedReal t = (1.0 / (double)(2 * r + 1)) * z;
                         return (r % 2) ? -t : t;
                     },
                     1, 1e-13);
             }},
            {"arc-cotangent series plus constants",
             {"numerics.sum_series", "constants.cache"},
             [](const ParamSample&, const EvalContext& ctx) {
                 ExtendedReal a = run_series(series_arccot_over_l(), 1e-12, ctx);
                 return a + cache_value(DDouble(1.0) - const_zeta2());
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- L1
    add({
        "L1",
        {"E1.45"},
        "sum_{l>=2} z^l arccot(l)/l = -int_0^1 sin(ln t)/(t ln t) ln(1-zt) dt - (pi/4) z, |z|<=1",
        {{{{"z", 1.0}}}, {{{"z", 0.5}}}, {{{"z", -1.0}}}},
        {
            {"arc-cotangent power series",
             {"numerics.sum_series", "elementary.atan"},
             [](const ParamSample& p, const EvalContext& ctx) {
                 double z = p.get("z");
                 if (z == 1.0) return run_series(series_arccot_over_l(), 1e-12, ctx);
                 if (z == -1.0) {
                     auto term = [](long l) {
                         DDouble t = atan(DDouble(1.0) / (double)l) / (double)l;
                         return (l % 2) ? -t : t;
                     };
                     return numerics::alternating_sum(term, 2, 64, 28);
                 }
                 return arccot_power_series(z);
             }},
            {"oscillatory log-kernel integral",
             {"quad.oscillatory", "constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 double z = p.get("z");
                 quad::IntegralSpec spec;
                 spec.flags.oscillatory_log = true;
                 spec.flags.log_at_0 = (z == 1.0);
                 spec.integrand = [z](DDouble, DDouble t, DDouble one_minus_t) {
                     if (z == 1.0) return -log(one_minus_t);
                     return -log1p(-z * t);
                 };
                 ExtendedReal v = quad::integrate_log_oscillatory(spec, 1e-11);
                 return v - cache_value(const_pi() / 4.0 * z);
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- C1
    add({
        "C1",
        {"E1.46"},
        "-int_0^1 sin(ln t)/(t ln t) ln(1-t) dt = sum_{l>=1} H_l [arccot(l) - arccot(l+1)]",
        {},
        {
            {"oscillatory log-kernel integral",
             {"quad.oscillatory"},
             [](const ParamSample&, const EvalContext&) {
                 quad::IntegralSpec spec;
                 spec.flags.oscillatory_log = true;
                 spec.flags.log_at_0 = true;
                 spec.integrand = [](DDouble, DDouble, DDouble one_minus_t) {
                     return -log(one_minus_t);
                 };
                 return quad::integrate_log_oscillatory(spec, 1e-11);
             }},
            {"harmonic arccot-difference series",
             {"numerics.sum_series", "elementary.atan"},
             [](const ParamSample&, const EvalContext& ctx) {
                 return run_series(series_harmonic_arccot_diff(), 1e-11, ctx);
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.47
    add({
        "E1.47",
        {},
        "sum_{k>=1} (a^k/k) ln((x+k)/(y+k)) = -int_0^1 (t^x - t^y)/(t ln t) ln(1-at) dt, |a|<=1",
        {{{{"a", 1.0}, {"x", 1.0}, {"y", 2.0}}},
         {{{"a", 0.5}, {"x", 0.0}, {"y", 1.0}}},
         {{{"a", -1.0}, {"x", 1.0}, {"y", 3.0}}}},
        {
            {"logarithmic-ratio series",
             {"numerics.extrapolate", "elementary.log"},
             [](const ParamSample& p, const EvalContext&) {
                 double a = p.get("a"), x = p.get("x"), y = p.get("y");
                 auto term = [a, x, y](long k) {
                     DDouble lg = log((DDouble(x) + (double)k) / (DDouble(y) + (double)k));
                     return powi(DDouble(a), k) * lg / (double)k;
                 };
                 if (a == 1.0) {
                     std::vector<numerics::Partial> partials;
                     CompensatedAccumulator acc;
                     long k = 1;
                     for (long mark = 128; mark <= 32768; mark <<= 1) {
                         for (; k <= mark; ++k) acc.add(ExtendedReal::exact(term(k)));
                         partials.push_back({mark, acc.result().value});
                     }
                     return numerics::extrapolate(partials, numerics::ExtrapolationModel::LogOverN);
                 }
                 if (a == -1.0) return numerics::alternating_sum(term, 1, 64, 28);
                 CompensatedAccumulator acc;
                 double bound = 1.0;
                 for (long k = 1; k <= 600 && bound > 1e-26; ++k) {
                     DDouble t = term(k);
                     acc.add(ExtendedReal(t, 4.0 * ddc::eps * std::abs(t.hi())));
                     bound = std::abs(t.hi());
                 }
                 ExtendedReal out = acc.result();
                 out.err += 2.0 * bound;
                 return out;
             }},
            {"power-difference integral",
             {"quad.finite"},
             [](const ParamSample& p, const EvalContext&) {
                 double a = p.get("a"), x = p.get("x"), y = p.get("y");
                 quad::SingularityFlags flags;
                 flags.log_at_0 = true;
                 flags.log_at_1 = (a == 1.0);
                 auto spec = finite_spec(
                     [a, x, y](DDouble t, DDouble, DDouble to_hi) {
                         DDouble tx = x == 0.0 ? DDouble(1.0) : exp(DDouble(x) * log(t));
                         DDouble ty = y == 0.0 ? DDouble(1.0) : exp(DDouble(y) * log(t));
                         DDouble lg = (a == 1.0) ? log(to_hi) : log1p(-a * t);
                         return -(tx - ty) / (t * log(t)) * lg;
                     },
                     0.0, 1.0, flags);
                 return quad::integrate_finite(spec, 1e-11);
             }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E1.49
    add({
        "E1.49",
        {},
        "int_0^inf (sin u)/u e^{-ku} du = arccot(k); equals pi/2 at k = 0",
        {{{{"k", 0}}}, {{{"k", 1}}}, {{{"k", 2}}}},
        {
            {"semi-infinite quadrature",
             {"quad.semi_infinite"},
             [](const ParamSample& p, const EvalContext&) {
                 double k = p.get("k");
                 quad::SingularityFlags flags;
                 flags.removable_at_0 = true;
                 flags.oscillatory_log = (k == 0.0);
                 auto spec = semi_spec(
                     [k](DDouble u, DDouble, DDouble) {
                         DDouble kernel = u.hi() < 1e-30 ? DDouble(1.0) : sin(u) / u;
                         return k == 0.0 ? kernel : kernel * exp(-u * k);
                     },
                     0.0, flags);
                 return quad::integrate_semi_infinite(spec, 1e-13);
             }},
            {"arccot closed form",
             {"specfun.arccot", "constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 double k = p.get("k");
                 if (k == 0.0) return cache_value(ldexp(const_pi(), -1));
                 return specfun::arccot(k);
             }},
        },
        1e-12,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- L2a-L2f
    auto s_samples = [](std::initializer_list<double> ss) {
        std::vector<ParamSample> out;
        for (double s : ss) out.push_back({{{"s", s}}});
        return out;
    };
    auto x_samples = [](std::initializer_list<double> xs) {
        std::vector<ParamSample> out;
        for (double x : xs) out.push_back({{{"x", x}}});
        return out;
    };

    add({
        "L2a",
        {"E2.1"},
        "zeta(s+1) = sum_{r>=1} H_r (1/r^s - 1/(r+1)^s)",
        s_samples({1.0, 1.5, 2.0, 3.0, 4.0}),
        {
            {"partial-summation series",
             {"nielsen.sbp"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::sbp_eval(nielsen::SbpKind::ZetaSbp, {p.get("s")});
             }},
            {"direct zeta",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) { return specfun::zeta(p.get("s") + 1.0); }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    add({
        "L2b",
        {"E2.2"},
        "(1-2^-s) zeta(s+1) = sum_{r>=1} H_r [(-1)^{r+1}/r^s - (-1)^r/(r+1)^s]",
        s_samples({1.0, 2.0, 2.5, 3.0, 4.0}),
        {
            {"alternating partial-summation series",
             {"nielsen.sbp"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::sbp_eval(nielsen::SbpKind::EtaSbp, {p.get("s")});
             }},
            {"direct zeta with the 2^-s factor",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 double s = p.get("s");
                 DDouble factor = DDouble(1.0) - exp(-DDouble(s) * ddc::ln2());
                 return ExtendedReal(factor, 2.0 * ddc::eps) * specfun::zeta(s + 1.0);
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "summand index read as r throughout",
    });

    add({
        "L2c",
        {"E2.3"},
        "zeta(s+1,a) = sum_{r>=0} [psi(a+r+1) - psi(a)] (1/(r+a)^s - 1/(r+a+1)^s)",
        {{{{"s", 1.0}, {"a", 1.0}}},
         {{{"s", 2.0}, {"a", 0.5}}},
         {{{"s", 1.5}, {"a", 2.0}}},
         {{{"s", 3.0}, {"a", 1.5}}},
         {{{"s", 2.0}, {"a", 3.0}}}},
        {
            {"partial-summation series",
             {"nielsen.sbp"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::sbp_eval(nielsen::SbpKind::HurwitzSbp, {p.get("s"), p.get("a")});
             }},
            {"direct Hurwitz zeta",
             {"specfun.hurwitz_zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::hurwitz_zeta(p.get("s") + 1.0, p.get("a"));
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    add({
        "L2d",
        {"E2.4"},
        "psi(x) = -gamma - 1/x + x sum_{k>=1} H_k (1/(x+k) - 1/(x+k+1))",
        x_samples({0.5, 1.0, 2.0, 3.7, 5.0}),
        {
            {"partial-summation series",
             {"nielsen.sbp"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::sbp_eval(nielsen::SbpKind::DigammaSbp, {p.get("x")});
             }},
            {"direct digamma",
             {"specfun.polygamma"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::polygamma(0, p.get("x"));
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    add({
        "L2e",
        {"E2.5"},
        "psi'(x) = 1/x^2 + sum H_k (1/(x+k) - 1/(x+k+1)) + x sum H_k (1/(x+k+1)^2 - 1/(x+k)^2)",
        x_samples({0.5, 1.0, 2.0, 3.7, 5.0}),
        {
            {"partial-summation series",
             {"nielsen.sbp"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::sbp_eval(nielsen::SbpKind::TrigammaSbp, {p.get("x")});
             }},
            {"direct trigamma",
             {"specfun.polygamma"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::polygamma(1, p.get("x"));
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    add({
        "L2f",
        {"E2.6"},
        "psi^(j)(x) = (-1)^{j+1} j! [x^{-j-1} + sum H_k ((x+k)^{-j} - (x+k+1)^{-j}) + "
        "x sum H_k ((x+k+1)^{-j-1} - (x+k)^{-j-1})]",
        {{{{"j", 2}, {"x", 1.0}}},
         {{{"j", 2}, {"x", 2.5}}},
         {{{"j", 3}, {"x", 1.5}}},
         {{{"j", 4}, {"x", 2.0}}},
         {{{"j", 3}, {"x", 3.0}}}},
        {
            {"partial-summation series",
             {"nielsen.sbp"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::sbp_eval(nielsen::SbpKind::PolygammaSbp,
                                          {p.get("j"), p.get("x")});
             }},
            {"direct polygamma",
             {"specfun.polygamma"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::polygamma((int)p.get("j"), p.get("x"));
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E2.8
    add({
        "E2.8",
        {},
        "sum_{n>=1} (-1)^{n+1}/n^s = (1-2^{1-s}) zeta(s), s > 1",
        s_samples({1.5, 2.0, 3.0}),
        {
            {"alternating sum with condensation",
             {"numerics.alternating"},
             [](const ParamSample& p, const EvalContext&) {
                 DDouble s(p.get("s"));
                 auto term = [s](long n) {
                     DDouble t = exp(-s * log(DDouble((double)n)));
                     return (n % 2) ? t : -t;
                 };
                 return numerics::alternating_sum(term, 1, 64, 28);
             }},
            {"zeta closed form",
             {"specfun.zeta"},
             [](const ParamSample& p, const EvalContext&) {
                 double s = p.get("s");
                 DDouble factor = DDouble(1.0) - exp((DDouble(1.0) - s) * ddc::ln2());
                 return ExtendedReal(factor, 2.0 * ddc::eps) * specfun::zeta(s);
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E2.10
    add({
        "E2.10",
        {},
        "gamma_1(1) - gamma_1(1/2) = ln^2 2 + 2 gamma ln 2 (the s->0 Laurent data of zeta'(s+1,a))",
        {},
        {
            {"limit-definition stieltjes route",
             {"specfun.stieltjes_gamma1"},
             [](const ParamSample&, const EvalContext&) {
                 return specfun::stieltjes_gamma1(1.0) - specfun::stieltjes_gamma1(0.5);
             }},
            {"closed form from cached constants",
             {"constants.cache"},
             [](const ParamSample&, const EvalContext&) {
                 DDouble l2 = const_ln2();
                 return cache_value(l2 * l2 + 2.0 * const_gamma() * l2);
             }},
        },
        1e-12,
        IdentityRecord::Cost::Fast,
        "verified through the Laurent coefficients, not small-s numerics",
    });

    // ---------------------------------------------------------------- E2.11
    add({
        "E2.11",
        {},
        "lim_{s->0} [zeta'(s+1,a) + psi'(s)] = zeta(2) - gamma_1(a), via the Laurent data",
        {{{{"a", 1.0}}}, {{{"a", 0.5}}}},
        {
            {"zeta(2) minus the limit-route gamma_1(a)",
             {"specfun.zeta", "specfun.stieltjes_gamma1"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::zeta(2.0) - specfun::stieltjes_gamma1(p.get("a"));
             }},
            {"cached Laurent data",
             {"constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 DDouble v = const_zeta2() - const_gamma1();
                 if (p.get("a") == 0.5) {
                     DDouble l2 = const_ln2();
                     v += l2 * l2 + 2.0 * const_gamma() * l2;
                 }
                 return cache_value(v);
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E2.12
    add({
        "E2.12",
        {"L2"},
        "zeta'(s+1,a) = sum_{r>=0} [psi(a+r+1)-psi(a)] [ln(r+a+1)/(r+a+1)^s - ln(r+a)/(r+a)^s]",
        {{{{"s", 1.0}, {"a", 1.0}}},
         {{{"s", 2.0}, {"a", 1.0}}},
         {{{"s", 1.5}, {"a", 0.5}}},
         {{{"s", 2.0}, {"a", 2.0}}}},
        {
            {"partial-summation series",
             {"nielsen.sbp"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::sbp_eval(nielsen::SbpKind::HurwitzDerivSbp,
                                          {p.get("s"), p.get("a")});
             }},
            {"differentiated direct series",
             {"specfun.hurwitz_zeta_deriv"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::hurwitz_zeta_deriv(p.get("s") + 1.0, p.get("a"));
             }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "grouped with the partial-summation family",
    });

    // ---------------------------------------------------------------- E3.1
    add({
        "E3.1",
        {},
        "(psi(x) + gamma)^2 = psi'(x) - zeta(2) - 2 xi(x)",
        x_samples({0.25, 0.5, 1.0, 2.0, 5.0}),
        {
            {"squared digamma",
             {"specfun.polygamma", "constants.cache"},
             [](const ParamSample& p, const EvalContext&) {
                 ExtendedReal psi = specfun::polygamma(0, p.get("x"));
                 ExtendedReal shifted = psi + cache_value(const_gamma());
                 return shifted * shifted;
             }},
            {"trigamma minus xi route",
             {"specfun.polygamma", "specfun.zeta", "nielsen.xi_series"},
             [](const ParamSample& p, const EvalContext&) {
                 return specfun::polygamma(1, p.get("x")) - specfun::zeta(2.0) -
                        2.0 * nielsen::xi_series(p.get("x"));
             }},
        },
        1e-11,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E3.3
    add({
        "E3.3",
        {},
        "int_0^1 xi(x) dx = sum_{n>=1} H_n [ln((n+1)/n) - 1/(n+1)] = (1/2)[zeta(2) - gamma^2 - 2 gamma_1]",
        {},
        {
            {"closed form",
             {"specfun.zeta", "constants.cache"},
             [](const ParamSample&, const EvalContext&) { return nielsen::xi_mean().closed; }},
            {"harmonic series route",
             {"numerics.sum_series"},
             [](const ParamSample&, const EvalContext&) { return nielsen::xi_mean().series; }},
            {"u-integral route",
             {"quad.finite"},
             [](const ParamSample&, const EvalContext&) { return nielsen::xi_mean().integral; }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "three-route record",
    });

    // ---------------------------------------------------------------- E3.4
    add({
        "E3.4",
        {},
        "xi(x) = int_0^1 (u^{x-1} - 1) ln(1-u)/(u-1) du",
        x_samples({0.5, 1.0, 1.5, 2.0, 5.0}),
        {
            {"harmonic series route",
             {"nielsen.xi_series"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::xi_series(p.get("x"));
             }},
            {"integral route",
             {"quad.finite"},
             [](const ParamSample& p, const EvalContext&) {
                 return nielsen::xi_integral(p.get("x"));
             }},
        },
        1e-11,
        IdentityRecord::Cost::Fast,
        "",
    });

    // ---------------------------------------------------------------- E3.5
    add({
        "E3.5",
        {},
        "int_0^1 xi(x) dx = -int_0^inf [1/t + 1/(1-e^t)] ln(1-e^-t) dt = "
        "int_0^1 [1/(u ln u) - 1/(u-1)] ln(1-u) du",
        {},
        {
            {"closed form",
             {"specfun.zeta", "constants.cache"},
             [](const ParamSample&, const EvalContext&) { return nielsen::xi_mean().closed; }},
            {"exponential-variable integral",
             {"quad.semi_infinite"},
             [](const ParamSample&, const EvalContext&) { return nielsen::xi_mean_exp_integral(); }},
            {"u-integral route",
             {"quad.finite"},
             [](const ParamSample&, const EvalContext&) { return nielsen::xi_mean().integral; }},
        },
        1e-9,
        IdentityRecord::Cost::Fast,
        "three-route record",
    });

    // ---------------------------------------------------------------- E3.7
    add({
        "E3.7",
        {},
        "xi(0) = -int_0^inf ln(1-e^-t) dt = -int_0^1 ln(1-u)/u du = zeta(2)",
        {},
        {
            {"harmonic series route",
             {"nielsen.xi_series"},
             [](const ParamSample&, const EvalContext&) { return nielsen::xi_series(0.0); }},
            {"exponential-variable integral",
             {"quad.semi_infinite"},
             [](const ParamSample&, const EvalContext&) {
                 quad::SingularityFlags flags;
                 flags.log_at_0 = true;
                 auto spec = semi_spec(
                     [](DDouble t, DDouble, DDouble) { return -log(-expm1(-t)); }, 0.0, flags);
                 return quad::integrate_semi_infinite(spec, 1e-12);
             }},
            {"direct zeta",
             {"specfun.zeta"},
             [](const ParamSample&, const EvalContext&) { return specfun::zeta(2.0); }},
        },
        1e-10,
        IdentityRecord::Cost::Fast,
        "",
    });

    // independence audit: every evaluator pair must differ in at least one
    // terminal route, and every record needs two or more evaluators
    for (const auto& r : records_) {
        if (r.evaluators.size() < 2)
            throw std::logic_error("registry: record " + r.id + " needs two evaluators");
        for (size_t i = 0; i < r.evaluators.size(); ++i) {
            std::set<std::string> a(r.evaluators[i].routes.begin(), r.evaluators[i].routes.end());
            for (size_t j = i + 1; j < r.evaluators.size(); ++j) {
                std::set<std::string> b(r.evaluators[j].routes.begin(),
                                        r.evaluators[j].routes.end());
                if (a == b)
                    throw std::logic_error("registry: evaluators of " + r.id +
                                           " share the same route set");
            }
        }
    }
}

const Registry& Registry::instance() {
    static const Registry reg;
    return reg;
}

} // namespace zetaforge::corpus
