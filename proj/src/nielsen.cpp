#include "zetaforge/nielsen.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/quadrature.hpp"
#include "zetaforge/series_catalog.hpp"
#include "zetaforge/specfun.hpp"
#include "zetaforge/summation.hpp"

#include <array>
#include <cmath>
#include <memory>

namespace zetaforge::nielsen {

using numerics::CompensatedAccumulator;
using numerics::em_tail;
using numerics::ExtendedReal;
using numerics::HarmonicSequence;

namespace {

// ---------------------------------------------------------------------------
// truncated asymptotic series in u = 1/w: sum c[i] u^i, |rest| <= rem * u^ORD.
// Valid products/bounds assume u <= 1/2 at the evaluation point.

constexpr int ORD = 10;

struct PowSeries {
    std::array<DDouble, ORD> c{};
    double rem = 0.0;

    double norm() const {
        double n = 0.0;
        for (const auto& x : c) n += std::abs(x.hi());
        return n;
    }
};

PowSeries ps_const(DDouble v) {
    PowSeries p;
    p.c[0] = v;
    return p;
}

PowSeries ps_add(const PowSeries& a, const PowSeries& b) {
    PowSeries out;
    for (int i = 0; i < ORD; ++i) out.c[i] = a.c[i] + b.c[i];
    out.rem = a.rem + b.rem;
    return out;
}

PowSeries ps_scale(const PowSeries& a, DDouble s) {
    PowSeries out;
    for (int i = 0; i < ORD; ++i) out.c[i] = a.c[i] * s;
    out.rem = a.rem * std::abs(s.hi());
    return out;
}

PowSeries ps_mul(const PowSeries& a, const PowSeries& b) {
    PowSeries out;
    double overflow = 0.0;
    for (int i = 0; i < ORD; ++i) {
        for (int j = 0; j < ORD; ++j) {
            if (i + j < ORD)
                out.c[i + j] += a.c[i] * b.c[j];
            else
                overflow += std::abs(a.c[i].hi()) * std::abs(b.c[j].hi());
        }
    }
    out.rem = a.rem * (b.norm() + b.rem) + b.rem * a.norm() + overflow;
    return out;
}

// 1 - (1+u)^-s = sum_{j>=1} (-1)^{j+1} (s)_j / j! u^j
PowSeries ps_one_minus_binom(DDouble s) {
    PowSeries p;
    DDouble coef(1.0);
    for (int j = 1; j < ORD; ++j) {
        coef *= (s + (double)(j - 1)) / (double)j;
        p.c[j] = (j % 2) ? coef : -coef;
    }
    DDouble next = coef * (s + (double)(ORD - 1)) / (double)ORD;
    p.rem = 2.0 * std::abs(next.hi());
    return p;
}

// (1+u)^-s
PowSeries ps_binom(DDouble s) {
    PowSeries p = ps_one_minus_binom(s);
    for (int i = 0; i < ORD; ++i) p.c[i] = -p.c[i];
    p.c[0] += 1.0;
    return p;
}

// ln(1+u)
PowSeries ps_log1p() {
    PowSeries p;
    for (int j = 1; j < ORD; ++j) {
        DDouble t = DDouble(1.0) / (double)j;
        p.c[j] = (j % 2) ? t : -t;
    }
    p.rem = 2.0 / (double)ORD;
    return p;
}

// 1/(1 - q u) = sum q^j u^j (needs |q u| <= 1/2)
PowSeries ps_geometric(DDouble q) {
    PowSeries p;
    DDouble pw(1.0);
    for (int j = 0; j < ORD; ++j) {
        p.c[j] = pw;
        pw *= q;
    }
    p.rem = 2.0 * std::abs(pw.hi());
    return p;
}

// psi(w+1) as ln w + P(u): P = 1/(2w) - B2/(2w^2) - B4/(4w^4) - ...
PowSeries ps_psi_shift_tail() {
    PowSeries p;
    p.c[1] = DDouble(0.5);
    p.c[2] = DDouble(-1.0) / 12.0;
    p.c[4] = DDouble(1.0) / 120.0;
    p.c[6] = DDouble(-1.0) / 252.0;
    p.c[8] = DDouble(1.0) / 240.0;
    p.rem = 1.0 / 132.0;
    return p;
}

// H_k as ln w + P(u) with w = k + x (so k = w(1 - x u)); requires |x u| <= 1/2
PowSeries ps_harmonic_shifted(double x) {
    PowSeries p;
    DDouble xd(x);
    // ln(1 - x u) = -sum (x^j / j) u^j
    DDouble xp(1.0);
    for (int j = 1; j < ORD; ++j) {
        xp *= xd;
        p.c[j] -= xp / (double)j;
    }
    p.c[0] += specfun::const_gamma();
    // 1/(2k) = (u/2) sum (x u)^j
    xp = DDouble(0.5);
    for (int j = 1; j < ORD; ++j) {
        p.c[j] += xp;
        xp *= xd;
    }
    // -(1/12) k^-2, +(1/120) k^-4, -(1/252) k^-6, +(1/240) k^-8:
    // k^-m = u^m sum C(j-1, m-1) x^{j-m} u^{j-m}
    const int ms[4] = {2, 4, 6, 8};
    const double nums[4] = {-1.0, 1.0, -1.0, 1.0};
    const double dens[4] = {12.0, 120.0, 252.0, 240.0};
    for (int t = 0; t < 4; ++t) {
        int m = ms[t];
        DDouble coef = DDouble(nums[t]) / dens[t];
        DDouble binom(1.0);   // C(j-1, m-1) at j = m
        DDouble xpow(1.0);
        for (int j = m; j < ORD; ++j) {
            p.c[j] += coef * binom * xpow;
            binom = binom * (double)j / (double)(j - m + 1);
            xpow *= xd;
        }
    }
    // truncation of the binomial resummations and the k^-10 term at |x u| <= 1/2
    double ax = std::max(1.0, std::abs(x));
    p.rem += std::pow(ax, ORD) * 4.0 + (1.0 / 132.0) * 1024.0;
    return p;
}

// tail sum_{r>N} w^{-s} [ln^2 w P2 + ln w P1 + P0](1/w), w = r + off
ExtendedReal assemble_tail(DDouble s, DDouble x0, const PowSeries& p2, const PowSeries& p1,
                           const PowSeries& p0) {
    ExtendedReal out(DDouble(0.0), 0.0);
    for (int i = 0; i < ORD; ++i) {
        if (p2.c[i].hi() == 0.0 && p1.c[i].hi() == 0.0 && p0.c[i].hi() == 0.0) continue;
        out += em_tail(s + (double)i, x0, p2.c[i], p1.c[i], p0.c[i]);
    }
    double rem_scale = p2.rem + p1.rem + p0.rem;
    if (rem_scale > 0.0) {
        ExtendedReal bound = em_tail(s + (double)ORD, x0, DDouble(rem_scale), DDouble(rem_scale),
                                     DDouble(rem_scale));
        out.err += std::abs(bound.value.hi()) + bound.err;
    }
    return out;
}

// ---------------------------------------------------------------------------
// generic H-weighted power-difference sums

// sum_{k>=1} H_k [ (x+k)^-s - (x+k+1)^-s ]           (sign = +1)
// sum_{k>=1} H_k [ (x+k+1)^-s - (x+k)^-s ]           (sign = -1)
ExtendedReal harmonic_power_diff_sum(double x, DDouble s, int sign, double eps) {
    const PowSeries hk = ps_harmonic_shifted(x);
    const PowSeries omb = ps_one_minus_binom(s);
    const PowSeries p1 = omb;                 // coefficient of ln w
    const PowSeries p0 = ps_mul(hk, omb);     // pure part (hk's ln is the ln w factor)

    long n = std::max<long>(256, (long)(4.0 * std::abs(x)) + 64);
    HarmonicSequence hs;
    CompensatedAccumulator acc;
    long k = 1;
    for (;; n <<= 1) {
        for (; k <= n; ++k) {
            DDouble w = DDouble(x) + (double)k;
            DDouble diff = exp(-s * log(w)) - exp(-s * log(w + 1.0));
            DDouble t = hs.at(k) * diff;
            acc.add(ExtendedReal(t, 8.0 * ddc::eps * std::abs(t.hi())));
        }
        ExtendedReal tail = assemble_tail(s, DDouble(x) + (double)(n + 1), PowSeries{}, p1, p0);
        if (tail.err <= eps * 0.5 || n >= (1L << 18)) {
            ExtendedReal total = acc.result() + tail;
            return sign > 0 ? total : -total;
        }
    }
}

DDouble psi_value(double a) { return specfun::polygamma(0, a).value; }

} // namespace

// ---------------------------------------------------------------------------
// sbp_eval

ExtendedReal sbp_eval(SbpKind kind, const std::vector<double>& params) {
    const double eps = 1e-16;
    auto need = [&](size_t n) {
        if (params.size() != n) throw config_error("sbp_eval: wrong parameter count for kind");
    };
    switch (kind) {
        case SbpKind::ZetaSbp: {
            need(1);
            double s = params[0];
            if (s <= 0.0) throw std::domain_error("zeta sbp requires s > 0");
            return harmonic_power_diff_sum(0.0, DDouble(s), +1, eps);
        }
        case SbpKind::EtaSbp: {
            need(1);
            double s = params[0];
            if (s <= 0.0) throw std::domain_error("eta sbp requires s > 0");
            DDouble sd(s);
            auto hs = std::make_shared<HarmonicSequence>();
            auto term = [sd, hs](long r) {
                DDouble t = hs->at(r) * (exp(-sd * log(DDouble((double)r))) +
                                         exp(-sd * log(DDouble((double)r + 1.0))));
                return (r % 2) ? t : -t;
            };
            return numerics::alternating_sum(term, 1, 1024, 32);
        }
        case SbpKind::HurwitzSbp: {
            need(2);
            double s = params[0], a = params[1];
            if (s <= 0.0 || a <= 0.0) throw std::domain_error("hurwitz sbp requires s > 0, a > 0");
            DDouble sd(s);
            const PowSeries psi_fac = ps_add(ps_psi_shift_tail(), ps_const(-psi_value(a)));
            const PowSeries omb = ps_one_minus_binom(sd);
            const PowSeries p0 = ps_mul(psi_fac, omb);
            long n = std::max<long>(256, (long)(4.0 * a) + 64);
            CompensatedAccumulator acc;
            DDouble psi_accum = DDouble(1.0) / a;   // psi(a+1) - psi(a)
            long r = 0;
            for (;; n <<= 1) {
                for (; r <= n; ++r) {
                    DDouble w = DDouble(a) + (double)r;
                    DDouble diff = exp(-sd * log(w)) - exp(-sd * log(w + 1.0));
                    DDouble t = psi_accum * diff;
                    acc.add(ExtendedReal(t, 8.0 * ddc::eps * std::abs(t.hi())));
                    psi_accum += DDouble(1.0) / (w + 1.0);
                }
                ExtendedReal tail =
                    assemble_tail(sd, DDouble(a) + (double)(n + 1), PowSeries{}, omb, p0);
                if (tail.err <= eps * 0.5 || n >= (1L << 18)) return acc.result() + tail;
            }
        }
        case SbpKind::DigammaSbp: {
            need(1);
            double x = params[0];
            if (x <= 0.0) throw std::domain_error("digamma sbp requires x > 0");
            ExtendedReal s = harmonic_power_diff_sum(x, DDouble(1.0), +1, eps);
            ExtendedReal out = ExtendedReal::exact(DDouble(x)) * s;
            DDouble head = -specfun::const_gamma() - DDouble(1.0) / x;
            return ExtendedReal(head, 1e-30) + out;
        }
        case SbpKind::TrigammaSbp: {
            need(1);
            double x = params[0];
            if (x <= 0.0) throw std::domain_error("trigamma sbp requires x > 0");
            ExtendedReal s1 = harmonic_power_diff_sum(x, DDouble(1.0), +1, eps);
            ExtendedReal s2 = harmonic_power_diff_sum(x, DDouble(2.0), -1, eps);
            DDouble head = DDouble(1.0) / (DDouble(x) * x);
            return ExtendedReal(head, 1e-30) + s1 + ExtendedReal::exact(DDouble(x)) * s2;
        }
        case SbpKind::PolygammaSbp: {
            need(2);
            int j = (int)params[0];
            double x = params[1];
            if (j < 2 || (double)j != params[0])
                throw std::domain_error("polygamma sbp requires integer j >= 2");
            if (x <= 0.0) throw std::domain_error("polygamma sbp requires x > 0");
            ExtendedReal s1 = harmonic_power_diff_sum(x, DDouble((double)j), +1, eps);
            ExtendedReal s2 = harmonic_power_diff_sum(x, DDouble((double)j + 1.0), -1, eps);
            DDouble head = exp(-DDouble((double)j + 1.0) * log(DDouble(x)));
            ExtendedReal inner =
                ExtendedReal(head, 4.0 * ddc::eps * std::abs(head.hi())) + s1 +
                ExtendedReal::exact(DDouble(x)) * s2;
            DDouble fact(1.0);
            for (int i = 2; i <= j; ++i) fact *= (double)i;
            ExtendedReal out = ExtendedReal::exact(fact) * inner;
            return (j % 2 == 1) ? out : -out;
        }
        case SbpKind::HurwitzDerivSbp: {
            need(2);
            double s = params[0], a = params[1];
            if (s <= 0.0 || a <= 0.0)
                throw std::domain_error("hurwitz-deriv sbp requires s > 0, a > 0");
            DDouble sd(s);
            const PowSeries psi_fac = ps_add(ps_psi_shift_tail(), ps_const(-psi_value(a)));
            // f-part: ln(w+1)(w+1)^-s - ln w w^-s = w^-s [ln w ((1+u)^-s - 1) + (1+u)^-s ln(1+u)]
            PowSeries A = ps_scale(ps_one_minus_binom(sd), DDouble(-1.0));
            PowSeries B = ps_mul(ps_binom(sd), ps_log1p());
            // [ln w + psi_fac] [ln w A + B]
            const PowSeries p2 = A;
            const PowSeries p1 = ps_add(B, ps_mul(psi_fac, A));
            const PowSeries p0 = ps_mul(psi_fac, B);
            long n = std::max<long>(256, (long)(4.0 * a) + 64);
            CompensatedAccumulator acc;
            DDouble psi_accum = DDouble(1.0) / a;
            long r = 0;
            for (;; n <<= 1) {
                for (; r <= n; ++r) {
                    DDouble w = DDouble(a) + (double)r;
                    DDouble f = log(w + 1.0) * exp(-sd * log(w + 1.0)) - log(w) * exp(-sd * log(w));
                    DDouble t = psi_accum * f;
                    acc.add(ExtendedReal(t, 8.0 * ddc::eps * (std::abs(t.hi()) + 1e-30)));
                    psi_accum += DDouble(1.0) / (w + 1.0);
                }
                ExtendedReal tail = assemble_tail(sd, DDouble(a) + (double)(n + 1), p2, p1, p0);
                if (tail.err <= eps * 0.5 || n >= (1L << 18)) return acc.result() + tail;
            }
        }
    }
    throw config_error("sbp_eval: unknown kind");
}

// ---------------------------------------------------------------------------
// xi

ExtendedReal xi_series(double x) {
    if (x < 0.0 && x == std::floor(x))
        throw std::domain_error("xi has poles at negative integers");
    const DDouble xd(x);
    // term: H_n (1-x) / ((x+n)(n+1)); tail factor in u = 1/n:
    // 1/((x+n)(n+1)) = u^2 / ((1+xu)(1+u))
    const PowSeries hk = ps_harmonic_shifted(0.0);
    const PowSeries geo = ps_mul(ps_geometric(-xd), ps_geometric(DDouble(-1.0)));
    const PowSeries p1 = geo;
    const PowSeries p0 = ps_mul(hk, geo);
    const DDouble one_minus_x = DDouble(1.0) - xd;

    long n_tail = std::max<long>(256, (long)(4.0 * std::abs(x)) + 64);
    HarmonicSequence hs;
    CompensatedAccumulator acc;
    long n = 1;
    const double eps = 1e-15;
    for (;; n_tail <<= 1) {
        for (; n <= n_tail; ++n) {
            DDouble t = hs.at(n) * one_minus_x / ((xd + (double)n) * (double)(n + 1));
            acc.add(ExtendedReal(t, 8.0 * ddc::eps * std::abs(t.hi())));
        }
        ExtendedReal tail =
            assemble_tail(DDouble(2.0), DDouble((double)(n_tail + 1)), PowSeries{}, p1, p0);
        tail = ExtendedReal(one_minus_x, 0.0) * tail;
        if (tail.err <= eps * 0.5 || n_tail >= (1L << 18)) return acc.result() + tail;
    }
}

ExtendedReal xi_integral(double x) {
    if (x <= 0.0) throw std::domain_error("xi integral route requires x > 0");
    quad::IntegralSpec spec;
    spec.domain = quad::IntegralSpec::Domain::Finite;
    spec.lo = DDouble(0.0);
    spec.hi = DDouble(1.0);
    spec.flags.log_at_0 = true;
    spec.flags.log_at_1 = true;
    DDouble xm1(x - 1.0);
    spec.integrand = [xm1](DDouble u, DDouble, DDouble to_hi) {
        DDouble upow = exp(xm1 * log(u));
        return (upow - 1.0) * log(to_hi) / (-to_hi);
    };
    ExtendedReal v = quad::integrate_finite(spec, 1e-13);
    // route coherence contract: xi_series agrees within combined err
    return v;
}

ExtendedReal xi_mean_exp_integral() {
    quad::IntegralSpec spec;
    spec.domain = quad::IntegralSpec::Domain::SemiInfinite;
    spec.lo = DDouble(0.0);
    spec.flags.log_at_0 = true;
    spec.integrand = [](DDouble t, DDouble, DDouble) {
        DDouble bracket = DDouble(1.0) / t - DDouble(1.0) / expm1(t);
        return -(bracket * log(-expm1(-t)));
    };
    return quad::integrate_semi_infinite(spec, 1e-12);
}

XiMean xi_mean() {
    XiMean out;
    ExtendedReal z2 = specfun::zeta(2.0);
    DDouble g = specfun::const_gamma();
    DDouble g1 = specfun::const_gamma1();
    out.closed = ExtendedReal(ldexp(z2.value - g * g - ldexp(g1, 1), -1), z2.err + 1e-29);

    out.series = numerics::sum_series(corpus::series_harmonic_log_kernel(), 1e-12);

    quad::IntegralSpec spec;
    spec.domain = quad::IntegralSpec::Domain::Finite;
    spec.lo = DDouble(0.0);
    spec.hi = DDouble(1.0);
    spec.flags.log_at_0 = true;
    spec.flags.log_at_1 = true;
    spec.integrand = [](DDouble u, DDouble, DDouble to_hi) {
        DDouble bracket = DDouble(1.0) / (u * log(u)) + DDouble(1.0) / to_hi;
        return bracket * log(to_hi);
    };
    out.integral = quad::integrate_finite(spec, 1e-12);

    double r01 = std::abs((out.closed.value - out.series.value).hi());
    double r02 = std::abs((out.closed.value - out.integral.value).hi());
    double r12 = std::abs((out.series.value - out.integral.value).hi());
    out.max_pairwise_residual = std::max({r01, r02, r12});
    return out;
}

} // namespace zetaforge::nielsen
