#include "zetaforge/quadrature.hpp"

#include "zetaforge/summation.hpp"

#include <cmath>
#include <vector>

namespace zetaforge::quad {

using numerics::CompensatedAccumulator;

Integrand plain(std::function<DDouble(DDouble)> f) {
    return [f = std::move(f)](DDouble t, DDouble, DDouble) { return f(t); };
}

// ---------------------------------------------------------------------------
// 12-point Gauss-Legendre, nodes refined to double-double by Newton

namespace {

struct GlRule {
    std::vector<DDouble> node;   // positive nodes (and 0 is absent for even n)
    std::vector<DDouble> weight;
};

// P_n(x) and P_n'(x) by the three-term recurrence
void legendre(int n, DDouble x, DDouble& p, DDouble& dp) {
    DDouble p0(1.0), p1 = x;
    for (int k = 2; k <= n; ++k) {
        DDouble p2 = ((double)(2 * k - 1) * x * p1 - (double)(k - 1) * p0) / (double)k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = (double)n * (x * p1 - p0) / (x * x - 1.0);
}

const GlRule& gl12() {
    static const GlRule rule = [] {
        const int n = 12;
        GlRule r;
        for (int i = 1; i <= n / 2; ++i) {
            DDouble x(std::cos(M_PI * ((double)i - 0.25) / ((double)n + 0.5)));
            DDouble p, dp;
            for (int it = 0; it < 5; ++it) {
                legendre(n, x, p, dp);
                x = x - p / dp;
            }
            legendre(n, x, p, dp);
            r.node.push_back(x);
            r.weight.push_back(DDouble(2.0) / ((DDouble(1.0) - x * x) * dp * dp));
        }
        return r;
    }();
    return rule;
}

struct EvalStats {
    double abs_sum = 0.0;   // sum of |w f| for the rounding floor
};

DDouble gl_estimate(const Integrand& f, DDouble a, DDouble b, DDouble lo, DDouble hi,
                    EvalStats& stats) {
    // integrate f over [a,b]; (lo,hi) are the full-interval endpoints used
    // for the distance arguments
    const GlRule& r = gl12();
    DDouble c = ldexp(a + b, -1);
    DDouble h = ldexp(b - a, -1);
    DDouble acc(0.0);
    for (size_t i = 0; i < r.node.size(); ++i) {
        for (int sign = -1; sign <= 1; sign += 2) {
            DDouble x = c + h * ((double)sign * r.node[i]);
            DDouble v = f(x, x - lo, hi - x) * r.weight[i];
            if (!v.is_finite()) throw integrability_error("integrand not finite inside domain");
            acc += v;
            stats.abs_sum += std::abs((v * h).hi());
        }
    }
    return acc * h;
}

struct GlAdaptive {
    const Integrand& f;
    DDouble lo, hi;
    EvalStats stats;
    double err_accum = 0.0;
    int max_depth = 48;

    DDouble run(DDouble a, DDouble b, DDouble whole, double eps, int depth) {
        if (depth > max_depth)
            throw integrability_error("adaptive refinement diverges (non-integrable singularity?)");
        DDouble m = ldexp(a + b, -1);
        DDouble left = gl_estimate(f, a, m, lo, hi, stats);
        DDouble right = gl_estimate(f, m, b, lo, hi, stats);
        double diff = std::abs((left + right - whole).hi());
        if (diff <= eps) {
            err_accum += diff;
            return left + right;
        }
        return run(a, m, left, eps * 0.5, depth + 1) + run(m, b, right, eps * 0.5, depth + 1);
    }
};

ExtendedReal gl_adaptive(const Integrand& f, DDouble a, DDouble b, double eps) {
    GlAdaptive state{f, a, b};
    DDouble whole = gl_estimate(f, a, b, a, b, state.stats);
    DDouble v = state.run(a, b, whole, eps * 0.5, 0);
    double noise = 8.0 * ddc::eps * state.stats.abs_sum;
    return {v, state.err_accum + noise + 1e-300};
}

// ---------------------------------------------------------------------------
// tanh-sinh rule for endpoint singularities

struct TsNode {
    DDouble one_minus;   // 1 - tau  = 2q/(1+q), q = exp(-2w), w = (pi/2) sinh(v)
    DDouble one_plus;    // 1 + tau
    DDouble weight;      // (pi/2) cosh(v) / cosh^2(w)
};

struct TsLevel {
    std::vector<TsNode> nodes;   // nodes at positive v for this level's new grid
};

constexpr int kTsMaxLevel = 10;
constexpr double kTsWMax = 330.0;   // distances stay above ~1e-287

const std::vector<TsLevel>& ts_levels() {
    static const std::vector<TsLevel> levels = [] {
        std::vector<TsLevel> out(kTsMaxLevel + 1);
        for (int level = 0; level <= kTsMaxLevel; ++level) {
            double h = std::ldexp(1.0, -level);
            for (long k = (level == 0) ? 1 : 1;; k += (level == 0) ? 1 : 2) {
                double v = (double)k * h;
                double w_est = M_PI_2 * std::sinh(v);
                if (w_est > kTsWMax) break;
                DDouble vd(v);
                DDouble w = ddc::half_pi() * sinh(vd);
                DDouble q = exp(ldexp(-w, 1));
                DDouble om = ldexp(q, 1) / (q + 1.0);
                DDouble op = DDouble(2.0) - om;
                DDouble wt = ddc::half_pi() * cosh(vd) * (4.0 * q / ((q + 1.0) * (q + 1.0)));
                out[level].nodes.push_back({om, op, wt});
            }
        }
        return out;
    }();
    return levels;
}

ExtendedReal tanh_sinh(const Integrand& f, DDouble a, DDouble b, double eps) {
    DDouble c = ldexp(a + b, -1);
    DDouble h = ldexp(b - a, -1);
    EvalStats stats;

    auto eval_node = [&](const TsNode& n, bool mirror) {
        // mirror=false: tau > 0 (near b); mirror=true: tau < 0 (near a)
        DDouble from_lo = mirror ? h * n.one_minus : h * n.one_plus;
        DDouble to_hi = mirror ? h * n.one_plus : h * n.one_minus;
        DDouble x = a + from_lo;
        DDouble v = f(x, from_lo, to_hi) * n.weight;
        if (!v.is_finite()) throw integrability_error("integrand not finite inside domain");
        stats.abs_sum += std::abs(v.hi());
        return v;
    };

    // center node v = 0: tau = 0, weight pi/2
    DDouble sum = f(c, h, h) * ddc::half_pi();
    stats.abs_sum += std::abs(sum.hi());
    DDouble estimate = sum * h;   // step h0 = 1 applied below per level
    double prev_diff = std::numeric_limits<double>::infinity();

    double step = 1.0;
    DDouble prev(0.0);
    for (int level = 0; level <= kTsMaxLevel; ++level) {
        if (level > 0) step *= 0.5;
        for (const TsNode& n : ts_levels()[level].nodes) {
            sum += eval_node(n, false);
            sum += eval_node(n, true);
        }
        estimate = sum * h * step;
        if (level > 0) {
            double diff = std::abs((estimate - prev).hi());
            double scale = std::max(1.0, std::abs(estimate.hi()));
            if (diff <= eps * 0.5 || diff <= 4.0 * ddc::eps * scale) {
                double noise = 8.0 * ddc::eps * stats.abs_sum * step;
                return {estimate, diff + noise + 1e-300};
            }
            if (level == kTsMaxLevel) {
                if (diff > 64.0 * std::max(eps, 1e-18) && diff > 0.125 * prev_diff)
                    throw integrability_error("tanh-sinh refinement stalls (non-integrable endpoint?)");
                throw precision_error("tanh-sinh: requested eps unreachable");
            }
            prev_diff = diff;
        }
        prev = estimate;
    }
    throw precision_error("tanh-sinh: requested eps unreachable");
}

} // namespace

// ---------------------------------------------------------------------------
// public entry points

ExtendedReal integrate_finite(const IntegralSpec& spec, double eps) {
    if (spec.domain != IntegralSpec::Domain::Finite)
        throw config_error("integrate_finite requires a finite domain");
    if (!(spec.lo < spec.hi)) throw config_error("integrate_finite requires lo < hi");
    if (eps <= 0.0) throw config_error("integrate_finite requires eps > 0");
    if (spec.flags.log_at_0 || spec.flags.log_at_1)
        return tanh_sinh(spec.integrand, spec.lo, spec.hi, eps);
    return gl_adaptive(spec.integrand, spec.lo, spec.hi, eps);
}

namespace {

// segment engine: integrate f over (a, inf) splitting at multiples of pi,
// condensing the (eventually alternating) segment series when it decays slowly
ExtendedReal pi_segments(const Integrand& f, DDouble a, double eps, bool log_at_lo) {
    const int max_segments = 64;
    CompensatedAccumulator total;
    std::vector<DDouble> seg_values;
    std::vector<numerics::Partial> partials;
    long m0 = (long)std::floor(a.hi() / M_PI);
    for (long m = m0; m < m0 + max_segments; ++m) {
        DDouble lo = ddc::pi() * (double)m;
        if (lo < a) lo = a;
        DDouble hi = ddc::pi() * (double)(m + 1);
        if (!(lo < hi)) continue;
        ExtendedReal seg;
        if (m == m0 && log_at_lo) {
            IntegralSpec piece{f, IntegralSpec::Domain::Finite, lo, hi, {}};
            piece.flags.log_at_0 = true;
            seg = integrate_finite(piece, eps / 8.0);
        } else {
            seg = gl_adaptive(f, lo, hi, eps / 8.0);
        }
        total.add(seg);
        seg_values.push_back(seg.value);
        partials.push_back({m - m0 + 1, total.result().value});
        if (seg_values.size() >= 4 && std::abs(seg.value.hi()) < eps / 8.0) {
            ExtendedReal out = total.result();
            out.err += std::abs(seg.value.hi());   // alternating / decaying remainder
            return out;
        }
    }
    // slow decay: condense the alternating partial sums over the trailing window
    size_t window = 40;
    size_t from = partials.size() - window;
    for (size_t i = from + 2; i < partials.size(); ++i) {
        double d1 = (partials[i].value - partials[i - 1].value).hi();
        double d0 = (partials[i - 1].value - partials[i - 2].value).hi();
        if (d1 * d0 > 0.0)
            throw integrability_error("oscillatory range: segment sums do not alternate");
    }
    ExtendedReal out = numerics::extrapolate(
        std::span<const numerics::Partial>(partials.data() + from, window),
        numerics::ExtrapolationModel::Alternating);
    out.err += total.result().err;
    return out;
}

} // namespace

ExtendedReal integrate_semi_infinite(const IntegralSpec& spec, double eps) {
    if (spec.domain != IntegralSpec::Domain::SemiInfinite)
        throw config_error("integrate_semi_infinite requires a semi-infinite domain");
    if (eps <= 0.0) throw config_error("integrate_semi_infinite requires eps > 0");
    const DDouble a = spec.lo;

    if (spec.flags.oscillatory_log)
        return pi_segments(spec.integrand, a, eps, spec.flags.log_at_0);

    // decay probe: exponential decay beyond a finite point
    auto probe = [&](double t) {
        DDouble td = a + t;
        return std::abs(spec.integrand(td, DDouble(t), DDouble(0.0)).hi());
    };
    double near = std::max({probe(1.0), probe(2.0), probe(3.0)});
    double far1 = probe(12.0), far2 = probe(24.0);
    if (far2 > near * 3.4e-4 + 1e-280 || far2 > far1 + 1e-280)
        throw integrability_error("semi-infinite integrand does not decay exponentially");

    // head [a, a+1], then t = A - ln v maps the tail onto (0, 1]
    DDouble A = a + 1.0;
    IntegralSpec head{spec.integrand, IntegralSpec::Domain::Finite, a, A, spec.flags};
    head.flags.oscillatory_log = false;
    head.flags.log_at_1 = false;
    ExtendedReal head_val = integrate_finite(head, eps * 0.5);

    Integrand mapped = [&](DDouble v, DDouble from0, DDouble) {
        DDouble t = A - log(from0);
        return spec.integrand(t, t - a, DDouble(0.0)) / v;
    };
    IntegralSpec tail;
    tail.integrand = mapped;
    tail.domain = IntegralSpec::Domain::Finite;
    tail.lo = DDouble(0.0);
    tail.hi = DDouble(1.0);
    tail.flags.log_at_0 = true;
    ExtendedReal tail_val = integrate_finite(tail, eps * 0.5);
    return head_val + tail_val;
}

ExtendedReal integrate_log_oscillatory(const IntegralSpec& spec, double eps) {
    if (eps <= 0.0) throw config_error("integrate_log_oscillatory requires eps > 0");
    const Integrand& g = spec.integrand;

    // g must stay bounded near t = 0 (u -> inf)
    double g6 = std::abs(g(DDouble(1e-6), DDouble(1e-6), DDouble(1.0)).hi());
    double g12 = std::abs(g(DDouble(1e-12), DDouble(1e-12), DDouble(1.0)).hi());
    if (g12 > 2.0 * g6 + 1e3)
        throw integrability_error("oscillatory factor grows near t = 0");

    Integrand u_form = [&g](DDouble u, DDouble, DDouble) {
        DDouble t = exp(-u);
        DDouble kernel = (u.hi() < 1e-30) ? DDouble(1.0) : sin(u) / u;
        // pass 1-t as the "distance to 1" so log(1-zt) stays accurate at u ~ 0
        return kernel * g(t, t, -expm1(-u));
    };
    return pi_segments(u_form, DDouble(0.0), eps, spec.flags.log_at_0);
}

} // namespace zetaforge::quad
