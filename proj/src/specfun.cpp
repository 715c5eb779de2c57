#include "zetaforge/specfun.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/summation.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace zetaforge::specfun {

using numerics::CompensatedAccumulator;
using numerics::em_tail;
using numerics::zeta_tail;

namespace {

// ---------------------------------------------------------------------------
// Bernoulli numbers B_{2m}: exact rationals through B_20, the zeta route
// B_{2m} = (-1)^{m+1} 2 (2m)! zeta(2m) / (2pi)^{2m} beyond.

DDouble bernoulli_even(int two_m);

const std::vector<DDouble>& bernoulli_table() {
    static const std::vector<DDouble> table = [] {
        std::vector<DDouble> b(25);   // b[m] = B_{2m}, m = 0..24
        b[0] = DDouble(1.0);
        b[1] = DDouble(1.0) / 6.0;
        b[2] = DDouble(-1.0) / 30.0;
        b[3] = DDouble(1.0) / 42.0;
        b[4] = DDouble(-1.0) / 30.0;
        b[5] = DDouble(5.0) / 66.0;
        b[6] = DDouble(-691.0) / 2730.0;
        b[7] = DDouble(7.0) / 6.0;
        b[8] = DDouble(-3617.0) / 510.0;
        b[9] = DDouble(43867.0) / 798.0;
        b[10] = DDouble(-174611.0) / 330.0;
        for (int m = 11; m <= 24; ++m) {
            // zeta(2m) for 2m >= 22 converges in a handful of terms
            DDouble z(1.0);
            for (long n = 2; n <= 8; ++n) z += powi(DDouble(1.0) / (double)n, 2 * m);
            DDouble fact(1.0);
            for (int i = 2; i <= 2 * m; ++i) fact *= (double)i;
            DDouble pw = powi(ddc::two_pi(), 2 * m);
            DDouble val = 2.0 * fact * z / pw;
            b[m] = (m % 2 == 0) ? -val : val;
        }
        return b;
    }();
    return table;
}

DDouble bernoulli_even(int two_m) { return bernoulli_table().at(two_m / 2); }

// psi asymptotic: B_{2j}/(2j), j = 1..8
const DDouble& psi_coeff(int j) {
    static const std::vector<DDouble> c = [] {
        std::vector<DDouble> v(9);
        for (int j = 1; j <= 8; ++j) v[j] = bernoulli_even(2 * j) / (double)(2 * j);
        return v;
    }();
    return c[j];
}

// Stirling: B_{2j}/((2j)(2j-1)), j = 1..8
const DDouble& stirling_coeff(int j) {
    static const std::vector<DDouble> c = [] {
        std::vector<DDouble> v(9);
        for (int j = 1; j <= 8; ++j)
            v[j] = bernoulli_even(2 * j) / (double)((2 * j) * (2 * j - 1));
        return v;
    }();
    return c[j];
}

DDouble pow_real(DDouble base, DDouble expo) { return exp(expo * log(base)); }

} // namespace

// ---------------------------------------------------------------------------
// zeta family

ExtendedReal zeta(DDouble s) {
    if (s.hi() <= 1.0) throw std::domain_error("zeta requires s > 1 (pole/continuation out of scope)");
    // pick the split so the Euler-Maclaurin remainder is ~1e-27
    long x0 = 16;
    auto em_bound = [&](long x) {
        double lb = std::log((double)x);
        double rising = 0.0;
        for (int i = 0; i < 11; ++i) rising += std::log(s.hi() + i);
        return 2.0 * 5.3e-10 * std::exp(rising - (s.hi() + 11.0) * lb);
    };
    while (x0 < 20000 && em_bound(x0) > 1e-27) x0 <<= 1;

    bool integral = (s.lo() == 0.0 && s.hi() == std::floor(s.hi()) && s.hi() < 300.0);
    CompensatedAccumulator acc;
    for (long n = 1; n < x0; ++n) {
        DDouble t = integral ? powi(DDouble(1.0) / (double)n, (long long)s.hi())
                             : pow_real(DDouble((double)n), -s);
        acc.add(ExtendedReal(t, 4.0 * ddc::eps * std::abs(t.hi())));
        if (t.hi() < 1e-40) break;   // deep in an underflowing tail (large s)
    }
    return acc.result() + em_tail(s, DDouble((double)x0), DDouble(0.0), DDouble(0.0), DDouble(1.0));
}

ExtendedReal zeta(double s) { return zeta(DDouble(s)); }

ExtendedReal zeta_int(int k) {
    if (k < 2) throw std::domain_error("zeta_int requires k >= 2");
    static std::mutex mu;
    static std::unordered_map<int, ExtendedReal> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    ExtendedReal v = zeta(DDouble((double)k));
    memo.emplace(k, v);
    return v;
}

ExtendedReal hurwitz_zeta(double s, double a) {
    if (s <= 1.0) throw std::domain_error("hurwitz_zeta requires s > 1");
    if (a <= 0.0) throw std::domain_error("hurwitz_zeta requires a > 0");
    long m = 16;
    auto em_bound = [&](double x) {
        double rising = 0.0;
        for (int i = 0; i < 11; ++i) rising += std::log(s + i);
        return 2.0 * 5.3e-10 * std::exp(rising - (s + 11.0) * std::log(x));
    };
    while (m < 100000 && em_bound(a + (double)m) > 1e-27) m <<= 1;
    CompensatedAccumulator acc;
    DDouble sd(s);
    for (long n = 0; n < m; ++n) {
        DDouble t = pow_real(DDouble(a) + (double)n, -sd);
        acc.add(ExtendedReal(t, 4.0 * ddc::eps * std::abs(t.hi())));
    }
    return acc.result() +
           em_tail(sd, DDouble(a) + (double)m, DDouble(0.0), DDouble(0.0), DDouble(1.0));
}

ExtendedReal hurwitz_zeta_deriv(double s, double a) {
    if (s <= 1.0) throw std::domain_error("hurwitz_zeta_deriv requires s > 1");
    if (a <= 0.0) throw std::domain_error("hurwitz_zeta_deriv requires a > 0");
    long m = 64;
    while (m < 100000 && (std::log(a + m) + 1.0) * std::pow(a + (double)m, -(s + 11.0)) > 1e-30)
        m <<= 1;
    CompensatedAccumulator acc;
    DDouble sd(s);
    for (long n = 0; n < m; ++n) {
        DDouble x = DDouble(a) + (double)n;
        DDouble t = pow_real(x, -sd) * log(x);
        acc.add(ExtendedReal(t, 4.0 * ddc::eps * std::abs(t.hi())));
    }
    ExtendedReal tail =
        em_tail(sd, DDouble(a) + (double)m, DDouble(0.0), DDouble(1.0), DDouble(0.0));
    return -(acc.result() + tail);
}

ExtendedReal dirichlet_eta(double s) {
    if (s <= 0.0) throw std::domain_error("dirichlet_eta requires s > 0");
    if (s > 1.0) {
        ExtendedReal z = zeta(s);
        DDouble factor = DDouble(1.0) - exp((DDouble(1.0) - s) * ddc::ln2());
        return ExtendedReal(factor, 4.0 * ddc::eps * std::abs(factor.hi())) * z;
    }
    // alternating route with condensation
    DDouble sd(s);
    std::vector<numerics::Partial> partials;
    CompensatedAccumulator acc;
    long n = 0;
    for (; n < 48; ++n) {
        DDouble t = pow_real(DDouble((double)(n + 1)), -sd);
        acc.add(ExtendedReal::exact((n % 2) ? -t : t));
    }
    DDouble run = acc.result().value;
    partials.push_back({n, run});
    for (int k = 0; k < 32; ++k, ++n) {
        DDouble t = pow_real(DDouble((double)(n + 1)), -sd);
        run += (n % 2) ? -t : t;
        partials.push_back({n + 1, run});
    }
    return numerics::extrapolate(partials, numerics::ExtrapolationModel::Alternating);
}

// ---------------------------------------------------------------------------
// digamma / polygamma

ExtendedReal polygamma(int j, double x) {
    if (x <= 0.0) throw std::domain_error("polygamma requires x > 0 (poles at 0, -1, ...)");
    if (j < 0) throw std::domain_error("polygamma requires j >= 0");
    if (j == 0) {
        // shift to y >= 40, then the Stirling series
        long shift = x >= 40.0 ? 0 : (long)std::ceil(40.0 - x);
        DDouble y = DDouble(x) + (double)shift;
        DDouble ly = log(y);
        DDouble inv_y2 = DDouble(1.0) / (y * y);
        DDouble series(0.0);
        DDouble p = inv_y2;
        for (int jj = 1; jj <= 8; ++jj) {
            series += psi_coeff(jj) * p;
            p *= inv_y2;
        }
        DDouble psi = ly - DDouble(0.5) / y - series;
        double rem = 3.1 * std::pow(y.hi(), -18.0);
        CompensatedAccumulator back;
        for (long i = 0; i < shift; ++i)
            back.add(ExtendedReal::exact(DDouble(1.0) / (DDouble(x) + (double)i)));
        ExtendedReal shift_sum = back.result();
        DDouble v = psi - shift_sum.value;
        return {v, rem + shift_sum.err + 8.0 * ddc::eps * (std::abs(v.hi()) + std::abs(ly.hi()))};
    }
    // psi^(j)(x) = (-1)^{j+1} j! zeta(j+1, x)
    ExtendedReal hz = hurwitz_zeta((double)j + 1.0, x);
    DDouble fact(1.0);
    for (int i = 2; i <= j; ++i) fact *= (double)i;
    ExtendedReal out = ExtendedReal::exact(fact) * hz;
    return (j % 2 == 1) ? out : -out;
}

ExtendedReal harmonic_number(long n) {
    if (n < 0) throw std::domain_error("harmonic_number requires n >= 0");
    CompensatedAccumulator acc;
    for (long k = 1; k <= n; ++k) acc.add(ExtendedReal::exact(DDouble(1.0) / (double)k));
    return acc.result();
}

// ---------------------------------------------------------------------------
// Stieltjes gamma_1(a)

ExtendedReal stieltjes_gamma1(double a) {
    if (a <= 0.0) throw std::domain_error("stieltjes_gamma1 requires a > 0");
    const long m = 256;
    CompensatedAccumulator acc;
    for (long k = 0; k < m; ++k) {
        DDouble x = DDouble(a) + (double)k;
        acc.add(ExtendedReal::exact(log(x) / x));
    }
    DDouble x0 = DDouble(a) + (double)m;
    DDouble lx = log(x0);
    DDouble total = acc.result().value - ldexp(lx * lx, -1) + ldexp(lx / x0, -1);

    // f(x) = ln x / x; f^(k) = x^{-1-k} (a_k ln x + b_k)
    DDouble ak(1.0), bk(0.0);
    DDouble xpow = DDouble(1.0) / (x0 * x0);
    int k = 0;
    static const DDouble bof[6] = {
        DDouble(1.0) / 12.0,    DDouble(-1.0) / 720.0,     DDouble(1.0) / 30240.0,
        DDouble(-1.0) / 1209600.0, DDouble(1.0) / 47900160.0, DDouble(-691.0) / DDouble(1307674368000.0)};
    double rem = 0.0;
    for (int j = 1; j <= 6; ++j) {
        while (k < 2 * j - 1) {
            double kk = 1.0 + (double)k;
            DDouble an = -kk * ak;
            DDouble bn = ak - kk * bk;
            ak = an;
            bk = bn;
            if (k > 0) xpow /= x0;
            ++k;
        }
        DDouble deriv = xpow * (ak * lx + bk);
        if (j <= 5)
            total -= bof[j - 1] * deriv;
        else
            rem = 2.0 * std::abs((bof[j - 1] * deriv).hi());
    }
    return {total, rem + acc.result().err + 4e-28 * (1.0 + std::abs(total.hi()))};
}

// ---------------------------------------------------------------------------
// polylogarithm

namespace {

// zeta(k - j) with negative arguments folded to Bernoulli values
DDouble zeta_shift(int k, int j) {
    int arg = k - j;
    if (arg >= 2) return zeta_int(arg).value;
    if (arg == 0) return DDouble(-0.5);
    int m = -arg;   // arg < 0
    if (m % 2 == 0) return DDouble(0.0);
    return -bernoulli_even(m + 1) / (double)(m + 1);
}

ExtendedReal polylog_series(int k, DDouble t) {
    // |t| <= 0.55: direct sum with the geometric tail bound
    DDouble term = t;
    CompensatedAccumulator acc;
    double at = std::abs(t.hi());
    long n = 1;
    acc.add(ExtendedReal::exact(t));
    for (n = 2; n <= 140; ++n) {
        term *= t;
        acc.add(ExtendedReal::exact(term / powi(DDouble((double)n), k)));
        if (std::abs(term.hi()) < 1e-36) break;
    }
    ExtendedReal out = acc.result();
    out.err += std::pow(at, (double)(n + 1)) / ((1.0 - at) * std::pow((double)(n + 1), (double)k));
    return out;
}

ExtendedReal polylog_near_one(int k, DDouble t) {
    // Li_k(e^-y) = y^{k-1}/(k-1)! (H_{k-1} - ln y) + sum_{j != k-1} zeta(k-j) (-y)^j / j!
    DDouble y = -log(t);
    DDouble ly = log(y);
    DDouble hk(0.0);
    for (int i = 1; i <= k - 1; ++i) hk += DDouble(1.0) / (double)i;
    DDouble fact(1.0);
    for (int i = 2; i <= k - 1; ++i) fact *= (double)i;
    DDouble total = powi(-y, k - 1) / fact * (hk - ly);
    DDouble pj(1.0);   // (-y)^j / j!
    for (int j = 0; j <= 48; ++j) {
        if (j > 0) pj *= -y / (double)j;
        if (j == k - 1) continue;
        total += zeta_shift(k, j) * pj;
    }
    return {total, 1e-28 * (1.0 + std::abs(total.hi()))};
}

} // namespace

namespace {

ExtendedReal polylog_dd(int k, DDouble t) {
    if (k == 1) {
        DDouble v = -log1p(-t);
        return ExtendedReal(v, 4.0 * ddc::eps * std::abs(v.hi()));
    }
    if (std::abs(t.hi()) <= 0.55) return polylog_series(k, t);
    if (t.hi() > 0.0) return polylog_near_one(k, t);
    // t in (-1, -0.55): Li_k(t) = 2^{1-k} Li_k(t^2) - Li_k(-t)
    ExtendedReal sq = polylog_dd(k, t * t);
    ExtendedReal pos = polylog_dd(k, -t);
    return ExtendedReal(ldexp(DDouble(1.0), 1 - k), 0.0) * sq - pos;
}

} // namespace

ExtendedReal polylog(int k, double t) {
    if (k < 1) throw std::domain_error("polylog requires k >= 1");
    if (std::abs(t) > 1.0) throw std::domain_error("polylog requires |t| <= 1");
    if (k == 1 && t == 1.0) throw std::domain_error("polylog(1, 1) diverges");
    if (t == 0.0) return ExtendedReal::exact(DDouble(0.0));
    if (t == 1.0) return zeta_int(k);
    if (t == -1.0) {
        if (k == 1) return ExtendedReal(-ddc::ln2(), 1e-31);
        // -eta(k) = -(1 - 2^{1-k}) zeta(k)
        ExtendedReal z = zeta_int(k);
        DDouble factor = DDouble(1.0) - exp((1.0 - (double)k) * ddc::ln2());
        return -(ExtendedReal(factor, 2.0 * ddc::eps) * z);
    }
    return polylog_dd(k, DDouble(t));
}

ExtendedReal polylog(int k, DDouble t) {
    if (k < 1) throw std::domain_error("polylog requires k >= 1");
    if (std::abs(t.hi()) > 1.0) throw std::domain_error("polylog requires |t| <= 1");
    if (t.hi() == 1.0 && t.lo() == 0.0) {
        if (k == 1) throw std::domain_error("polylog(1, 1) diverges");
        return zeta_int(k);
    }
    if (t.hi() == 0.0 && t.lo() == 0.0) return ExtendedReal::exact(DDouble(0.0));
    return polylog_dd(k, t);
}

// ---------------------------------------------------------------------------
// incomplete gamma

ExtendedReal ein(DDouble x) {
    // entire series sum (-1)^{n+1} x^n / (n n!)
    if (std::abs(x.hi()) <= 2.0) {
        DDouble term(1.0);
        CompensatedAccumulator acc;
        for (int n = 1; n <= 60; ++n) {
            term *= x / (double)n;
            DDouble c = term / (double)n;
            acc.add(ExtendedReal(((n % 2) ? c : -c), 4.0 * ddc::eps * std::abs(c.hi())));
            if (std::abs(term.hi()) < 1e-36) break;
        }
        return acc.result();
    }
    ExtendedReal g0 = upper_gamma0(x.hi());
    DDouble v = const_gamma() + log(x);
    return ExtendedReal(v, 4.0 * ddc::eps * std::abs(v.hi())) + g0;
}

ExtendedReal upper_gamma0(double x) {
    if (x <= 0.0) throw std::domain_error("upper_gamma0 requires x > 0");
    if (x <= 1.5) {
        // Gamma(0,x) = ein(x) - gamma - ln x
        ExtendedReal e = ein(DDouble(x));
        DDouble v = e.value - const_gamma() - log(DDouble(x));
        return {v, e.err + 8.0 * ddc::eps * (std::abs(v.hi()) + 1.0)};
    }
    // continued fraction e^-x / (x+1 - 1/(x+3 - 4/(x+5 - 9/(x+7 - ...))))
    // evaluated by the modified Lentz scheme
    const DDouble tiny(1e-60);
    DDouble b = DDouble(x) + 1.0;
    DDouble c = DDouble(1.0) / tiny;
    DDouble d = DDouble(1.0) / b;
    DDouble h = d;
    for (int n = 1; n <= 5000; ++n) {
        DDouble a(-(double)n * (double)n);
        b += 2.0;
        d = b + a * d;
        if (std::abs(d.hi()) < 1e-60) d = tiny;
        c = b + a / c;
        if (std::abs(c.hi()) < 1e-60) c = tiny;
        d = DDouble(1.0) / d;
        DDouble delta = c * d;
        h *= delta;
        if (std::abs((delta - 1.0).hi()) < 1e-32) {
            DDouble v = exp(DDouble(-x)) * h;
            return {v, 1e-30 * std::abs(v.hi()) + 1e-300};
        }
    }
    throw precision_error("upper_gamma0: continued fraction failed to converge");
}

// ---------------------------------------------------------------------------
// log gamma

ExtendedReal log_gamma(DDouble x) {
    if (x.hi() <= 0.0) throw std::domain_error("log_gamma requires x > 0");
    long shift = x.hi() >= 24.0 ? 0 : (long)std::ceil(24.0 - x.hi());
    DDouble y = x + (double)shift;
    DDouble ly = log(y);
    DDouble inv_y = DDouble(1.0) / y;
    DDouble inv_y2 = inv_y * inv_y;
    DDouble series(0.0);
    DDouble p = inv_y;
    for (int j = 1; j <= 8; ++j) {
        series += stirling_coeff(j) * p;
        p *= inv_y2;
    }
    DDouble lg = (y - 0.5) * ly - y + ldexp(ddc::ln_two_pi(), -1) + series;
    double rem = 0.36 * std::pow(y.hi(), -17.0);
    CompensatedAccumulator logs;
    for (long i = 0; i < shift; ++i) {
        DDouble xi = x + (double)i;
        logs.add(ExtendedReal(log(xi), 4.0 * ddc::eps * (std::abs(std::log(std::abs(xi.hi()))) + 1.0)));
    }
    DDouble v = lg - logs.result().value;
    return {v, rem + logs.result().err + 8.0 * ddc::eps * (std::abs(v.hi()) + std::abs(lg.hi()))};
}

ExtendedReal log_gamma(double x) { return log_gamma(DDouble(x)); }

// ---------------------------------------------------------------------------
// Im ln Gamma(1+i)

namespace {
struct ComplexDD {
    DDouble re, im;
};
ComplexDD cmul(const ComplexDD& a, const ComplexDD& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
} // namespace

ExtendedReal im_log_gamma_one_plus_i() {
    // ln Gamma(1+i) = ln Gamma(m+1+i) - sum_{k=1}^{m} ln(k+i); Stirling at m+1+i
    const int m = 30;
    const double c = (double)m + 1.0;
    DDouble theta = atan(DDouble(1.0) / c);
    DDouble L = ldexp(log(DDouble(c) * c + 1.0), -1);   // ln|z|
    // Im[(z - 1/2) ln z] = (c - 1/2) theta + L, Im[-z] = -1
    DDouble im = (DDouble(c) - 0.5) * theta + L - 1.0;
    // Bernoulli series: sum_j B_{2j}/((2j)(2j-1)) z^{1-2j}
    DDouble denom = DDouble(c) * c + 1.0;
    ComplexDD w{DDouble(c) / denom, DDouble(-1.0) / denom};   // 1/z
    ComplexDD wp = w;
    ComplexDD w2 = cmul(w, w);
    for (int j = 1; j <= 8; ++j) {
        im += stirling_coeff(j) * wp.im;
        wp = cmul(wp, w2);
    }
    // downward recurrence: subtract sum of atan(1/k)
    CompensatedAccumulator acc;
    for (int k = 1; k <= m; ++k)
        acc.add(ExtendedReal(atan(DDouble(1.0) / (double)k), 2e-31));
    DDouble v = im - acc.result().value;
    double rem = 0.36 * std::pow(c, -17.0);
    return {v, rem + acc.result().err + 1e-29};
}

// ---------------------------------------------------------------------------
// arccot

ExtendedReal arccot(DDouble x, long max_terms) {
    if (x.hi() < 1.0) throw std::domain_error("arccot series requires x >= 1");
    DDouble inv = DDouble(1.0) / x;
    DDouble inv2 = inv * inv;
    if (x.hi() < 1.14) {
        // slow alternating decay: condensation acceleration
        auto term = [inv, inv2](long k) {
            DDouble t = powi(inv, 2 * k + 1) / (double)(2 * k + 1);
            return (k % 2) ? -t : t;
        };
        return numerics::alternating_sum(term, 0, 48, 28);
    }
    CompensatedAccumulator acc;
    DDouble p = inv;
    long k = 0;
    for (; k < max_terms; ++k) {
        DDouble t = p / (double)(2 * k + 1);
        acc.add(ExtendedReal((k % 2) ? -t : t, 2.0 * ddc::eps * std::abs(t.hi())));
        p *= inv2;
        if (std::abs(p.hi()) / (double)(2 * k + 3) < 1e-36) break;
    }
    ExtendedReal out = acc.result();
    out.err += std::abs(p.hi()) / (double)(2 * k + 3);   // first omitted term
    return out;
}

ExtendedReal arccot(double x, long max_terms) { return arccot(DDouble(x), max_terms); }

} // namespace zetaforge::specfun
