#include "zetaforge/summation.hpp"

#include <algorithm>
#include <cmath>

namespace zetaforge::numerics {

// ---------------------------------------------------------------------------
// compensated accumulation

void CompensatedAccumulator::add(const ExtendedReal& x) {
    if (!x.is_finite()) throw std::overflow_error("magnitude overflow in compensated sum");
    DDouble y = x.value - carry_;
    DDouble t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
    if (!sum_.is_finite()) throw std::overflow_error("magnitude overflow in compensated sum");
    abs_sum_ += std::abs(x.value.hi());
    err_in_ += x.err;
    ++count_;
}

ExtendedReal CompensatedAccumulator::result() const {
    if (count_ == 0) return ExtendedReal(DDouble(0.0), 0.0);
    DDouble v = sum_ - carry_;
    double rounding = 4.0 * ddc::eps * abs_sum_ + (double)count_ * 1e-305;
    return {v, err_in_ + rounding};
}

ExtendedReal compensated_sum(std::span<const ExtendedReal> terms) {
    CompensatedAccumulator acc;
    for (const auto& t : terms) acc.add(t);
    return acc.result();
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin engine

namespace {

// B_{2j}/(2j)! for j = 1..6
const DDouble& bern_over_fact(int j) {
    static const DDouble table[6] = {
        DDouble(1.0) / 12.0,
        DDouble(-1.0) / 720.0,
        DDouble(1.0) / 30240.0,
        DDouble(-1.0) / 1209600.0,
        DDouble(1.0) / 47900160.0,
        DDouble(-691.0) / DDouble(1307674368000.0),
    };
    return table[j - 1];
}

// B_{2j}/(2j) for j = 1..5
const DDouble& bern_over_index(int j) {
    static const DDouble table[5] = {
        DDouble(1.0) / 12.0,
        DDouble(-1.0) / 120.0,
        DDouble(1.0) / 252.0,
        DDouble(-1.0) / 240.0,
        DDouble(1.0) / 132.0,
    };
    return table[j - 1];
}

} // namespace

ExtendedReal em_tail(DDouble s, DDouble x0, DDouble c2, DDouble c1, DDouble c0) {
    if (s.hi() <= 1.0) throw std::domain_error("em_tail requires exponent > 1");
    if (x0.hi() <= 1.0) throw std::domain_error("em_tail requires start > 1");

    const DDouble lx = log(x0);
    const DDouble sm1 = s - 1.0;
    const DDouble inv_sm1 = DDouble(1.0) / sm1;

    // integral part: x0^{1-s} * [ c2 (L^2/(s-1) + 2L/(s-1)^2 + 2/(s-1)^3)
    //                           + c1 (L/(s-1) + 1/(s-1)^2) + c0/(s-1) ]
    DDouble xp = exp(-sm1 * lx); // x0^{1-s}
    DDouble int_part = c2 * (lx * lx * inv_sm1 + 2.0 * lx * inv_sm1 * inv_sm1 +
                             2.0 * inv_sm1 * inv_sm1 * inv_sm1) +
                       c1 * (lx * inv_sm1 + inv_sm1 * inv_sm1) + c0 * inv_sm1;
    DDouble total = xp * int_part;

    // f(x0)/2
    DDouble x0_ms = exp(-s * lx); // x0^{-s}
    DDouble f0 = x0_ms * (c2 * lx * lx + c1 * lx + c0);
    total += ldexp(f0, -1);

    // Bernoulli corrections: - sum_j B_{2j}/(2j)! f^{(2j-1)}(x0), where
    // f^{(k)}(x) = x^{-s-k} (A_k ln^2 + B_k ln + C_k) with
    // A' = -(s+k)A, B' = 2A - (s+k)B, C' = B - (s+k)C.
    DDouble A = c2, B = c1, C = c0;
    DDouble xpow = x0_ms;       // x0^{-s-k}
    const DDouble inv_x0 = DDouble(1.0) / x0;
    int k = 0;
    double rem_bound = 0.0;
    for (int j = 1; j <= 6; ++j) {
        while (k < 2 * j - 1) {
            DDouble spk = s + (double)k;
            DDouble An = -spk * A;
            DDouble Bn = 2.0 * A - spk * B;
            DDouble Cn = B - spk * C;
            A = An; B = Bn; C = Cn;
            xpow *= inv_x0;
            ++k;
        }
        DDouble deriv = xpow * (A * lx * lx + B * lx + C);
        if (j <= 5) {
            total -= bern_over_fact(j) * deriv;
        } else {
            // first omitted term bounds the remainder (factor 2 margin)
            rem_bound = 2.0 * std::abs((bern_over_fact(j) * deriv).hi());
        }
    }

    // floor covers the dd exp/log evaluation accuracy of the closed pieces
    double err = rem_bound + 4e-28 * std::abs(total.hi()) + 1e-300;
    return {total, err};
}

// ---------------------------------------------------------------------------
// named tails

ExtendedReal zeta_tail(DDouble s, long n_last) {
    if (s.hi() <= 1.0) throw std::domain_error("zeta_tail requires s > 1");
    if (n_last < 1) throw std::domain_error("zeta_tail requires N >= 1");
    return em_tail(s, DDouble((double)n_last + 1.0), DDouble(0.0), DDouble(0.0), DDouble(1.0));
}

ExtendedReal zeta_tail(double s, long n_last) { return zeta_tail(DDouble(s), n_last); }

ExtendedReal log_zeta_tail(DDouble s, long n_last) {
    if (s.hi() <= 1.0) throw std::domain_error("log_zeta_tail requires s > 1");
    if (n_last < 3) throw std::domain_error("log_zeta_tail requires N >= e");
    return em_tail(s, DDouble((double)n_last + 1.0), DDouble(0.0), DDouble(1.0), DDouble(0.0));
}

ExtendedReal log_zeta_tail(double s, long n_last) { return log_zeta_tail(DDouble(s), n_last); }

DDouble euler_gamma_em() {
    static const DDouble value = [] {
        const long m = 256;
        DDouble h(0.0);
        for (long k = m; k >= 1; --k) h += DDouble(1.0) / (double)k;
        DDouble g = h - log(DDouble((double)m)) - DDouble(0.5) / (double)m;
        DDouble m2 = DDouble(1.0) / ((double)m * (double)m);
        DDouble p = m2;
        for (int j = 1; j <= 5; ++j) {
            g += bern_over_index(j) * p;
            p *= m2;
        }
        return g;
    }();
    return value;
}

ExtendedReal harmonic_tail_real(DDouble sigma, long n_last) {
    if (sigma.hi() <= 1.0) throw std::domain_error("harmonic tail requires exponent > 1");
    if (n_last < 10) throw std::domain_error("harmonic tail requires N >= 10");
    // H_n = ln n + gamma + 1/(2n) - 1/(12 n^2) + 1/(120 n^4) + r_n, |r_n| <= 1/(252 n^6)
    ExtendedReal out = log_zeta_tail(sigma, n_last);
    ExtendedReal zs = zeta_tail(sigma, n_last);
    out += ExtendedReal(euler_gamma_em() * zs.value, zs.err);
    out += 0.5 * zeta_tail(sigma + 1.0, n_last);
    out += (-1.0 / 12.0) * zeta_tail(sigma + 2.0, n_last);
    out += (1.0 / 120.0) * zeta_tail(sigma + 4.0, n_last);
    ExtendedReal rem = zeta_tail(sigma + 6.0, n_last);
    out.err += (rem.value.hi() + rem.err) / 252.0;
    return out;
}

ExtendedReal harmonic_tail(int j, long n_last) {
    if (j < 2) throw std::domain_error("harmonic tail diverges for j < 2");
    return harmonic_tail_real(DDouble((double)j), n_last);
}

// ---------------------------------------------------------------------------
// tail models and series

void TailModel::validate() const {
    for (const auto& p : basis) {
        switch (p.kind) {
            case TailPrimitive::Kind::Power:
            case TailPrimitive::Kind::LogPower:
                if (p.exponent <= 1.0)
                    throw config_error("tail model basis diverges: exponent must be > 1");
                break;
            case TailPrimitive::Kind::HarmonicPower:
                if (p.exponent < 2.0 || p.exponent != std::floor(p.exponent))
                    throw config_error("harmonic tail basis requires integer exponent >= 2");
                break;
        }
        if (!p.coeff.is_finite()) throw config_error("tail model coefficient not finite");
    }
    if (rem_coeff < 0.0 || (rem_coeff > 0.0 && rem_power <= 1.0))
        throw config_error("tail model remainder bound must have power > 1");
}

ExtendedReal TailModel::evaluate(long n_last) const {
    ExtendedReal out(DDouble(0.0), 0.0);
    for (const auto& p : basis) {
        ExtendedReal t;
        switch (p.kind) {
            case TailPrimitive::Kind::Power: t = zeta_tail(p.exponent, n_last); break;
            case TailPrimitive::Kind::LogPower: t = log_zeta_tail(p.exponent, n_last); break;
            case TailPrimitive::Kind::HarmonicPower: t = harmonic_tail((int)p.exponent, n_last); break;
        }
        out += p.coeff * t;
    }
    if (rem_coeff > 0.0) {
        ExtendedReal bound = zeta_tail(rem_power, n_last);
        out.err += rem_coeff * (bound.value.hi() + bound.err);
    }
    return out;
}

ExtendedReal sum_series(const SeriesSpec& spec, double eps, long max_terms) {
    if (eps <= 0.0) throw config_error("sum_series requires eps > 0");
    if (!spec.term) throw config_error("sum_series requires a term rule");

    if (spec.n_end >= 0) {
        // finite series: empty sums to exactly zero
        CompensatedAccumulator acc;
        for (long n = spec.n0; n <= spec.n_end; ++n) acc.add(spec.term(n));
        return acc.result();
    }

    spec.tail.validate();
    if (spec.tail.basis.empty() && spec.tail.rem_coeff == 0.0)
        throw config_error("infinite series needs a tail model");

    long n_target = std::max(spec.tail.valid_from, spec.n0 + 15);
    long n_cap = 1;
    while (n_cap < n_target) n_cap <<= 1;

    CompensatedAccumulator acc;
    long next = spec.n0;
    while (n_cap <= max_terms) {
        ExtendedReal tail = spec.tail.evaluate(n_cap);
        if (tail.err <= eps / 4.0) {
            for (; next <= n_cap; ++next) {
                ExtendedReal t = spec.term(next);
                if (spec.kind == SeriesKind::PositiveMonotone && next < spec.n0 + 16 &&
                    t.value.hi() < -t.err)
                    throw config_error("series declared positive-monotone has a negative term");
                acc.add(t);
            }
            ExtendedReal direct = acc.result();
            ExtendedReal total = direct + tail;
            if (total.err <= eps) return total;
        }
        n_cap <<= 1;
    }

    // tail model cannot certify eps below the cap: try extrapolation
    {
        std::vector<Partial> partials;
        CompensatedAccumulator acc2;
        long n = spec.n0;
        long mark = 64;
        while (mark * 2 <= max_terms) mark <<= 1;
        long first_mark = std::max<long>(64, mark >> 7);
        for (long m = first_mark; m <= mark; m <<= 1) {
            for (; n <= m; ++n) acc2.add(spec.term(n));
            partials.push_back({m, acc2.result().value});
        }
        if (partials.size() >= 6) {
            ExtendedReal est = extrapolate(partials, ExtrapolationModel::LogOverN);
            if (est.err <= eps) return est;
        }
    }
    throw precision_error("sum_series: requested eps unreachable at working precision");
}

// ---------------------------------------------------------------------------
// extrapolation

namespace {

DDouble basis_fn(ExtrapolationModel model, int stage, long n) {
    DDouble nn((double)n);
    if (model == ExtrapolationModel::InverseN)
        return powi(DDouble(1.0) / nn, stage);
    // LogOverN: lnN/N, 1/N, lnN/N^2, 1/N^2, ...
    int p = (stage + 1) / 2;
    DDouble v = powi(DDouble(1.0) / nn, p);
    if (stage % 2 == 1) v *= log(nn);
    return v;
}

ExtendedReal condense(std::span<const Partial> partials) {
    std::vector<DDouble> row;
    row.reserve(partials.size());
    for (const auto& p : partials) row.push_back(p.value);
    double spread = 0.0;
    while (row.size() > 1) {
        if (row.size() == 2) spread = std::abs((row[1] - row[0]).hi());
        for (size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = ldexp(row[i] + row[i + 1], -1);
        row.pop_back();
    }
    DDouble est = row[0];
    double err = 8.0 * spread + 16.0 * ddc::eps * std::abs(est.hi()) + 1e-300;
    return {est, err};
}

} // namespace

ExtendedReal extrapolate(std::span<const Partial> partials, ExtrapolationModel model) {
    if (partials.size() < 6)
        throw config_error("extrapolate requires at least 6 partial sums");

    if (model == ExtrapolationModel::Alternating) {
        // consecutive partial sums of an alternating series
        for (size_t i = 2; i < partials.size(); ++i) {
            DDouble d1 = partials[i].value - partials[i - 1].value;
            DDouble d0 = partials[i - 1].value - partials[i - 2].value;
            if (d1.hi() * d0.hi() > 0.0)
                throw diagnostic_error("extrapolate: partials not alternating");
        }
        return condense(partials);
    }

    double scale = std::abs(partials.back().value.hi()) + 1e-30;
    for (size_t i = 1; i < partials.size(); ++i) {
        if (partials[i].n <= partials[i - 1].n)
            throw config_error("extrapolate requires increasing N");
        if ((double)partials[i].n < 1.5 * (double)partials[i - 1].n)
            throw config_error("extrapolate requires geometrically spaced N");
    }
    // monotone approach check: differences should not flip sign materially
    int flips = 0;
    for (size_t i = 2; i < partials.size(); ++i) {
        double d1 = (partials[i].value - partials[i - 1].value).hi();
        double d0 = (partials[i - 1].value - partials[i - 2].value).hi();
        if (d1 * d0 < 0.0 && std::abs(d1) > 1e-24 * scale && std::abs(d0) > 1e-24 * scale)
            ++flips;
    }
    if (flips > 1)
        throw diagnostic_error("extrapolate: non-monotone convergence inconsistent with model");

    // E-algorithm: eliminate the model's basis functions exactly, one per stage
    const int count = (int)partials.size();
    const int stages = count - 1;
    std::vector<DDouble> E(count);
    std::vector<std::vector<DDouble>> g(count, std::vector<DDouble>(stages + 1));
    for (int n = 0; n < count; ++n) {
        E[n] = partials[n].value;
        for (int i = 1; i <= stages; ++i) g[n][i] = basis_fn(model, i, partials[n].n);
    }
    DDouble prev_apex = E[0];
    for (int k = 1; k <= stages; ++k) {
        prev_apex = E[0];
        for (int n = 0; n + k < count; ++n) {
            DDouble gk0 = g[n][k], gk1 = g[n + 1][k];
            DDouble denom = gk1 - gk0;
            if (denom.hi() == 0.0)
                throw diagnostic_error("extrapolate: degenerate basis sample");
            DDouble Enew = (E[n] * gk1 - E[n + 1] * gk0) / denom;
            for (int i = k + 1; i <= stages; ++i)
                g[n][i] = (g[n][i] * gk1 - g[n + 1][i] * gk0) / denom;
            E[n] = Enew;
        }
    }
    DDouble est = E[0];
    double err = 4.0 * std::abs((est - prev_apex).hi()) + 32.0 * ddc::eps * scale + 1e-300;
    return {est, err};
}

ExtendedReal alternating_sum(const std::function<DDouble(long)>& term, long n0,
                             long n_direct, int window) {
    CompensatedAccumulator acc;
    long n = n0;
    for (; n < n0 + n_direct; ++n) acc.add(term(n));
    std::vector<Partial> partials;
    DDouble run = acc.result().value;
    partials.push_back({n - 1, run});
    for (int k = 0; k < window; ++k, ++n) {
        run += term(n);
        partials.push_back({n, run});
    }
    ExtendedReal head = condense(partials);
    head.err += acc.result().err;
    return head;
}

} // namespace zetaforge::numerics
