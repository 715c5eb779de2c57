#pragma once

// High-accuracy summation: compensated accumulation, analytic Euler-Maclaurin
// closure for power / log-power / harmonic-weighted tails, and sequence
// extrapolation as an independent cross-check route.

#include "zetaforge/errors.hpp"
#include "zetaforge/extended_real.hpp"

#include <functional>
#include <span>
#include <vector>

namespace zetaforge::numerics {

// ---------------------------------------------------------------------------
// compensated accumulation

/// Kahan-compensated accumulator over DDouble, tracking sum(|x|) for the
/// rounding bound and the inputs' own error bounds.
class CompensatedAccumulator {
public:
    void add(const ExtendedReal& x);
    void add(DDouble v) { add(ExtendedReal::exact(v)); }
    ExtendedReal result() const;
    long count() const { return count_; }

private:
    DDouble sum_{0.0};
    DDouble carry_{0.0};
    double abs_sum_ = 0.0;
    double err_in_ = 0.0;
    long count_ = 0;
};

/// Sum of a finite sequence, order-insensitive up to ~2 ulps of working
/// precision relative to sum(|terms|).  Empty input sums to exactly 0.
ExtendedReal compensated_sum(std::span<const ExtendedReal> terms);

// ---------------------------------------------------------------------------
// Euler-Maclaurin tails

/// sum_{k>=0} (x0+k)^{-s} (c2 ln^2 + c1 ln + c0)(x0+k) for s > 1, x0 > 1.
/// Bernoulli terms through B10; the B12 term bounds the remainder (in err).
ExtendedReal em_tail(DDouble s, DDouble x0, DDouble c2, DDouble c1, DDouble c0);

/// sum_{n>N} n^-s, s > 1, N >= 1.
ExtendedReal zeta_tail(double s, long n_last);
ExtendedReal zeta_tail(DDouble s, long n_last);

/// sum_{n>N} ln(n) n^-s, s > 1, N >= 3.
ExtendedReal log_zeta_tail(double s, long n_last);
ExtendedReal log_zeta_tail(DDouble s, long n_last);

/// sum_{n>N} H_n n^-sigma for real sigma > 1, via the harmonic-number
/// asymptotic expansion through the n^-4 term (remainder <= n^-6/252).
ExtendedReal harmonic_tail_real(DDouble sigma, long n_last);

/// sum_{n>N} H_n n^-j, integer j >= 2, N >= 10.
ExtendedReal harmonic_tail(int j, long n_last);

/// Euler's constant by Euler-Maclaurin on sum(1/k) - ln N (good to ~1e-30).
DDouble euler_gamma_em();

// ---------------------------------------------------------------------------
// series with modeled tails

enum class SeriesKind { PositiveMonotone, Alternating, General };

struct TailPrimitive {
    enum class Kind { Power, LogPower, HarmonicPower };
    Kind kind;
    double exponent;   // s > 1 for Power/LogPower; integer j >= 2 for HarmonicPower
    ExtendedReal coeff;
};

struct TailModel {
    std::vector<TailPrimitive> basis;
    long valid_from = 50;
    // |true tail(N) - basis tail(N)| <= rem_coeff * sum_{n>N} n^-rem_power
    double rem_coeff = 0.0;
    double rem_power = 0.0;

    void validate() const;
    ExtendedReal evaluate(long n_last) const;
};

struct SeriesSpec {
    std::function<ExtendedReal(long)> term;
    long n0 = 1;
    long n_end = -1;   // -1: infinite series (tail model required); else finite
    SeriesKind kind = SeriesKind::General;
    TailModel tail;
};

/// Direct terms up to an adaptively chosen N >= tail.valid_from, plus the
/// modeled tail; guarantees err <= eps or throws precision_error.
ExtendedReal sum_series(const SeriesSpec& spec, double eps, long max_terms = (1L << 24));

// ---------------------------------------------------------------------------
// extrapolation

enum class ExtrapolationModel { LogOverN, InverseN, Alternating };

struct Partial {
    long n;           // index of the last summed term
    DDouble value;    // partial sum through n
};

/// Richardson-style elimination of the declared leading error terms
/// (InverseN: 1/N, 1/N^2, ...; LogOverN: lnN/N, 1/N, lnN/N^2, ...) from
/// partial sums at geometrically spaced N.  Alternating expects consecutive
/// partial sums and applies iterated mean condensation.
ExtendedReal extrapolate(std::span<const Partial> partials, ExtrapolationModel model);

/// Sum of an alternating series given the signed term rule: direct terms up
/// to n_direct, then iterated-mean condensation over the following window.
ExtendedReal alternating_sum(const std::function<DDouble(long)>& term, long n0,
                             long n_direct = 48, int window = 24);

/// Incrementally tracked harmonic numbers H_n for sequential term rules.
class HarmonicSequence {
public:
    DDouble at(long n) {
        if (n < n_) { n_ = 0; h_ = DDouble(0.0); }
        while (n_ < n) { ++n_; h_ += DDouble(1.0) / (double)n_; }
        return h_;
    }

private:
    long n_ = 0;
    DDouble h_{0.0};
};

} // namespace zetaforge::numerics
