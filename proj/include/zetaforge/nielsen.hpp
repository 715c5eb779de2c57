#pragma once

// Partial-summation (Abel) representations of zeta/eta/Hurwitz/polygamma
// values, and the harmonic remainder function xi with its series, integral,
// and mean-value routes.  These are evaluated as stated, not algebraically
// undone, so the corpus can compare them against the direct routes.

#include "zetaforge/extended_real.hpp"

#include <vector>

namespace zetaforge::nielsen {

using numerics::ExtendedReal;

enum class SbpKind {
    ZetaSbp,          // (s):   zeta(s+1) = sum H_r (r^-s - (r+1)^-s)
    EtaSbp,           // (s):   (1-2^-s) zeta(s+1) = sum (-1)^{r+1} H_r (r^-s + (r+1)^-s)
    HurwitzSbp,       // (s,a): zeta(s+1,a) = sum [psi(a+r+1)-psi(a)] ((r+a)^-s - (r+a+1)^-s)
    DigammaSbp,       // (x):   psi(x) = -gamma - 1/x + x sum H_k (1/(x+k) - 1/(x+k+1))
    TrigammaSbp,      // (x):   psi'(x) via the two harmonic sums
    PolygammaSbp,     // (j,x): psi^(j)(x) via the two harmonic sums, j >= 2
    HurwitzDerivSbp,  // (s,a): zeta'(s+1,a) = sum [psi(a+r+1)-psi(a)] (ln(w+1)/(w+1)^s - ln w/w^s)
};

/// Arity by kind: (s) | (s) | (s,a) | (x) | (x) | (j,x) | (s,a).
/// Requires s > 0, a > 0, x > 0, integer j >= 2.  err <= 1e-15.
ExtendedReal sbp_eval(SbpKind kind, const std::vector<double>& params);

/// xi(x) = sum_{n>=1} H_n (1/(x+n) - 1/(n+1)), x not a negative integer.
ExtendedReal xi_series(double x);

/// xi(x) = int_0^1 (u^{x-1} - 1) ln(1-u)/(u-1) du, x > 0.
ExtendedReal xi_integral(double x);

/// -int_0^inf [1/t + 1/(1-e^t)] ln(1-e^-t) dt (equals the mean of xi on (0,1)).
ExtendedReal xi_mean_exp_integral();

struct XiMean {
    ExtendedReal closed;     // (1/2)[zeta(2) - gamma^2 - 2 gamma1]
    ExtendedReal series;     // sum H_n [ln((n+1)/n) - 1/(n+1)]
    ExtendedReal integral;   // int_0^1 [1/(u ln u) - 1/(u-1)] ln(1-u) du
    double max_pairwise_residual;
};

/// int_0^1 xi(x) dx by three independent routes with pairwise residuals.
XiMean xi_mean();

} // namespace zetaforge::nielsen
