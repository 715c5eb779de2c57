#pragma once

// Special functions backing the identity corpus.  Every function has an
// evaluation route that does not pass through the corpus records it is
// checked against; domains reject non-positive arguments rather than
// continue analytically.

#include "zetaforge/constants.hpp"
#include "zetaforge/extended_real.hpp"

namespace zetaforge::specfun {

using numerics::ExtendedReal;

/// Riemann zeta, s > 1.  err <= 1e-25 for s >= 1.1.
ExtendedReal zeta(double s);
ExtendedReal zeta(DDouble s);

/// zeta(k) for integer k >= 2, memoized.
ExtendedReal zeta_int(int k);

/// Hurwitz zeta sum_{n>=0} (n+a)^-s, s > 1, a > 0.
ExtendedReal hurwitz_zeta(double s, double a);

/// d/ds zeta(s,a) = -sum ln(n+a) (n+a)^-s, s > 1, a > 0.
ExtendedReal hurwitz_zeta_deriv(double s, double a);

/// Dirichlet eta, s > 0: closed form via zeta for s > 1, alternating
/// condensation for 0 < s <= 1.
ExtendedReal dirichlet_eta(double s);

/// Polygamma psi^(j), x > 0.  j = 0 via shift + Stirling; j >= 1 via
/// (-1)^{j+1} j! zeta(j+1, x).
ExtendedReal polygamma(int j, double x);

/// H_n, exact to working precision; H_0 = 0.
ExtendedReal harmonic_number(long n);

/// Generalized first Stieltjes constant gamma_1(a), a > 0, by the limit
/// definition sum ln(k+a)/(k+a) - ln^2(m+a)/2 closed with Euler-Maclaurin.
ExtendedReal stieltjes_gamma1(double a);

/// Polylogarithm Li_k(t), integer k >= 1, |t| <= 1, (k,t) != (1,1).
/// The DDouble overload keeps full accuracy for t within 1e-300 of 1.
ExtendedReal polylog(int k, double t);
ExtendedReal polylog(int k, DDouble t);

/// Incomplete gamma Gamma(0,x) = int_x^inf e^-u/u du, x > 0.
ExtendedReal upper_gamma0(double x);

/// Entire companion: ein(x) = gamma + ln x + Gamma(0,x) (stable near 0).
ExtendedReal ein(DDouble x);

/// ln Gamma(x), x > 0, by recurrence shift + Stirling.
ExtendedReal log_gamma(double x);
ExtendedReal log_gamma(DDouble x);

/// Im ln Gamma(1+i) via complex upward recurrence + Stirling (kept off the
/// odd-zeta series so the corpus check against it stays non-circular).
ExtendedReal im_log_gamma_one_plus_i();

/// arccot by its descending series, x >= 1 (condensation near x = 1).
ExtendedReal arccot(DDouble x, long max_terms = 4000);
ExtendedReal arccot(double x, long max_terms = 4000);

} // namespace zetaforge::specfun
