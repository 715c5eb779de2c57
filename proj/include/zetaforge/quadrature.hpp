#pragma once

// Adaptive quadrature for the corpus integrals: nested Gauss-Legendre pairs
// on subintervals, a tanh-sinh transform for flagged endpoint singularities,
// and half-period splitting with alternating condensation for the
// sin(ln t)-type oscillatory kernels.

#include "zetaforge/errors.hpp"
#include "zetaforge/extended_real.hpp"

#include <functional>

namespace zetaforge::quad {

using numerics::ExtendedReal;

/// Integrand rule.  Arguments: the abscissa t and its distances to the two
/// endpoints (t - a, b - t), both computed without cancellation so that
/// ln(1-t)-style singular factors stay accurate arbitrarily close to an
/// endpoint.  Semi-infinite integrands receive 0 for the upper distance.
using Integrand = std::function<DDouble(DDouble t, DDouble from_lo, DDouble to_hi)>;

/// Wrap a plain t -> f(t) rule.
Integrand plain(std::function<DDouble(DDouble)> f);

struct SingularityFlags {
    bool log_at_0 = false;        // integrable log singularity at the lower endpoint
    bool log_at_1 = false;        // ... at the upper endpoint
    bool removable_at_0 = false;  // finite limit; never evaluated exactly at 0
    bool oscillatory_log = false; // sin(ln t)/ln t kernel (or sin u/u after mapping)
};

struct IntegralSpec {
    Integrand integrand;
    enum class Domain { Finite, SemiInfinite } domain = Domain::Finite;
    DDouble lo{0.0};
    DDouble hi{1.0};   // ignored for SemiInfinite
    SingularityFlags flags;
};

/// Finite-domain integral: tanh-sinh when a log endpoint flag is set,
/// otherwise adaptive Gauss-Legendre.  Guarantees err <= eps or throws
/// (integrability_error on divergent refinement, precision_error when the
/// requested eps is below reach).
ExtendedReal integrate_finite(const IntegralSpec& spec, double eps = 1e-12);

/// Semi-infinite integral over (lo, inf).  The integrand must decay at least
/// exponentially beyond a finite point (checked; integrability_error on
/// detected non-decay) unless flags.oscillatory_log is set, in which case the
/// range is split at multiples of pi and the alternating segment series is
/// condensed.
ExtendedReal integrate_semi_infinite(const IntegralSpec& spec, double eps = 1e-12);

/// Oscillatory kernel route: spec.integrand holds only the bounded factor
/// g(t); the routine evaluates int_0^1 sin(ln t)/(t ln t) g(t) dt
/// = int_0^inf sin(u)/u g(e^-u) du by half-period splitting.  Set
/// flags.log_at_0 when g(t) is log-singular as t -> 1 (i.e. at u = 0).
/// Throws integrability_error when g grows unboundedly near t = 0.
ExtendedReal integrate_log_oscillatory(const IntegralSpec& spec, double eps = 1e-12);

} // namespace zetaforge::quad
