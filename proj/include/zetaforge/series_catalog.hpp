#pragma once

// Reusable series specifications for the identities in the verification
// catalog: each carries the exact term rule and an analytic tail model whose
// basis coefficients come from the term's asymptotic expansion.

#include "zetaforge/summation.hpp"

namespace zetaforge::corpus {

// sum_{r>=2} [ln(r/(r-1)) - 1/(2r^2) - 1/r]
numerics::SeriesSpec series_log_ratio_corr();

// sum_{r>=2} 1/((r-1) r^3)
numerics::SeriesSpec series_inv_rm1_r3();

// sum_{n>=2} [ln(n/(n-1)) - 1/n]
numerics::SeriesSpec series_log_ratio_minus_inv();

// sum_{n>=1} H_n [ln((n+1)/n) - 1/(n+1)]
numerics::SeriesSpec series_harmonic_log_kernel();

// sum_{l>=2} [atanh(1/l) - 1/l]   (atanh(1/l) = (1/2) ln((l+1)/(l-1)))
numerics::SeriesSpec series_atanh_corr();

// sum_{l>=2} (1/l) ln((l+1)/(l-1))
numerics::SeriesSpec series_inv_log_sym();

// sum_{l>=2} (1/l) [atanh(1/l) - 1/l]
numerics::SeriesSpec series_inv_atanh_corr();

// sum_{n>=2} H_{n-1} [atanh(1/n) - 1/n]
numerics::SeriesSpec series_harmonic_atanh_corr();

// sum_{n>=2} (1/n) ln((n+1)/n)
numerics::SeriesSpec series_inv_log_up();

// sum_{n>=2} (1/n) ln(n/(n-1))
numerics::SeriesSpec series_inv_log_down();

// sum_{n>=2} [ln(n/(n+1)) + 1/n - 1/(2n^2)]
numerics::SeriesSpec series_neg_log_corr();

// sum_{n>=2} H_{n-1} [ln(n/(n+1)) + 1/n - 1/(2n^2)]
numerics::SeriesSpec series_harmonic_neg_log_corr();

// sum_{n>=1} psi(n)/n^k = sum (H_{n-1} - gamma)/n^k, integer k >= 2
numerics::SeriesSpec series_psi_over_pow(int k);

// sum_{l>=2} arccot(l)/l
numerics::SeriesSpec series_arccot_over_l();

// sum_{n>=2} H_{n-1} (arccot(n) - 1/n)
numerics::SeriesSpec series_harmonic_arccot_corr();

// sum_{l>=1} H_l [arccot(l) - arccot(l+1)] = sum H_l atan(1/(l^2+l+1))
numerics::SeriesSpec series_harmonic_arccot_diff();

} // namespace zetaforge::corpus
