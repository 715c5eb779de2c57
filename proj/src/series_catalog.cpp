#include "zetaforge/series_catalog.hpp"

#include <memory>

namespace zetaforge::corpus {

using numerics::ExtendedReal;
using numerics::HarmonicSequence;
using numerics::SeriesKind;
using numerics::SeriesSpec;
using numerics::TailModel;
using numerics::TailPrimitive;

namespace {

using PK = TailPrimitive::Kind;

// coefficients built as dd fractions; a double literal would cap the whole
// tail at 1e-16 relative accuracy
TailPrimitive power(double s, int num, int den) {
    return {PK::Power, s, ExtendedReal(DDouble((double)num) / (double)den)};
}
TailPrimitive power(double s, ExtendedReal c) { return {PK::Power, s, c}; }
TailPrimitive harm(int j, int num, int den) {
    return {PK::HarmonicPower, (double)j, ExtendedReal(DDouble((double)num) / (double)den)};
}

// err accounts for cancellation: `scale` is the largest intermediate magnitude
ExtendedReal term_value(DDouble v, DDouble scale) {
    double e = 8.0 * ddc::eps * (std::abs(v.hi()) + std::abs(scale.hi())) + 1e-300;
    return {v, e};
}

DDouble dd_atanh_inv(long n) {
    // atanh(1/n) = (log1p(1/n) - log1p(-1/n)) / 2
    DDouble inv = DDouble(1.0) / (double)n;
    return ldexp(log1p(inv) - log1p(-inv), -1);
}

} // namespace

SeriesSpec series_log_ratio_corr() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long r) {
        DDouble inv = DDouble(1.0) / (double)r;
        DDouble v = -log1p(-inv) - ldexp(inv * inv, -1) - inv;
        return term_value(v, inv);
    };
    s.tail.basis = {power(3, 1, 3), power(4, 1, 4), power(5, 1, 5),
                    power(6, 1, 6), power(7, 1, 7), power(8, 1, 8)};
    s.tail.rem_coeff = 0.115;
    s.tail.rem_power = 9.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_inv_rm1_r3() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long r) {
        DDouble v = DDouble(1.0) / ((double)(r - 1) * powi(DDouble((double)r), 3));
        return term_value(v, v);
    };
    s.tail.basis = {power(4, 1, 1), power(5, 1, 1), power(6, 1, 1), power(7, 1, 1), power(8, 1, 1)};
    s.tail.rem_coeff = 1.02;
    s.tail.rem_power = 9.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_log_ratio_minus_inv() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long n) {
        DDouble inv = DDouble(1.0) / (double)n;
        return term_value(-log1p(-inv) - inv, inv);
    };
    s.tail.basis = {power(2, 1, 2), power(3, 1, 3), power(4, 1, 4),
                    power(5, 1, 5), power(6, 1, 6), power(7, 1, 7), power(8, 1, 8)};
    s.tail.rem_coeff = 0.115;
    s.tail.rem_power = 9.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_harmonic_log_kernel() {
    SeriesSpec s;
    s.n0 = 1;
    s.kind = SeriesKind::PositiveMonotone;
    auto hs = std::make_shared<HarmonicSequence>();
    s.term = [hs](long n) {
        DDouble inv = DDouble(1.0) / (double)n;
        DDouble h = hs->at(n);
        DDouble kernel = log1p(inv) - DDouble(1.0) / (double)(n + 1);
        return term_value(h * kernel, h * inv);
    };
    // kernel = sum_{k>=2} (-1)^k (1 - 1/k) n^-k
    s.tail.basis = {harm(2, 1, 2), harm(3, -2, 3), harm(4, 3, 4),
                    harm(5, -4, 5), harm(6, 5, 6), harm(7, -6, 7)};
    s.tail.rem_coeff = 1.0;
    s.tail.rem_power = 7.5;   // H_n n^-8 <= n^-7.5 for n >= 64
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_atanh_corr() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long l) {
        DDouble inv = DDouble(1.0) / (double)l;
        return term_value(dd_atanh_inv(l) - inv, inv);
    };
    s.tail.basis = {power(3, 1, 3), power(5, 1, 5), power(7, 1, 7), power(9, 1, 9)};
    s.tail.rem_coeff = 0.1;
    s.tail.rem_power = 11.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_inv_log_sym() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long l) {
        DDouble v = ldexp(dd_atanh_inv(l), 1) / (double)l;
        return term_value(v, v);
    };
    s.tail.basis = {power(2, 2, 1), power(4, 2, 3), power(6, 2, 5), power(8, 2, 7)};
    s.tail.rem_coeff = 0.23;
    s.tail.rem_power = 10.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_inv_atanh_corr() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long l) {
        DDouble inv = DDouble(1.0) / (double)l;
        return term_value((dd_atanh_inv(l) - inv) / (double)l, inv * inv);
    };
    s.tail.basis = {power(4, 1, 3), power(6, 1, 5), power(8, 1, 7)};
    s.tail.rem_coeff = 0.12;
    s.tail.rem_power = 10.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_harmonic_atanh_corr() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    auto hs = std::make_shared<HarmonicSequence>();
    s.term = [hs](long n) {
        DDouble kernel = dd_atanh_inv(n) - DDouble(1.0) / (double)n;
        DDouble h = hs->at(n - 1);
        return term_value(h * kernel, h / (double)n);
    };
    // H_{n-1} = H_n - 1/n against kernel = n^-3/3 + n^-5/5 + n^-7/7 + ...
    s.tail.basis = {harm(3, 1, 3), power(4, -1, 3), harm(5, 1, 5),
                    power(6, -1, 5), harm(7, 1, 7), power(8, -1, 7)};
    s.tail.rem_coeff = 0.5;
    s.tail.rem_power = 8.5;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_inv_log_up() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long n) {
        DDouble v = log1p(DDouble(1.0) / (double)n) / (double)n;
        return term_value(v, v);
    };
    s.tail.basis = {power(2, 1, 1), power(3, -1, 2), power(4, 1, 3), power(5, -1, 4),
                    power(6, 1, 5), power(7, -1, 6), power(8, 1, 7)};
    s.tail.rem_coeff = 0.13;
    s.tail.rem_power = 9.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_inv_log_down() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long n) {
        DDouble v = -log1p(-DDouble(1.0) / (double)n) / (double)n;
        return term_value(v, v);
    };
    s.tail.basis = {power(2, 1, 1), power(3, 1, 2), power(4, 1, 3), power(5, 1, 4),
                    power(6, 1, 5), power(7, 1, 6), power(8, 1, 7)};
    s.tail.rem_coeff = 0.13;
    s.tail.rem_power = 9.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_neg_log_corr() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::General;
    s.term = [](long n) {
        DDouble inv = DDouble(1.0) / (double)n;
        return term_value(-log1p(inv) + inv - ldexp(inv * inv, -1), inv);
    };
    // kernel = sum_{k>=3} (-1)^k n^-k / k
    s.tail.basis = {power(3, -1, 3), power(4, 1, 4), power(5, -1, 5),
                    power(6, 1, 6), power(7, -1, 7), power(8, 1, 8)};
    s.tail.rem_coeff = 0.115;
    s.tail.rem_power = 9.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_harmonic_neg_log_corr() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::General;
    auto hs = std::make_shared<HarmonicSequence>();
    s.term = [hs](long n) {
        DDouble inv = DDouble(1.0) / (double)n;
        DDouble kernel = -log1p(inv) + inv - ldexp(inv * inv, -1);
        DDouble h = hs->at(n - 1);
        return term_value(h * kernel, h * inv);
    };
    s.tail.basis = {harm(3, -1, 3), power(4, 1, 3), harm(4, 1, 4), power(5, -1, 4),
                    harm(5, -1, 5), power(6, 1, 5), harm(6, 1, 6), power(7, -1, 6)};
    s.tail.rem_coeff = 0.5;
    s.tail.rem_power = 6.5;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_psi_over_pow(int k) {
    if (k < 2) throw config_error("psi series requires k >= 2");
    SeriesSpec s;
    s.n0 = 1;
    s.kind = SeriesKind::General;
    auto hs = std::make_shared<HarmonicSequence>();
    const DDouble gamma = numerics::euler_gamma_em();
    s.term = [hs, gamma, k](long n) {
        DDouble psi = hs->at(n - 1) - gamma;   // psi(n) = H_{n-1} - gamma
        DDouble invk = powi(DDouble(1.0) / (double)n, k);
        return term_value(psi * invk, (hs->at(n - 1) + 1.0) * invk);
    };
    // psi(n) n^-k = H_n n^-k - n^-(k+1) - gamma n^-k, exactly
    s.tail.basis = {harm(k, 1, 1), power(k + 1, -1, 1),
                    power(k, ExtendedReal(-gamma, 1e-30))};
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_arccot_over_l() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::PositiveMonotone;
    s.term = [](long l) {
        DDouble v = atan(DDouble(1.0) / (double)l) / (double)l;
        return term_value(v, v);
    };
    s.tail.basis = {power(2, 1, 1), power(4, -1, 3), power(6, 1, 5), power(8, -1, 7)};
    s.tail.rem_coeff = 0.12;
    s.tail.rem_power = 10.0;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_harmonic_arccot_corr() {
    SeriesSpec s;
    s.n0 = 2;
    s.kind = SeriesKind::General;
    auto hs = std::make_shared<HarmonicSequence>();
    s.term = [hs](long n) {
        DDouble kernel = atan(DDouble(1.0) / (double)n) - DDouble(1.0) / (double)n;
        DDouble h = hs->at(n - 1);
        return term_value(h * kernel, h / (double)n);
    };
    // kernel = -n^-3/3 + n^-5/5 - n^-7/7 + ... against H_{n-1} = H_n - 1/n
    s.tail.basis = {harm(3, -1, 3), power(4, 1, 3), harm(5, 1, 5),
                    power(6, -1, 5), harm(7, -1, 7), power(8, 1, 7)};
    s.tail.rem_coeff = 0.5;
    s.tail.rem_power = 8.5;
    s.tail.valid_from = 64;
    return s;
}

SeriesSpec series_harmonic_arccot_diff() {
    SeriesSpec s;
    s.n0 = 1;
    s.kind = SeriesKind::PositiveMonotone;
    auto hs = std::make_shared<HarmonicSequence>();
    s.term = [hs](long l) {
        DDouble q = DDouble((double)l) * (double)(l + 1) + 1.0;   // l^2+l+1 (exact to 2^53)
        DDouble v = hs->at(l) * atan(DDouble(1.0) / q);
        return term_value(v, v);
    };
    // atan(1/(l^2+l+1)) = l^-2 - l^-3 + l^-5 - (4/3) l^-6 + O(l^-7)
    s.tail.basis = {harm(2, 1, 1), harm(3, -1, 1), harm(5, 1, 1)};
    s.tail.rem_coeff = 2.0;
    s.tail.rem_power = 5.5;
    s.tail.valid_from = 64;
    return s;
}

} // namespace zetaforge::corpus
