#pragma once

// ExtendedReal: a working-precision value (DDouble, ~31 decimal digits)
// bundled with an absolute error bound.  Arithmetic propagates the bounds
// sub-additively plus a rounding term of a few DDouble ulps.

#include "zetaforge/ddouble.hpp"

#include <cmath>
#include <stdexcept>

namespace zetaforge::numerics {

struct ExtendedReal {
    DDouble value{0.0};
    double err = 0.0;

    ExtendedReal() = default;
    ExtendedReal(DDouble v, double e) : value(v), err(e) {}
    explicit ExtendedReal(DDouble v) : value(v), err(rounding(v)) {}
    explicit ExtendedReal(double v) : value(v), err(0.0) {}

    static ExtendedReal exact(DDouble v) { return ExtendedReal(v, 0.0); }

    /// a couple of ulps of v at DDouble precision
    static double rounding(DDouble v) {
        return 2.0 * (std::abs(v.hi()) * ddc::eps) + 1e-300;
    }

    double to_double() const { return value.to_double(); }
    bool is_finite() const { return value.is_finite() && std::isfinite(err); }
};

inline ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
    DDouble v = a.value + b.value;
    return {v, a.err + b.err + ExtendedReal::rounding(v)};
}

inline ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) {
    DDouble v = a.value - b.value;
    return {v, a.err + b.err + ExtendedReal::rounding(v)};
}

inline ExtendedReal operator-(const ExtendedReal& a) { return {-a.value, a.err}; }

inline ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b) {
    DDouble v = a.value * b.value;
    double err = std::abs(a.value.hi()) * b.err + std::abs(b.value.hi()) * a.err +
                 a.err * b.err + ExtendedReal::rounding(v);
    return {v, err};
}

inline ExtendedReal operator*(double s, const ExtendedReal& a) {
    DDouble v = a.value * s;
    return {v, std::abs(s) * a.err + ExtendedReal::rounding(v)};
}

inline ExtendedReal operator/(const ExtendedReal& a, const ExtendedReal& b) {
    if (b.value.hi() == 0.0) throw std::domain_error("ExtendedReal division by zero");
    DDouble v = a.value / b.value;
    double bb = std::abs(b.value.hi());
    double err = (a.err + std::abs(v.hi()) * b.err) / bb + ExtendedReal::rounding(v);
    return {v, err};
}

inline ExtendedReal& operator+=(ExtendedReal& a, const ExtendedReal& b) { return a = a + b; }
inline ExtendedReal& operator-=(ExtendedReal& a, const ExtendedReal& b) { return a = a - b; }

} // namespace zetaforge::numerics
