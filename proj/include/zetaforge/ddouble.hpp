#pragma once

// Double-word ("double-double") arithmetic: a value is kept as an unevaluated
// sum hi + lo of two doubles, giving ~106 mantissa bits (~31 decimal digits).
// The error-free transformations (two_sum, two_prod) are the standard ones;
// see M. Joldes et al., ACM TOMS 44 (2018) for the operation error bounds.
//
// Requires IEEE double semantics: build with fp-contract disabled.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetaforge {

class DDouble {
public:
    constexpr DDouble() = default;
    constexpr DDouble(double x) : hi_(x), lo_(0.0) {}

    /// Caller must guarantee |lo| <= ulp(hi)/2.
    constexpr DDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

    constexpr double hi() const { return hi_; }
    constexpr double lo() const { return lo_; }
    constexpr double to_double() const { return hi_; }

    static DDouble from_sum(double a, double b);       // exact a+b
    static DDouble from_product(double a, double b);   // exact a*b

    bool is_finite() const { return std::isfinite(hi_) && std::isfinite(lo_); }

    /// Parse a decimal string ("-1.2345e-6"); accurate to ~1 ulp of DDouble.
    static DDouble from_string(std::string_view s);

    /// Fixed-significand decimal rendering, `digits` significant digits.
    std::string to_string(int digits = 31) const;

private:
    double hi_ = 0.0;
    double lo_ = 0.0;
};

// ---------------------------------------------------------------------------
// error-free transformations

inline DDouble quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    double err = b - (s - a);
    return DDouble(s, err);
}

inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return DDouble(s, err);
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return DDouble(p, err);
}

inline DDouble DDouble::from_sum(double a, double b) { return two_sum(a, b); }
inline DDouble DDouble::from_product(double a, double b) { return two_prod(a, b); }

// ---------------------------------------------------------------------------
// arithmetic

inline DDouble operator+(DDouble a, double b) {
    DDouble s = two_sum(a.hi(), b);
    double lo = s.lo() + a.lo();
    return quick_two_sum(s.hi(), lo);
}

inline DDouble operator+(double a, DDouble b) { return b + a; }

inline DDouble operator+(DDouble a, DDouble b) {
    DDouble s = two_sum(a.hi(), b.hi());
    DDouble t = two_sum(a.lo(), b.lo());
    double c = s.lo() + t.hi();
    DDouble v = quick_two_sum(s.hi(), c);
    double w = t.lo() + v.lo();
    return quick_two_sum(v.hi(), w);
}

inline DDouble operator-(DDouble a) { return DDouble(-a.hi(), -a.lo()); }
inline DDouble operator-(DDouble a, double b) { return a + (-b); }
inline DDouble operator-(double a, DDouble b) { return a + (-b); }
inline DDouble operator-(DDouble a, DDouble b) { return a + (-b); }

inline DDouble operator*(DDouble a, double b) {
    DDouble p = two_prod(a.hi(), b);
    double lo = std::fma(a.lo(), b, p.lo());
    return quick_two_sum(p.hi(), lo);
}

inline DDouble operator*(double a, DDouble b) { return b * a; }

inline DDouble operator*(DDouble a, DDouble b) {
    DDouble p = two_prod(a.hi(), b.hi());
    double t = a.lo() * b.lo();
    t = std::fma(a.hi(), b.lo(), t);
    t = std::fma(a.lo(), b.hi(), t);
    double lo = p.lo() + t;
    return quick_two_sum(p.hi(), lo);
}

inline DDouble operator/(DDouble a, double b) {
    double q1 = a.hi() / b;
    DDouble p = two_prod(q1, b);
    double dh = a.hi() - p.hi();
    double dl = (dh - p.lo()) + a.lo();
    double q2 = dl / b;
    return quick_two_sum(q1, q2);
}

inline DDouble operator/(DDouble a, DDouble b) {
    double q1 = a.hi() / b.hi();
    DDouble r = a - q1 * b;
    double q2 = r.hi() / b.hi();
    r = r - q2 * b;
    double q3 = r.hi() / b.hi();
    DDouble q = quick_two_sum(q1, q2);
    return q + q3;
}

inline DDouble operator/(double a, DDouble b) { return DDouble(a) / b; }

inline DDouble& operator+=(DDouble& a, DDouble b) { return a = a + b; }
inline DDouble& operator-=(DDouble& a, DDouble b) { return a = a - b; }
inline DDouble& operator*=(DDouble& a, DDouble b) { return a = a * b; }
inline DDouble& operator/=(DDouble& a, DDouble b) { return a = a / b; }
inline DDouble& operator+=(DDouble& a, double b) { return a = a + b; }
inline DDouble& operator-=(DDouble& a, double b) { return a = a - b; }
inline DDouble& operator*=(DDouble& a, double b) { return a = a * b; }
inline DDouble& operator/=(DDouble& a, double b) { return a = a / b; }

inline bool operator==(DDouble a, DDouble b) { return a.hi() == b.hi() && a.lo() == b.lo(); }
inline bool operator!=(DDouble a, DDouble b) { return !(a == b); }
inline bool operator<(DDouble a, DDouble b) {
    return a.hi() < b.hi() || (a.hi() == b.hi() && a.lo() < b.lo());
}
inline bool operator>(DDouble a, DDouble b) { return b < a; }
inline bool operator<=(DDouble a, DDouble b) { return !(b < a); }
inline bool operator>=(DDouble a, DDouble b) { return !(a < b); }

inline bool operator<(DDouble a, double b) { return a < DDouble(b); }
inline bool operator>(DDouble a, double b) { return a > DDouble(b); }
inline bool operator<=(DDouble a, double b) { return a <= DDouble(b); }
inline bool operator>=(DDouble a, double b) { return a >= DDouble(b); }
inline bool operator==(DDouble a, double b) { return a == DDouble(b); }

// ---------------------------------------------------------------------------
// basic functions

inline DDouble fabs(DDouble a) { return a.hi() < 0.0 || (a.hi() == 0.0 && a.lo() < 0.0) ? -a : a; }

inline DDouble ldexp(DDouble a, int n) {
    return DDouble(std::ldexp(a.hi(), n), std::ldexp(a.lo(), n));
}

inline DDouble floor(DDouble a) {
    double fh = std::floor(a.hi());
    if (fh != a.hi())
        return DDouble(fh);
    // hi is integral: the fractional information lives in lo
    double fl = std::floor(a.lo());
    return two_sum(fh, fl);
}

inline DDouble round_nearest(DDouble a) { return floor(a + DDouble(0.5)); }

inline DDouble sqrt(DDouble a) {
    if (a.hi() == 0.0) return DDouble(0.0);
    if (a.hi() < 0.0) throw std::domain_error("DDouble sqrt of negative value");
    double x = 1.0 / std::sqrt(a.hi());
    double ax = a.hi() * x;
    DDouble diff = a - two_prod(ax, ax);
    return two_sum(ax, diff.hi() * (x * 0.5));
}

/// Integer power by repeated squaring.
inline DDouble powi(DDouble a, long long n) {
    if (n == 0) return DDouble(1.0);
    bool inv = n < 0;
    unsigned long long m = inv ? (unsigned long long)(-n) : (unsigned long long)n;
    DDouble base = a, acc = DDouble(1.0);
    while (m) {
        if (m & 1ull) acc *= base;
        m >>= 1;
        if (m) base *= base;
    }
    return inv ? DDouble(1.0) / acc : acc;
}

// ---------------------------------------------------------------------------
// constants (parsed once from decimal strings)

namespace ddc {
DDouble pi();
DDouble two_pi();
DDouble half_pi();
DDouble quarter_pi();
DDouble ln2();
DDouble ln_two_pi();
/// 2^-104, roughly one unit in the last place of a normalized DDouble
inline constexpr double eps = 4.930380657631324e-32;
} // namespace ddc

// ---------------------------------------------------------------------------
// elementary transcendental functions

DDouble exp(DDouble x);
DDouble expm1(DDouble x);
DDouble log(DDouble x);
DDouble log1p(DDouble x);
DDouble sin(DDouble x);
DDouble cos(DDouble x);
DDouble atan(DDouble x);
DDouble sinh(DDouble x);
DDouble cosh(DDouble x);
DDouble tanh(DDouble x);

/// x^y for x > 0.
inline DDouble pow(DDouble x, DDouble y) { return exp(y * log(x)); }

/// n^-s for integer n >= 1 and real dd exponent s.
inline DDouble inv_pow(long long n, DDouble s) { return exp(-s * log(DDouble((double)n))); }

} // namespace zetaforge
