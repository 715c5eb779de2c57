#include "zetaforge/ddouble.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstring>

namespace zetaforge {

// ---------------------------------------------------------------------------
// decimal conversion

namespace {

// 10^k exact as DDouble for 0 <= k <= 44 (10^22 is the largest exact double).
DDouble pow10_exact(int k) {
    if (k <= 22)
        return DDouble(std::pow(10.0, k));
    return two_prod(1e22, std::pow(10.0, k - 22));
}

DDouble pow10_dd(int k) {
    if (k >= 0) {
        DDouble r(1.0);
        while (k > 44) {
            r *= pow10_exact(44);
            k -= 44;
        }
        return r * pow10_exact(k);
    }
    return DDouble(1.0) / pow10_dd(-k);
}

} // namespace

DDouble DDouble::from_string(std::string_view s) {
    size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("DDouble::from_string: bad literal \"" + std::string(s) + "\""); };
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');

    DDouble value(0.0);
    long long chunk = 0;
    int chunk_len = 0;
    int frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    auto flush = [&] {
        if (chunk_len > 0) {
            value = value * pow10_exact(chunk_len) + DDouble((double)chunk);
            chunk = 0;
            chunk_len = 0;
        }
    };
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            chunk = chunk * 10 + (c - '0');
            if (++chunk_len == 15) flush();
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else if (c == '.') {
            if (seen_dot) fail();
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            fail();
        }
    }
    flush();
    if (!seen_digit) fail();

    int exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size()) fail();
        for (; i < s.size(); ++i) {
            if (!std::isdigit((unsigned char)s[i])) fail();
            exp10 = exp10 * 10 + (s[i] - '0');
        }
        if (eneg) exp10 = -exp10;
    }
    value = value * pow10_dd(exp10 - frac_digits);
    return neg ? -value : value;
}

std::string DDouble::to_string(int digits) const {
    if (digits < 1) digits = 1;
    if (digits > 34) digits = 34;
    if (!std::isfinite(hi_)) return std::isnan(hi_) ? "nan" : (hi_ > 0 ? "inf" : "-inf");
    if (hi_ == 0.0 && lo_ == 0.0) return "0";

    DDouble a = fabs(*this);
    int e10 = (int)std::floor(std::log10(a.hi()));
    DDouble m = a * pow10_dd(-e10);
    if (m.hi() >= 10.0) { m = m / 10.0; ++e10; }
    if (m.hi() < 1.0) { m = m * 10.0; --e10; }

    std::string digs;
    digs.reserve(digits);
    for (int k = 0; k < digits; ++k) {
        int d = (int)floor(m).hi();
        if (d < 0) d = 0;
        if (d > 9) d = 9;
        digs.push_back(char('0' + d));
        m = (m - DDouble((double)d)) * 10.0;
    }

    std::string out;
    if (hi_ < 0) out.push_back('-');
    if (e10 >= -4 && e10 < digits) {
        if (e10 >= 0) {
            out.append(digs, 0, e10 + 1);
            if (e10 + 1 < digits) {
                out.push_back('.');
                out.append(digs, e10 + 1, std::string::npos);
            }
        } else {
            out.append("0.");
            out.append(-e10 - 1, '0');
            out.append(digs);
        }
    } else {
        out.push_back(digs[0]);
        if (digits > 1) {
            out.push_back('.');
            out.append(digs, 1, std::string::npos);
        }
        out.push_back('e');
        char buf[16];
        std::snprintf(buf, sizeof buf, "%+d", e10);
        out.append(buf);
    }
    return out;
}

// ---------------------------------------------------------------------------
// constants

namespace ddc {

DDouble pi() {
    static const DDouble v = DDouble::from_string(
        "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803");
    return v;
}

DDouble two_pi() {
    static const DDouble v = pi() * 2.0;
    return v;
}

DDouble half_pi() {
    static const DDouble v = pi() / 2.0;
    return v;
}

DDouble quarter_pi() {
    static const DDouble v = pi() / 4.0;
    return v;
}

DDouble ln2() {
    static const DDouble v = DDouble::from_string(
        "0.69314718055994530941723212145817656807550013436025525412068000949339362196969471560586332699641869");
    return v;
}

DDouble ln_two_pi() {
    static const DDouble v = log(two_pi());
    return v;
}

} // namespace ddc

// ---------------------------------------------------------------------------
// exp / log family

DDouble exp(DDouble x) {
    if (x.hi() > 709.0) throw std::overflow_error("DDouble exp overflow");
    if (x.hi() < -745.0) return DDouble(0.0);
    // x = k ln2 + r, exp(r) by Taylor after scaling r down by 2^5
    double kd = std::nearbyint(x.hi() / ddc::ln2().hi());
    DDouble r = x - ddc::ln2() * kd;
    r = ldexp(r, -5);
    // exp(r) - 1 via Taylor (|r| < 0.011)
    DDouble term = r;
    DDouble sum = r;
    for (int n = 2; n <= 16; ++n) {
        term = term * r / (double)n;
        sum += term;
        if (std::abs(term.hi()) < 1e-36) break;
    }
    // undo scaling: (1+s)^2 - 1 = s(2+s), five times
    for (int j = 0; j < 5; ++j)
        sum = sum * (sum + 2.0);
    return ldexp(sum + 1.0, (int)kd);
}

DDouble expm1(DDouble x) {
    if (std::abs(x.hi()) > 0.34) return exp(x) - 1.0;
    DDouble term = x;
    DDouble sum = x;
    for (int n = 2; n <= 30; ++n) {
        term = term * x / (double)n;
        sum += term;
        if (std::abs(term.hi()) < 1e-35 * std::abs(sum.hi()) || term.hi() == 0.0) break;
    }
    return sum;
}

DDouble log(DDouble x) {
    if (x.hi() <= 0.0) throw std::domain_error("DDouble log of non-positive value");
    // Newton on exp(y) = x from a double seed; one step squares the accuracy.
    DDouble y(std::log(x.hi()));
    y = y + x * exp(-y) - 1.0;
    y = y + x * exp(-y) - 1.0;
    return y;
}

DDouble log1p(DDouble x) {
    if (x.hi() <= -1.0) throw std::domain_error("DDouble log1p out of domain");
    // 1+x is exactly representable as a DDouble, so plain log keeps accuracy
    return log(DDouble(1.0) + x);
}

// ---------------------------------------------------------------------------
// trigonometric family

namespace {

// sin by Taylor, |x| <= pi/4
DDouble sin_taylor(DDouble x) {
    DDouble x2 = x * x;
    DDouble term = x;
    DDouble sum = x;
    for (int n = 3; n <= 33; n += 2) {
        term = -term * x2 / (double)(n * (n - 1));
        sum += term;
        if (std::abs(term.hi()) < 1e-36) break;
    }
    return sum;
}

// cos by Taylor, |x| <= pi/4
DDouble cos_taylor(DDouble x) {
    DDouble x2 = x * x;
    DDouble term(1.0);
    DDouble sum(1.0);
    for (int n = 2; n <= 34; n += 2) {
        term = -term * x2 / (double)(n * (n - 1));
        sum += term;
        if (std::abs(term.hi()) < 1e-36) break;
    }
    return sum;
}

// reduce x into r with x = (2 pi) q + (pi/2) m + r, |r| <= pi/4, m in {0,1,2,3}
void trig_reduce(DDouble x, DDouble& r, int& quadrant) {
    DDouble q = round_nearest(x / ddc::two_pi());
    DDouble rem = x - ddc::two_pi() * q;
    DDouble mq = round_nearest(rem / ddc::half_pi());
    int m = (int)mq.hi();
    r = rem - ddc::half_pi() * mq;
    quadrant = ((m % 4) + 4) % 4;
}

} // namespace

DDouble sin(DDouble x) {
    DDouble r;
    int m;
    trig_reduce(x, r, m);
    switch (m) {
        case 0: return sin_taylor(r);
        case 1: return cos_taylor(r);
        case 2: return -sin_taylor(r);
        default: return -cos_taylor(r);
    }
}

DDouble cos(DDouble x) {
    DDouble r;
    int m;
    trig_reduce(x, r, m);
    switch (m) {
        case 0: return cos_taylor(r);
        case 1: return -sin_taylor(r);
        case 2: return -cos_taylor(r);
        default: return sin_taylor(r);
    }
}

DDouble atan(DDouble x) {
    if (x.hi() < 0.0) return -atan(-x);
    if (x.hi() > 1.0) return ddc::half_pi() - atan(DDouble(1.0) / x);
    if (x.hi() == 0.0 && x.lo() == 0.0) return DDouble(0.0);
    // Euler's transformed series: atan(x) = sum_{n>=0} c_n x^{2n+1}/(1+x^2)^{n+1},
    // c_0 = 1, c_{n+1} = c_n * 2(n+1)/(2n+3); monotone terms, ratio <= 1/2.
    DDouble x2 = x * x;
    DDouble w = x2 / (x2 + 1.0);
    DDouble term = x / (x2 + 1.0);
    DDouble sum = term;
    for (int n = 0; n < 240; ++n) {
        term = term * w * (double)(2 * (n + 1)) / (double)(2 * n + 3);
        sum += term;
        if (std::abs(term.hi()) < 1e-34 * std::abs(sum.hi())) break;
    }
    return sum;
}

DDouble sinh(DDouble x) {
    if (std::abs(x.hi()) < 0.34) {
        DDouble e = expm1(x);
        // sinh = (e - e/(1+e))/2 keeps accuracy for small x
        return ldexp(e + e / (e + 1.0), -1);
    }
    DDouble e = exp(x);
    return ldexp(e - DDouble(1.0) / e, -1);
}

DDouble cosh(DDouble x) {
    DDouble e = exp(x);
    return ldexp(e + DDouble(1.0) / e, -1);
}

DDouble tanh(DDouble x) {
    if (std::abs(x.hi()) > 40.0) return DDouble(x.hi() > 0 ? 1.0 : -1.0);
    DDouble e = expm1(ldexp(x, 1));
    return e / (e + 2.0);
}

} // namespace zetaforge
