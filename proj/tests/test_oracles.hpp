#pragma once

// Small independent oracles used by the test suites: compensated double
// summation, composite Simpson quadrature, and exact harmonic recurrences.
// These deliberately avoid the library's own summation/quadrature paths.

#include <cmath>
#include <functional>

namespace oracle {

struct KahanDouble {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// composite Simpson on [a,b] with n panels (n even)
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    double h = (b - a) / n;
    KahanDouble acc;
    acc.add(f(a));
    acc.add(f(b));
    for (int i = 1; i < n; ++i) acc.add(f(a + i * h) * (i % 2 ? 4.0 : 2.0));
    return acc.value() * h / 3.0;
}

inline constexpr double euler_gamma = 0.5772156649015328606;

} // namespace oracle
