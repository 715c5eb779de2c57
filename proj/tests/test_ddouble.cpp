#include "doctest.h"

#include "zetaforge/ddouble.hpp"

#include <cmath>
#include <random>

using namespace zetaforge;

namespace {
double dd_diff(DDouble a, DDouble b) { return std::abs((a - b).hi()); }
}

TEST_CASE("error-free transformations") {
    DDouble s = two_sum(1.0, 1e-20);
    CHECK(s.hi() == 1.0);
    CHECK(s.lo() == 1e-20);

    DDouble p = two_prod(1e8 + 1.0, 1e8 - 1.0);
    // (1e8+1)(1e8-1) = 1e16 - 1, exactly representable as hi+lo
    CHECK(p.hi() + p.lo() == 1e16 - 1.0);
}

TEST_CASE("basic arithmetic keeps ~30 digits") {
    DDouble third = DDouble(1.0) / 3.0;
    DDouble one = third * 3.0;
    CHECK(dd_diff(one, DDouble(1.0)) < 1e-31);

    DDouble x = DDouble::from_string("1.2345678901234567890123456789");
    DDouble y = x * x / x;
    CHECK(dd_diff(x, y) < 1e-30);
}

TEST_CASE("string round trip") {
    const char* s = "3.14159265358979323846264338327950288";
    DDouble x = DDouble::from_string(s);
    std::string out = x.to_string(33);
    CHECK(out.substr(0, 30) == std::string(s).substr(0, 30));

    CHECK(DDouble::from_string("-2.5e-3").hi() == doctest::Approx(-0.0025));
    CHECK(DDouble(0.0).to_string() == "0");
    CHECK_THROWS_AS(DDouble::from_string("abc"), std::invalid_argument);
}

TEST_CASE("floor handles the integral-hi corner") {
    CHECK(floor(DDouble(3.0, -1e-20)).hi() == 2.0);
    CHECK(floor(DDouble(3.0, 1e-20)).hi() == 3.0);
    CHECK(floor(DDouble(2.7)).hi() == 2.0);
    CHECK(floor(DDouble(-2.3)).hi() == -3.0);
}

TEST_CASE("exp and log agree with references") {
    // e = exp(1)
    DDouble e = exp(DDouble(1.0));
    DDouble e_ref = DDouble::from_string(
        "2.71828182845904523536028747135266249775724709369995957496696762772407663");
    CHECK(dd_diff(e, e_ref) < 1e-29);

    // ln 2 round trip through exp
    CHECK(dd_diff(exp(ddc::ln2()), DDouble(2.0)) < 1e-30);

    // log(exp(x)) == x over a spread of magnitudes
    for (double x : {-20.0, -1.0, -1e-8, 0.25, 1.0, 3.5, 40.0, 200.0}) {
        DDouble y = log(exp(DDouble(x)));
        CHECK(dd_diff(y, DDouble(x)) < 1e-28 * std::max(1.0, std::abs(x)));
    }

    CHECK_THROWS_AS(log(DDouble(-1.0)), std::domain_error);
    CHECK(dd_diff(log1p(DDouble(1e-25)), DDouble(1e-25)) < 1e-49);
    CHECK(dd_diff(expm1(DDouble(1e-25)), DDouble(1e-25)) < 1e-49);
}

TEST_CASE("trig values") {
    CHECK(dd_diff(sin(ddc::half_pi()), DDouble(1.0)) < 1e-30);
    CHECK(std::abs(sin(ddc::pi()).hi()) < 1e-30);
    CHECK(dd_diff(cos(ddc::pi()), DDouble(-1.0)) < 1e-30);

    // sin(pi/6) = 1/2
    CHECK(dd_diff(sin(ddc::pi() / 6.0), DDouble(0.5)) < 1e-30);

    // sin^2 + cos^2 = 1 at scattered points, including large arguments
    for (double x : {0.1, 0.7, 2.0, 10.0, 55.5, 120.0}) {
        DDouble s = sin(DDouble(x)), c = cos(DDouble(x));
        CHECK(dd_diff(s * s + c * c, DDouble(1.0)) < 1e-29);
    }
}

TEST_CASE("atan against Machin") {
    DDouble machin = 16.0 * atan(DDouble(1.0) / 5.0) - 4.0 * atan(DDouble(1.0) / 239.0);
    CHECK(dd_diff(machin, ddc::pi()) < 1e-29);
    CHECK(dd_diff(atan(DDouble(1.0)), ddc::quarter_pi()) < 1e-30);
    CHECK(dd_diff(atan(DDouble(-1.0)), -ddc::quarter_pi()) < 1e-30);
    // atan(x) + atan(1/x) = pi/2 for x > 0
    DDouble x(3.7);
    CHECK(dd_diff(atan(x) + atan(DDouble(1.0) / x), ddc::half_pi()) < 1e-30);
}

TEST_CASE("hyperbolics and sqrt") {
    DDouble x(0.3);
    CHECK(dd_diff(cosh(x) * cosh(x) - sinh(x) * sinh(x), DDouble(1.0)) < 1e-30);
    CHECK(dd_diff(tanh(x), sinh(x) / cosh(x)) < 1e-30);
    CHECK(dd_diff(sqrt(DDouble(2.0)) * sqrt(DDouble(2.0)), DDouble(2.0)) < 1e-30);
    CHECK(dd_diff(powi(DDouble(3.0), 7), DDouble(2187.0)) < 1e-27);
    CHECK(dd_diff(powi(DDouble(2.0), -3), DDouble(0.125)) < 1e-33);
}

TEST_CASE("pow via exp log") {
    DDouble r = pow(DDouble(2.0), DDouble(0.5));
    CHECK(dd_diff(r, sqrt(DDouble(2.0))) < 1e-30);
    DDouble z = inv_pow(7, DDouble(2.0));
    CHECK(dd_diff(z, DDouble(1.0) / 49.0) < 1e-31);
}
