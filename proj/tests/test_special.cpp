#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yq/special.hpp"

using namespace yq;

static const double pi = 3.14159265358979323846;

TEST_CASE("log_gamma known values") {
    CHECK(std::abs(log_gamma(1.0) - 0.0) < 1e-13);
    CHECK(std::abs(log_gamma(2.0) - 0.0) < 1e-13);
    CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-12);
    CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(pi)) < 1e-13);
    // |Gamma(1 + i t)|^2 = pi t / sinh(pi t)
    const double t = 0.7;
    const cplx g = gamma_fn(cplx(1.0, t));
    CHECK(std::abs(std::norm(g) - pi * t / std::sinh(pi * t)) < 1e-12);
}

TEST_CASE("functional equations at complex arguments") {
    for (cplx z : {cplx(0.3, 1.2), cplx(-2.4, 0.7), cplx(5.5, -3.0), cplx(0.2, 0.3)}) {
        CHECK(std::abs(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)) < 1e-11);
        CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-11);
        CHECK(std::abs(trigamma(z + 1.0) - trigamma(z) + 1.0 / (z * z)) < 1e-11);
    }
}

TEST_CASE("digamma and trigamma anchors") {
    CHECK(std::abs(digamma(1.0) + euler_gamma) < 1e-13);
    CHECK(std::abs(trigamma(1.0) - pi * pi / 6) < 1e-12);
    // digamma(1/2) = -gamma - 2 log 2
    CHECK(std::abs(digamma(0.5) + euler_gamma + 2 * std::log(2.0)) < 1e-12);
    // trigamma tail: sum_{n>N} 1/(n+x)^2 = trigamma(N+1+x)
    const cplx x(0.25, 0.4);
    cplx s = 0.0;
    for (int n = 11; n < 200000; ++n) s += 1.0 / ((double(n) + x) * (double(n) + x));
    CHECK(std::abs(s - trigamma(11.0 + x)) < 1e-5);
    // digamma difference: sum_{n>N} [1/n - 1/(n+x)] = digamma(N+1+x) - digamma(N+1)
    cplx d = 0.0;
    for (int n = 11; n < 200000; ++n) d += 1.0 / double(n) - 1.0 / (double(n) + x);
    CHECK(std::abs(d - (digamma(11.0 + x) - digamma(11.0))) < 1e-5);
}

TEST_CASE("higher polygamma values") {
    // finite-difference cross-checks, including reflected arguments
    const double h = 1e-4;
    for (const cplx z : {cplx(3.3, 1.2), cplx(-2.4, 0.7), cplx(0.2, -0.9)}) {
        const cplx fd3 = (trigamma(z + h) - trigamma(z - h)) / (2.0 * h);
        CHECK(std::abs(tetragamma(z) - fd3) < 1e-6 * (1.0 + std::abs(fd3)));
        const cplx fd4 = (tetragamma(z + h) - tetragamma(z - h)) / (2.0 * h);
        CHECK(std::abs(pentagamma(z) - fd4) < 1e-6 * (1.0 + std::abs(fd4)));
    }
    // exact value: psi'''(1) = pi^4 / 15
    const double pi = 3.14159265358979323846;
    CHECK(std::abs(pentagamma(1.0) - pi * pi * pi * pi / 15.0) < 1e-12);
}
