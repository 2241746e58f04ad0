#include <cmath>
#include <complex>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "yq/config.hpp"
#include "yq/diffeq.hpp"
#include "yq/special.hpp"

using namespace yq;
using namespace std::complex_literals;

namespace {
const double pi = 3.14159265358979323846;

RatioProduct balanced_ratio() {
    // zeros and poles with equal sums, so the 1/s term of the log vanishes
    RatioProduct rp;
    rp.push(cplx(0.4, 0.1), 1);
    rp.push(cplx(-0.9, 0.0), 1);
    rp.push(cplx(0.2, -0.3), -1);
    rp.push(cplx(-0.7, 0.4), -1);
    return rp;
}
}  // namespace

TEST_CASE("factored scalar: evaluation and expansion coefficients") {
    RatioProduct rp;
    rp.push(cplx(0.3, 0.2), 2);
    rp.push(cplx(-1.1, 0.4), -1);
    rp.push(cplx(0.6, -0.5), -1);
    CHECK(rp.degree() == 0);

    const cplx s(1.7, 0.9);
    const cplx direct = std::pow(s - cplx(0.3, 0.2), 2.0) /
                        ((s - cplx(-1.1, 0.4)) * (s - cplx(0.6, -0.5)));
    CHECK(std::abs(rp.eval(s) - direct) < 1e-13);
    CHECK(std::abs(std::exp(rp.log_eval(s)) - direct) < 1e-13);

    // log f(s) = c1/s + c2/s^2 + c3/s^3 + O(s^-4)
    const cplx big(9.0e4, 3.0e4);
    const cplx series = rp.c(1) / big + rp.c(2) / (big * big) + rp.c(3) / (big * big * big);
    CHECK(std::abs(rp.log_eval(big) - series) < 1e-15);
}

TEST_CASE("one-sided canonical products solve the difference equation") {
    const RatioProduct rp = balanced_ratio();
    CHECK(std::abs(rp.c(1)) < 1e-13);

    SUBCASE("complex step, no regularization needed") {
        const cplx delta(0.80, 0.45);
        const auto right = ScalarCanonical::from_ratio(rp, delta, Side::right, 400, 0);
        const auto left = ScalarCanonical::from_ratio(rp, delta, Side::left, 400);
        const cplx s(0.83, -0.41);
        // right product over s + n delta: value(s)/value(s+delta) = a(s)
        CHECK(std::abs(right.value_at(s) / right.value_at(s + delta) - rp.eval(s)) < 1e-10);
        // left product over s - n delta: value(s+delta)/value(s) = a(s)
        CHECK(std::abs(left.value_at(s + delta) / left.value_at(s) - rp.eval(s)) < 1e-10);
    }

    SUBCASE("unit step with nonzero residue term, gamma-regularized") {
        RatioProduct rq;
        rq.push(cplx(0.25, 0.15), 1);
        rq.push(cplx(-0.35, 0.05), -1);
        CHECK(std::abs(rq.c(1)) > 0.1);
        const auto right = ScalarCanonical::from_ratio(rq, 1.0, Side::right, 400, 0);
        const auto left = ScalarCanonical::from_ratio(rq, 1.0, Side::left, 400);
        const cplx s(0.62, 0.33);
        CHECK(std::abs(right.value_at(s) / right.value_at(s + 1.0) - rq.eval(s)) < 1e-9);
        CHECK(std::abs(left.value_at(s + 1.0) / left.value_at(s) - rq.eval(s)) < 1e-9);
    }
}

TEST_CASE("regularized half product reproduces the Weierstrass gamma product") {
    // with a(u) = (u+x)/u the products prod_{n>=1} a(u +- n) e^{-+x/n} at u = 0
    // collapse to the Weierstrass products for 1/Gamma(1 +- x)
    const cplx x(0.31, -0.24);
    RatioProduct rp;
    rp.push(-x, 1);
    rp.push(0.0, -1);
    CHECK(std::abs(rp.c(1) - x) < 1e-13);

    const auto gp = ScalarCanonical::from_ratio(rp, 1.0, Side::right, 400);
    const auto gm = ScalarCanonical::from_ratio(rp, 1.0, Side::left, 400);
    CHECK(std::abs(gp.log_at(0.0) + log_gamma(1.0 + x)) < 1e-9);
    CHECK(std::abs(gm.log_at(0.0) + log_gamma(1.0 - x)) < 1e-9);
}

TEST_CASE("fitted expansion coefficients match the exact ones") {
    const RatioProduct rp = balanced_ratio();
    const auto exact = ScalarCanonical::from_ratio(rp, 1.0, Side::right, 300, 0);
    const auto fit = ScalarCanonical::fitted([&rp](cplx s) { return rp.eval(s); },
                                             1.0, Side::right, 300, 0);
    const cplx s(1.2, 0.7);
    CHECK(std::abs(exact.log_at(s) - fit.log_at(s)) < 1e-8);
    CHECK(std::abs(fit.c1()) < 1e-9);
}

TEST_CASE("two-sided product equals the sine ratio") {
    const cplx A(0.35, 0.15), B(-0.22, 0.40);
    RatioProduct rp;
    rp.push(A, 1);
    rp.push(B, -1);
    for (const cplx u : {cplx(0.4, 0.3), cplx(-1.7, 0.2), cplx(0.05, -0.6)}) {
        const cplx lhs = std::exp(two_sided_log(rp, 300, u));
        const cplx rhs = std::sin(pi * (u - A)) / std::sin(pi * (u - B));
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("connection matrix of a two-dimensional module") {
    GlobalParams par;
    const cplx a(0.31, 0.27);
    const YangianRep V = ev_sl2(par, a);
    const NodeConnection nc = connection_matrix(V, 0, par.trunc_inner);
    REQUIRE(nc.dim == 2);

    SUBCASE("matches the sine-ratio closed form") {
        for (const cplx u : {cplx(0.2, 0.4), cplx(-0.8, -0.3), cplx(1.4, 0.1)}) {
            for (int k = 0; k < 2; ++k)
                CHECK(std::abs(nc.connection_scalar(k, u) - nc.sine_ratio(k, u)) < 1e-8);
        }
    }

    SUBCASE("matches the symmetric two-sided product") {
        const cplx u(0.45, -0.2);
        for (int k = 0; k < 2; ++k) {
            const cplx sym = std::exp(two_sided_log(nc.lam[k], par.trunc_twosided, u));
            CHECK(std::abs(nc.connection_scalar(k, u) - sym) < 1e-8);
        }
    }

    SUBCASE("one-periodicity and end limits") {
        const cplx u(0.7, 0.5);
        CHECK((nc.connection(u + 1.0) - nc.connection(u)).norm() < 1e-8);
        // limits at the two ends of the cylinder are mutually inverse and
        // exponential in the residue term of the eigenvalue
        for (int k = 0; k < 2; ++k) {
            const cplx c1 = nc.lam[k].c(1);
            const cplx top = nc.sine_ratio(k, cplx(0.3, 9.0));
            const cplx bot = nc.sine_ratio(k, cplx(0.3, -9.0));
            CHECK(std::abs(top - std::exp(-1.0i * pi * c1)) < 1e-10);
            CHECK(std::abs(top * bot - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("multiplicative canonical products solve the q-difference equation") {
    // regular with value 1 at both z = 0 and z = infinity
    const cplx alpha(1.3, 0.6), beta(-0.8, 1.1), k(2.3, -0.4);
    const auto a = [&](cplx z) {
        return (1.0 - z / alpha) / (1.0 - z / beta) *
               (1.0 - z / (beta * k)) / (1.0 - z / (alpha * k));
    };
    const cplx p(0.3, 0.1);
    const cplx z(0.9, -0.35);
    const cplx fp_z = qdiff_log_plus(a, p, z);
    const cplx fp_pz = qdiff_log_plus(a, p, p * z);
    CHECK(std::abs(std::exp(fp_pz - fp_z) - a(z)) < 1e-12);
    const cplx fm_z = qdiff_log_minus(a, p, z);
    const cplx fm_pz = qdiff_log_minus(a, p, p * z);
    CHECK(std::abs(std::exp(fm_pz - fm_z) - a(z)) < 1e-12);
}
