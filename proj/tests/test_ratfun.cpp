#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "yq/ratfun.hpp"

using namespace yq;

static Mat rnd(int d, unsigned seed) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> U(-1, 1);
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = cplx(U(g), U(g));
    return m;
}

static RationalMatrixFunction sample_fn(int d, unsigned seed) {
    RationalMatrixFunction F(rnd(d, seed));
    F.add_pole_term(cplx(1.0, 0.5), 1, rnd(d, seed + 1));
    F.add_pole_term(cplx(1.0, 0.5), 2, rnd(d, seed + 2));
    F.add_pole_term(cplx(-0.7, 1.3), 1, rnd(d, seed + 3));
    return F;
}

TEST_CASE("product agrees with pointwise evaluation") {
    auto F = sample_fn(3, 11), G = sample_fn(3, 77);
    G.add_pole_term(cplx(2.5, -0.25), 1, rnd(3, 99));
    auto H = F * G;
    for (cplx u : {cplx(0.3, 2.2), cplx(-4.1, 0.2), cplx(7.0, 7.0), cplx(1.4, 0.4)}) {
        Mat want = F.eval(u) * G.eval(u);
        CHECK((H.eval(u) - want).norm() < 1e-10 * std::max(1.0, want.norm()));
    }
    // shared double poles multiply up to order 4
    CHECK(H.pole_order(cplx(1.0, 0.5)) == 4);
    CHECK(H.pole_order(cplx(-0.7, 1.3)) == 2);
    CHECK(H.pole_order(cplx(2.5, -0.25)) == 1);
}

TEST_CASE("laurent coefficients via quadrature cross-check") {
    auto F = sample_fn(2, 5);
    const cplx p(1.0, 0.5);
    auto L = F.laurent(p, -2, 2);
    for (int n = -2; n <= 2; ++n) {
        // (1/2 pi i) oint F(u) (u-p)^{-n-1} du = c_n
        auto f = [&](cplx u) { return Mat(F.eval(u) * std::pow(u - p, cplx(-n - 1))); };
        Mat got = contour_integral_quad(f, {p}, 0.35, 1e-12);
        CHECK((got - L[n + 2]).norm() < 1e-9);
    }
}

TEST_CASE("residue-sum contour integral matches quadrature") {
    auto F = sample_fn(3, 42);
    auto weight = [](cplx u, int k) -> cplx {
        // w(u) = u^3 and derivatives
        switch (k) {
            case 0: return u * u * u;
            case 1: return 3.0 * u * u;
            case 2: return 6.0 * u;
            case 3: return cplx(6.0);
            default: return 0.0;
        }
    };
    const std::vector<cplx> inside = {cplx(1.0, 0.5)};
    Mat res = contour_integral(F, inside, weight);
    auto f = [&](cplx u) { return Mat(F.eval(u) * (u * u * u)); };
    Mat quad = contour_integral_quad(f, inside, 0.4, 1e-11);
    CHECK((res - quad).norm() < 1e-8);
}

TEST_CASE("derivative and shift") {
    auto F = sample_fn(2, 31);
    auto dF = F.derivative();
    const cplx h(1e-5, 0.0);
    for (cplx u : {cplx(0.2, 1.9), cplx(-3.0, -1.0)}) {
        Mat fd = (F.eval(u + h) - F.eval(u - h)) / (2.0 * h);
        CHECK((dF.eval(u) - fd).norm() < 1e-6);
        CHECK((F.shifted(cplx(0.7, -0.1)).eval(u) - F.eval(u - cplx(0.7, -0.1))).norm() < 1e-12);
    }
}

TEST_CASE("scalar zero extraction") {
    // f(u) = (u - 2)(u + 1 - i) / ((u - i)(u + 3))
    ScalarRat f;
    f.constant = 1.0;
    const cplx z1(2, 0), z2(-1, 1), p1(0, 1), p2(-3, 0);
    // partial fractions: f = 1 + A/(u - p1) + B/(u - p2)
    auto num = [&](cplx u) { return (u - z1) * (u - z2); };
    const cplx A = num(p1) / (p1 - p2), B = num(p2) / (p2 - p1);
    f.poles.push_back({p1, {A}});
    f.poles.push_back({p2, {B}});
    auto roots = scalar_zeros(f);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    CHECK(std::abs(roots[0] - z2) < 1e-9);
    CHECK(std::abs(roots[1] - z1) < 1e-9);
}

TEST_CASE("star log of a diagonalizable rational function") {
    // F = Q diag((u-1)/(u-2), (u+3-i)/(u-i)) Q^{-1}
    Mat Q = rnd(2, 8);
    Mat Qi = Q.inverse();
    RationalMatrixFunction F(Mat::Identity(2, 2));
    // (u-1)/(u-2) = 1 + 1/(u-2); (u+3-i)/(u-i) = 1 + 3/(u-i)
    Mat E00 = Q.col(0) * Qi.row(0), E11 = Q.col(1) * Qi.row(1);
    F.add_pole_term(cplx(2, 0), 1, E00);
    F.add_pole_term(cplx(0, 1), 1, 3.0 * E11);
    auto sl = star_log(F, true);
    for (cplx u : {cplx(5.0, 3.0), cplx(-6.0, 1.0), cplx(0.5, -4.0)}) {
        Mat t = sl.eval_additive(u);
        // exponentiate through the shared basis
        Mat D = sl.Pinv * t * sl.P;
        for (int k = 0; k < 2; ++k) D(k, k) = std::exp(D(k, k));
        CHECK((sl.P * Mat(D.diagonal().asDiagonal()) * sl.Pinv - F.eval(u)).norm() < 1e-9);
    }
    // t(infinity) -> 0
    CHECK(sl.eval_additive(cplx(1e9, 1e9)).norm() < 1e-7);
    // log-derivative is the rational function xi' xi^{-1}
    auto ld = sl.log_derivative();
    const cplx u0(1.3, 2.4), h(1e-5, 0);
    Mat fd = (sl.eval_additive(u0 + h) - sl.eval_additive(u0 - h)) / (2.0 * h);
    CHECK((ld.eval(u0) - fd).norm() < 1e-6);
}

TEST_CASE("trig star log vanishes at origin and tracks ratios") {
    RationalMatrixFunction F(Mat::Identity(1, 1));
    // f(w) = (w - 4)/(w - (2+2i)) normalized below through H
    Mat one = Mat::Identity(1, 1);
    const cplx pole(2, 2);
    F.add_pole_term(pole, 1, (pole - 4.0) * one);
    auto sl = star_log(F, false);
    CHECK(sl.eval_trig(0.0).norm() < 1e-12);
    for (cplx w : {cplx(0.3, -0.7), cplx(-1.0, 0.4)}) {
        const cplx want = std::log(F.eval(w)(0, 0) / F.eval(0.0)(0, 0));
        CHECK(std::abs(sl.eval_trig(w)(0, 0) - want) < 1e-10);
    }
}

TEST_CASE("unipotent logarithm terminates and inverts") {
    // F = I + N/(u - a), N strictly upper triangular
    Mat N = Mat::Zero(3, 3);
    N(0, 1) = cplx(1.2, -0.3);
    N(1, 2) = cplx(0.4, 0.9);
    N(0, 2) = cplx(-0.5, 0.1);
    RationalMatrixFunction F(Mat::Identity(3, 3));
    const cplx a(1.5, -0.5);
    F.add_pole_term(a, 1, N);
    auto L = log_unipotent(F);
    for (cplx u : {cplx(3.0, 1.0), cplx(-0.4, 2.0)}) {
        Mat X = L.eval(u);
        Mat E = Mat::Identity(3, 3) + X + 0.5 * X * X + X * X * X / 6.0;
        CHECK((E - F.eval(u)).norm() < 1e-12);
    }
    CHECK_THROWS(log_unipotent(sample_fn(3, 3)));
}

TEST_CASE("pole merge tolerance") {
    RationalMatrixFunction F(Mat::Zero(2, 2));
    F.add_pole_term(cplx(1.0, 0.0), 1, Mat::Identity(2, 2));
    F.add_pole_term(cplx(1.0 + 1e-10, 0.0), 1, Mat::Identity(2, 2));
    CHECK(F.poles.size() == 1);
    F.add_pole_term(cplx(1.0 + 1e-6, 0.0), 1, Mat::Identity(2, 2));
    CHECK(F.poles.size() == 2);
}
