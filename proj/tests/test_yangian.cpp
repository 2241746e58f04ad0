#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yq/drinfeld.hpp"

using namespace yq;

static GlobalParams par;  // hbar = 0.2 + 0.3i

TEST_CASE("rank-1 evaluation representation satisfies the field relations") {
    auto V = ev_sl2(par, cplx(0.31, 0.17));
    auto rep = verify_relations(V);
    CHECK(rep.max_residual < 1e-10);
}

TEST_CASE("low modes of the evaluation representation") {
    const cplx a(0.31, 0.17);
    auto V = ev_sl2(par, a);
    Mat xi0 = V.xi0(0);
    CHECK(std::abs(xi0(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(xi0(1, 1) + 1.0) < 1e-12);
    CHECK(std::abs(xi0(0, 1)) < 1e-12);
    Mat xi1 = V.mode_xi(0, 1);
    CHECK(std::abs(xi1(0, 0) - a) < 1e-12);
    Mat xp0 = V.mode_xp(0, 0);
    CHECK(std::abs(xp0(0, 1) - 1.0) < 1e-12);
    CHECK(std::abs(xp0.norm() - 1.0) < 1e-12);
}

TEST_CASE("field reconstruction from low modes") {
    const cplx a(-0.42, 0.23);
    auto V = ev_sl2(par, a);
    // t_{i,1} = xi_{i,1} - (hbar/2) xi_{i,0}^2
    Mat xi0 = V.xi0(0), xi1 = V.mode_xi(0, 1);
    Mat t1 = xi1 - 0.5 * par.hbar * xi0 * xi0;
    auto W = from_low_modes(V.cartan, par, {xi0}, {t1}, {V.mode_xp(0, 0)}, {V.mode_xm(0, 0)});
    for (cplx u : {cplx(2.0, 1.0), cplx(-1.3, 0.8), cplx(0.4, -2.2)}) {
        CHECK((W.xi[0].eval(u) - V.xi[0].eval(u)).norm() < 1e-10);
        CHECK((W.xp[0].eval(u) - V.xp[0].eval(u)).norm() < 1e-10);
        CHECK((W.xm[0].eval(u) - V.xm[0].eval(u)).norm() < 1e-10);
    }
    CHECK(verify_relations(W).max_residual < 1e-10);
}

TEST_CASE("shift automorphism and spectral support") {
    const cplx a(0.11, -0.06), b(1.37, 0.52);
    auto V = ev_sl2(par, a);
    auto W = shift_rep(V, b);
    for (cplx u : {cplx(3.0, 1.0), cplx(-2.0, 2.0)})
        CHECK((W.xi[0].eval(u) - V.xi[0].eval(u - b)).norm() < 1e-12);
    auto s = spectral_support(V);
    REQUIRE(s.size() == 3);
    for (cplx want : {a, a - par.hbar, a + par.hbar}) {
        bool found = false;
        for (auto& p : s) found |= std::abs(p - want) < 1e-8;
        CHECK(found);
    }
}

TEST_CASE("noncongruence predicate") {
    auto V1 = ev_sl2(par, cplx(0.2, 0.4));
    auto V2 = ev_sl2(par, cplx(0.2, 0.4) + cplx(2.0, 0.0));  // integer translate
    auto V3 = ev_sl2(par, cplx(-0.37, 0.81));
    CHECK(is_noncongruent({&V1}));
    CHECK_FALSE(is_noncongruent({&V1, &V2}));
    CHECK(is_noncongruent({&V1, &V3}));
}

TEST_CASE("shifted tensor product of evaluation representations") {
    auto V1 = ev_sl2(par, cplx(0.21, 0.43));
    auto V2 = ev_sl2(par, cplx(-0.34, 0.12));
    const cplx s(2.2, 0.7);
    auto W = ytensor(V1, V2, s);
    CHECK(W.dim == 4);
    auto rep = verify_relations(W);
    INFO("worst relation: ", rep.items.front().first);
    CHECK(rep.max_residual < 1e-8);

    // support containment: poles of the product fields lie in (s + sigma1) u sigma2
    auto sup = spectral_support(W);
    for (auto& p : sup) {
        bool ok = false;
        for (auto& q : V1.sigma) ok |= std::abs(p - q - s) < 1e-7;
        for (auto& q : V2.sigma) ok |= std::abs(p - q) < 1e-7;
        CHECK(ok);
    }

    // diagonal field factorizes through both legs
    Mat xi0W = W.xi0(0);
    Mat want = kron(V1.xi0(0), Mat::Identity(2, 2)) + kron(Mat::Identity(2, 2), V2.xi0(0));
    CHECK((xi0W - want).norm() < 1e-9);
}

TEST_CASE("tensor product rejects colliding supports") {
    auto V1 = ev_sl2(par, cplx(0.0, 0.0));
    auto V2 = ev_sl2(par, cplx(1.5, 0.0));
    CHECK_THROWS(ytensor(V1, V2, cplx(1.5, 0.0)));
    CHECK_THROWS(ytensor(V1, V2, cplx(1.5, 0.0) - par.hbar));
    CHECK_NOTHROW(ytensor(V1, V2, cplx(0.9, 1.1)));
}

TEST_CASE("associativity of the shifted tensor product") {
    auto V1 = ev_sl2(par, cplx(0.15, 0.22));
    auto V2 = ev_sl2(par, cplx(-0.41, 0.05));
    auto V3 = ev_sl2(par, cplx(0.33, -0.27));
    double defect = check_associativity(V1, V2, V3, cplx(2.4, 0.6), cplx(-2.1, 1.3));
    CHECK(defect < 1e-8);
    // and the triple product still satisfies the relations
    auto W = ytensor(ytensor(V1, V2, cplx(2.4, 0.6)), V3, cplx(-2.1, 1.3));
    CHECK(W.dim == 8);
    CHECK(verify_relations(W, 4).max_residual < 1e-8);
}
