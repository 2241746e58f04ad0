#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "yq/gamma.hpp"
#include "yq/qkz.hpp"

using namespace yq;

namespace {

struct Fixture {
    GlobalParams par;
    cplx a1{0.17, 0.11}, a2{-0.43, 0.29}, a3{0.61, -0.27};
    YangianRep V1, V2, V3;

    Fixture() : V1(ev_sl2(par, a1)), V2(ev_sl2(par, a2)), V3(ev_sl2(par, a3)) {}
};

double rel(const Mat& diff, const Mat& ref) { return diff.norm() / std::max(1.0, ref.norm()); }

}  // namespace

TEST_CASE("two-point system specializes to the pair R-matrix") {
    Fixture F;
    const auto sys = build_system({&F.V1, &F.V2}, +1);
    const std::vector<cplx> s = {cplx(0.37, 0.21), cplx(-0.19, -0.43)};
    const Mat R = sys.R[0][1]->eval(s[0] - s[1]);
    CHECK(rel(sys.coeff(0, s) - R, R) < 1e-12);
    const Mat Rinv = sys.R[0][1]->eval(s[0] - s[1] - 1.0).inverse();
    CHECK(rel(sys.coeff(1, s) - Rinv, Rinv) < 1e-12);
}

TEST_CASE("three-point system") {
    Fixture F;
    const auto sys = build_system({&F.V1, &F.V2, &F.V3}, +1);
    const std::vector<cplx> s0 = {cplx(0.41, 0.23), cplx(-0.22, -0.15), cplx(0.68, -0.49)};
    const std::vector<cplx> s1 = {cplx(-0.31, 0.12), cplx(0.52, 0.37), cplx(0.04, -0.26)};

    SUBCASE("integrability") { CHECK(sys.integrability({s0, s1}) < 1e-7); }

    SUBCASE("canonical solutions solve every direction") {
        const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}};
        for (const auto& sg : perms)
            for (int i = 0; i < 3; ++i) {
                std::vector<cplx> sp = s0;
                sp[i] += 1.0;
                const Mat lhs = sys.phi(sg, sp);
                const Mat rhs = sys.coeff(i, s0) * sys.phi(sg, s0);
                CHECK(rel(lhs - rhs, rhs) < 1e-6);
            }
    }

    SUBCASE("monodromy is a function of the exponentials") {
        const std::vector<int> id = {0, 1, 2}, sw = {1, 0, 2};
        const Mat m0 = sys.phi(id, s0).inverse() * sys.phi(sw, s0);
        std::vector<cplx> sh = s0;
        sh[0] += 1.0;
        sh[2] -= 2.0;
        const Mat m1 = sys.phi(id, sh).inverse() * sys.phi(sw, sh);
        CHECK(rel(m0 - m1, m0) < 1e-7);
    }

    SUBCASE("monodromy equals the embedded loop R-matrix") {
        const std::vector<int> id = {0, 1, 2};
        const std::vector<const YangianRep*> reps = {&F.V1, &F.V2, &F.V3};
        CHECK(monodromy_check(sys, reps, id, 0, s0) < 1e-5);
        CHECK(monodromy_check(sys, reps, id, 1, s0) < 1e-5);
    }
}

TEST_CASE("two-point monodromy matches the loop R-matrix") {
    Fixture F;

    SUBCASE("headline comparison and proof-step identities") {
        const KDResult kd = kd_check_n2(F.V1, F.V2, +1);
        CHECK(kd.max_dev < 1e-5);
        CHECK(kd.qdiff_dev < 1e-6);
        CHECK(kd.bridge_dev < 1e-6);

        // halved truncations must not beat the full run
        const KDResult kd_half = kd_check_n2(F.V1, F.V2, +1, 5, 200, 150);
        CHECK(kd.max_dev <= kd_half.max_dev * 1.001 + 1e-12);
    }

    SUBCASE("other side of the q-difference equation") {
        const KDResult kd = kd_check_n2(F.V1, F.V2, -1);
        CHECK(kd.max_dev < 1e-5);
    }

    SUBCASE("mirror parameters reverse the attracting end") {
        GlobalParams par2 = F.par;
        par2.hbar = std::conj(par2.hbar);
        REQUIRE(std::abs(par2.q()) > 1.0);
        const YangianRep W1 = ev_sl2(par2, F.a1), W2 = ev_sl2(par2, F.a2);
        const KDResult kd = kd_check_n2(W1, W2, -1);
        CHECK(kd.max_dev < 1e-5);
    }

    SUBCASE("swapped factors compare against the inverted flip") {
        const GammaConstants gc = choose_constants(F.V1.cartan, F.par);
        const QLoopRep L1 = gamma_functor(F.V1, gc), L2 = gamma_functor(F.V2, gc);
        const AbelianRQ R21p = build_R0_qloop(L2, L1, +1);
        const AbelianR Rm = build_R0(F.V1, F.V2, -1, 400);
        const AbelianQKZ2 qkz = build_qkz2(Rm, omega_h(F.V1, F.V2), F.par.hbar, 400, 300);
        const Mat sw = flip_op(F.V1.dim, F.V2.dim);
        for (int t = 0; t < 2; ++t) {
            const cplx s(0.19 + 0.37 * t, 0.5 * F.V1.cartan.l * F.par.hbar.imag());
            const cplx zeta = std::exp(cplx(0.0, 2.0 * M_PI) * s);
            const Mat lhs = qkz.connection(s);
            const Mat rhs = sw.inverse() * R21p.eval(1.0 / zeta).inverse() * sw;
            CHECK(rel(lhs - rhs, rhs) < 1e-5);
        }
    }
}
