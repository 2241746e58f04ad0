#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "yq/config.hpp"
#include "yq/drinfeld.hpp"
#include "yq/rmatrix.hpp"

using namespace yq;
using namespace std::complex_literals;

namespace {
struct Fixture {
    GlobalParams par;
    YangianRep V1, V2;
    Fixture() : V1(ev_sl2(par, cplx(0.17, 0.11))), V2(ev_sl2(par, cplx(-0.43, 0.29))) {}
};

// greedy multiset match of two complex lists
double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (const cplx x : a) {
        size_t best = 0;
        double bd = 1e300;
        for (size_t j = 0; j < b.size(); ++j)
            if (std::abs(b[j] - x) < bd) { bd = std::abs(b[j] - x); best = j; }
        worst = std::max(worst, bd);
        b.erase(b.begin() + best);
    }
    return worst;
}
}  // namespace

TEST_CASE("coefficient operator: closed form, quadrature, and exact eigenvalues") {
    Fixture F;
    const cplx h = F.par.hbar;
    const AbelianOp A = build_A(F.V1, F.V2);
    REQUIRE(A.dim() == 4);

    SUBCASE("factored eigenvalues match the hand computation") {
        // two-dimensional legs at spectral points a1, a2 with d = a2 - a1:
        // expanding the Casimir over the weight basis gives the eigenvalues
        //   (s-d)(s-d+2h)/(s-d+h)^2            on the two extreme weights,
        //   (s-d)^2/((s-d-h)(s-d+h))           on one mixed weight,
        //   (s-d+2h)^2/((s-d+h)(s-d+3h))       on the other
        const cplx d = cplx(-0.43, 0.29) - cplx(0.17, 0.11);
        for (const cplx s : {cplx(1.1, 0.6), cplx(-0.7, 1.4)}) {
            const cplx t = s - d;
            std::vector<cplx> expect = {
                t * (t + 2.0 * h) / ((t + h) * (t + h)),
                t * (t + 2.0 * h) / ((t + h) * (t + h)),
                t * t / ((t - h) * (t + h)),
                (t + 2.0 * h) * (t + 2.0 * h) / ((t + h) * (t + 3.0 * h)),
            };
            std::vector<cplx> got;
            for (const auto& rp : A.comp) got.push_back(rp.eval(s));
            CHECK(multiset_distance(got, expect) < 1e-10);
        }
    }

    SUBCASE("matches the contour-quadrature evaluation") {
        for (const cplx s : {cplx(1.3, 0.7), cplx(-0.8, 0.45)}) {
            const Mat direct = A.eval(s);
            const Mat quad = eval_A_quadrature(F.V1, F.V2, s);
            CHECK((direct - quad).norm() < 1e-8 * direct.norm());
        }
    }

    SUBCASE("second-order jet is the Cartan Casimir") {
        const Mat om = omega_h(F.V1, F.V2);
        const double l = (double)F.V1.cartan.l;
        const cplx dir = std::polar(1.0, 0.6);
        const cplx s0 = 2.0e3 * dir;
        const Mat Id = Mat::Identity(4, 4);
        const Mat E1 = s0 * s0 * (A.eval(s0) - Id);
        const Mat E2 = 4.0 * s0 * s0 * (A.eval(2.0 * s0) - Id);
        const Mat ext = 2.0 * E2 - E1;  // kills the 1/s correction
        CHECK((ext + l * h * h * om).norm() < 1e-6);
    }

    SUBCASE("shifted unitarity") {
        const AbelianOp A21 = build_A(F.V2, F.V1);
        const Mat sg = flip_op(2, 2);
        const cplx lh = (double)F.V1.cartan.l * h;
        for (const cplx s : {cplx(0.9, 0.5), cplx(-1.2, 0.8)}) {
            const Mat lhs = sg * A.eval(-s) * sg.inverse();
            const Mat rhs = A21.eval(s - lh);
            CHECK((lhs - rhs).norm() < 1e-9 * rhs.norm());
        }
    }
}

TEST_CASE("canonical regularizations of the abelian R-matrix") {
    Fixture F;
    const cplx h = F.par.hbar;
    const cplx lh = (double)F.V1.cartan.l * h;
    const AbelianOp A = build_A(F.V1, F.V2);
    const AbelianR Rp = build_R0(F.V1, F.V2, +1, F.par.trunc_inner);
    const AbelianR Rm = build_R0(F.V1, F.V2, -1, F.par.trunc_inner);

    SUBCASE("both solve the difference equation") {
        const cplx s(0.9, 0.4);
        CHECK((Rp.eval(s + lh) - A.eval(s) * Rp.eval(s)).norm() < 1e-9);
        CHECK((Rm.eval(s + lh) - A.eval(s) * Rm.eval(s)).norm() < 1e-9);
    }

    SUBCASE("one-jet at infinity is the Cartan Casimir") {
        const Mat om = omega_h(F.V1, F.V2);
        const cplx dir = std::polar(1.0, 0.55);
        const cplx s0 = 2.0e3 * dir;
        const Mat Id = Mat::Identity(4, 4);
        for (const AbelianR* R : {&Rp, &Rm}) {
            const Mat E1 = s0 * (R->eval(s0) - Id);
            const Mat E2 = 2.0 * s0 * (R->eval(2.0 * s0) - Id);
            const Mat ext = 2.0 * E2 - E1;
            CHECK((ext - h * om).norm() < 1e-6);
        }
    }

    SUBCASE("unitarity between the two regularizations") {
        const AbelianR Rm21 = build_R0(F.V2, F.V1, -1, F.par.trunc_inner);
        const Mat sg = flip_op(2, 2);
        for (const cplx s : {cplx(1.1, 0.3), cplx(-0.6, 0.9)}) {
            const Mat prod = Rp.eval(s) * sg.inverse() * Rm21.eval(-s) * sg;
            CHECK((prod - Mat::Identity(4, 4)).norm() < 1e-8);
        }
    }

    SUBCASE("values at different points commute") {
        const Mat a = Rp.eval(cplx(0.8, 0.2)), b = Rp.eval(cplx(-0.5, 1.1));
        const Mat c = Rm.eval(cplx(0.4, -0.7));
        CHECK((a * b - b * a).norm() < 1e-10);
        CHECK((a * c - c * a).norm() < 1e-10);
    }

    SUBCASE("flip composed with R intertwines the shifted tensor products") {
        const cplx s0(1.37, 0.52);
        const auto evp = [&Rp](cplx s) { return Rp.eval(s); };
        const auto evm = [&Rm](cplx s) { return Rm.eval(s); };
        CHECK(intertwiner_defect(evp, F.V1, F.V2, s0) < 1e-8);
        CHECK(intertwiner_defect(evm, F.V1, F.V2, s0) < 1e-8);
    }

    SUBCASE("translation covariance") {
        const AbelianR Rsh = build_R0(shift_rep(F.V1, cplx(0.23, -0.31)),
                                      shift_rep(F.V2, cplx(-0.11, 0.07)),
                                      +1, F.par.trunc_inner);
        const cplx s(0.85, 0.6);
        const cplx shift = cplx(0.23, -0.31) - cplx(-0.11, 0.07);
        CHECK((Rsh.eval(s) - Rp.eval(s + shift)).norm() < 1e-9);
    }
}

TEST_CASE("cabling identities on a triple product") {
    Fixture F;
    const YangianRep V3 = ev_sl2(F.par, cplx(0.61, -0.33));
    const cplx s1(2.1, 0.9), s2(0.7, -1.3);
    const YangianRep V12 = ytensor(F.V1, F.V2, s1);
    const YangianRep V23 = ytensor(F.V2, V3, s2);

    const AbelianR R12_3 = build_R0(V12, V3, +1, F.par.trunc_inner);
    const AbelianR R13 = build_R0(F.V1, V3, +1, F.par.trunc_inner);
    const AbelianR R23 = build_R0(F.V2, V3, +1, F.par.trunc_inner);
    const AbelianR R1_23 = build_R0(F.V1, V23, +1, F.par.trunc_inner);
    const AbelianR R12 = build_R0(F.V1, F.V2, +1, F.par.trunc_inner);

    const cplx s(0.95, 0.25);
    // first leg cabled: R_{V1 (x)_{s1} V2, V3}(s2 + s) = R_{13}(s1 + s2 + s) R_{23}(s2 + s)
    {
        const Mat lhs = R12_3.eval(s2 + s);
        const Mat rhs = embed_13(R13.eval(s1 + s2 + s), 2, 2, 2) *
                        embed_23(R23.eval(s2 + s), 2, 2, 2);
        CHECK((lhs - rhs).norm() < 1e-7 * rhs.norm());
    }
    // second leg cabled: R_{V1, V2 (x)_{s2} V3}(s1 + s2 + s) = R_{13}(s1+s2+s) R_{12}(s1+s)
    {
        const Mat lhs = R1_23.eval(s1 + s2 + s);
        const Mat rhs = embed_13(R13.eval(s1 + s2 + s), 2, 2, 2) *
                        embed_12(R12.eval(s1 + s), 2, 2, 2);
        CHECK((lhs - rhs).norm() < 1e-7 * rhs.norm());
    }
}

TEST_CASE("two-point difference system: canonical solutions, twist, connection") {
    Fixture F;
    const AbelianR Rp = build_R0(F.V1, F.V2, F.par.eps(), F.par.trunc_inner);
    const Mat om = omega_h(F.V1, F.V2);
    const AbelianQKZ2 Q = build_qkz2(Rp, om, F.par.hbar, F.par.trunc_outer,
                                     F.par.trunc_twosided);

    SUBCASE("fundamental solutions solve F(s+1) = R(s) F(s)") {
        const cplx s(0.77, 0.41);
        const Mat R = Rp.eval(s);
        CHECK((Q.phi_plus(s + 1.0) - R * Q.phi_plus(s)).norm() < 1e-8 * R.norm());
        CHECK((Q.phi_minus(s + 1.0) - R * Q.phi_minus(s)).norm() < 1e-8 * R.norm());
    }

    SUBCASE("twist is the inverse shifted right solution") {
        const cplx s(0.52, -0.38);
        CHECK((Q.twist(s) - Q.phi_plus(s + 1.0).inverse()).norm() < 1e-10);
        CHECK((Q.twist(s + 1.0) - Q.twist(s) * Rp.eval(s + 1.0).inverse()).norm() < 1e-8);
    }

    SUBCASE("connection: ratio of solutions, one-periodic") {
        const cplx s(0.31, 0.27);
        const Mat S = Q.connection(s);
        CHECK((S - Q.phi_plus(s).inverse() * Q.phi_minus(s)).norm() < 1e-7 * S.norm());
        CHECK((Q.connection(s + 1.0) - S).norm() < 1e-7 * S.norm());
    }
}
