#include "yq/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "yq/cartan.hpp"
#include "yq/diffeq.hpp"
#include "yq/drinfeld.hpp"
#include "yq/gamma.hpp"
#include "yq/qkz.hpp"
#include "yq/qloop.hpp"
#include "yq/qrmatrix.hpp"
#include "yq/ratfun.hpp"
#include "yq/rmatrix.hpp"
#include "yq/yangian.hpp"

namespace yq {
namespace {

using LP = LaurentPolyZ;

// accumulator of named sub-checks: keeps the worst deviation as a fraction
// of its budget and the name of the first failure
struct Gate {
    double worst = 0.0;
    bool pass = true;
    std::string note;

    void check(const std::string& name, double dev, double budget) {
        const double r = dev / budget;
        if (!(r <= worst)) worst = r;  // NaN counts as worse
        if (!(dev < budget) && pass) { pass = false; note = name; }
        if (std::isnan(dev) && pass) { pass = false; note = name + " (nan)"; }
    }
    void require(const std::string& name, bool ok) {
        if (!ok && pass) { pass = false; note = name; }
    }
};

// deterministic generic spectral points of the rank-1 seeds
const cplx kA1(0.17, 0.11), kA2(-0.43, 0.29), kA3(0.61, -0.27);
const cplx kS1(0.36, 0.21), kS2(-0.27, 0.33);

double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return 1e300;
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

// 1: exact inversion of the T-Cartan matrix through rank 8
void crit_cartan(Gate& g) {
    auto one = [&g](char t, int r, int l) {
        CartanData cd = build_cartan(t, r);
        g.require(std::string("l value ") + t + std::to_string(r), cd.l == l);
        const auto B = t_cartan_matrix(cd);
        const auto C = invert_t_cartan(cd);
        const int n = cd.rank;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                g.require("nonnegative integer coefficients", C[i][j].nonneg_coeffs());
                LP acc;
                for (int k = 0; k < n; ++k) acc += B[i][k] * C[k][j];
                const LP expect = i == j ? LP::tnum(cd.l) : LP();
                g.require("B(T) C(T) = [l] Id", acc == expect);
            }
    };
    for (int n = 1; n <= 8; ++n) one('A', n, n + 1);
    for (int n = 2; n <= 8; ++n) one('B', n, 2 * (n + 1));
    for (int n = 2; n <= 8; ++n) one('C', n, 2 * (2 * n - 1));
    for (int n = 3; n <= 8; ++n) one('D', n, 2 * n - 2);
    one('E', 6, 12);
    one('E', 7, 18);
    one('E', 8, 30);
    one('F', 4, 18);
    one('G', 2, 12);

    const auto CF = fundamental_coweights_q(build_cartan('F', 4));
    g.require("F4 spot value",
              CF[3][3] == (LP::tnum(9) * LP::angle(3) * LP::angle(4)).divide_exact(LP::tnum(2)));
    const auto CE = fundamental_coweights_q(build_cartan('E', 8));
    g.require("E8 spot value", CE[7][7] == LP::tnum(15) * LP::angle(5) * LP::angle(9));
}

// 2: field relations on the seeds and their shifted tensors up to dim 8
void crit_yangian(Gate& g, const GlobalParams& par, bool quick) {
    const int ns = quick ? 10 : 100;
    const YangianRep V1 = ev_sl2(par, kA1), V2 = ev_sl2(par, kA2), V3 = ev_sl2(par, kA3);
    const YangianRep V12 = ytensor(V1, V2, kS1);
    const YangianRep V123 = ytensor(V12, V3, kS2);

    g.check("relations on a seed", verify_relations(V1, ns).max_residual, 1e-8);
    g.check("relations on a pair tensor", verify_relations(V12, ns).max_residual, 1e-8);
    g.check("relations on a triple tensor", verify_relations(V123, ns).max_residual, 1e-8);
    if (!quick) {
        const YangianRep V23 = ytensor(V2, V3, kS2);
        g.check("relations on the other pair", verify_relations(V23, ns).max_residual, 1e-8);
    }
    g.check("associativity of the shifted tensor",
            check_associativity(V1, V2, V3, kS1, kS2), 1e-8);
}

// 3: asymptotics and shifted unitarity of the coefficient operator
void crit_coeff(Gate& g, const GlobalParams& par) {
    const YangianRep V1 = ev_sl2(par, kA1), V2 = ev_sl2(par, kA2);
    const AbelianOp A = build_A(V1, V2);
    const Mat om = omega_h(V1, V2);
    const cplx h = par.hbar;
    const double l = (double)V1.cartan.l;
    const Mat Id = Mat::Identity(A.dim(), A.dim());

    // A(s) = 1 - l hbar^2 Omega / s^2 + O(s^-3); the two-point Richardson
    // step removes the s^-3 term
    const cplx s0 = 2.0e3 * std::polar(1.0, 0.6);
    const Mat E1 = s0 * s0 * (A.eval(s0) - Id);
    const Mat E2 = 4.0 * s0 * s0 * (A.eval(2.0 * s0) - Id);
    const Mat jet = 2.0 * E2 - E1;
    const Mat ref = -l * h * h * om;
    g.check("second-order jet", (jet - ref).norm() / ref.norm(), 1e-6);

    const AbelianOp A21 = build_A(V2, V1);
    const Mat sg = flip_op(V1.dim, V2.dim);
    const cplx lh = l * h;
    for (const cplx s : {cplx(0.9, 0.5), cplx(-1.2, 0.8)}) {
        const Mat lhs = sg * A.eval(-s) * sg.inverse();
        const Mat rhs = A21.eval(s - lh);
        g.check("shifted unitarity", (lhs - rhs).norm() / rhs.norm(), 1e-8);
    }
}

// 4: property suite of the two canonical regularizations
void crit_rmatrix(Gate& g, const GlobalParams& par) {
    const YangianRep V1 = ev_sl2(par, kA1), V2 = ev_sl2(par, kA2);
    const cplx h = par.hbar;
    const cplx lh = (double)V1.cartan.l * h;
    const int N = par.trunc_inner;
    const AbelianOp A = build_A(V1, V2);
    const AbelianR Rp = build_R0(V1, V2, +1, N);
    const AbelianR Rm = build_R0(V1, V2, -1, N);
    const Mat Id = Mat::Identity(4, 4);

    const cplx s(0.9, 0.4);
    g.check("difference equation, right", (Rp.eval(s + lh) - A.eval(s) * Rp.eval(s)).norm(), 1e-8);
    g.check("difference equation, left", (Rm.eval(s + lh) - A.eval(s) * Rm.eval(s)).norm(), 1e-8);

    const AbelianR Rm21 = build_R0(V2, V1, -1, N);
    const Mat sg = flip_op(2, 2);
    for (const cplx t : {cplx(1.1, 0.3), cplx(-0.6, 0.9)}) {
        const Mat prod = Rp.eval(t) * sg.inverse() * Rm21.eval(-t) * sg;
        g.check("unitarity", (prod - Id).norm(), 1e-8);
    }

    {
        const YangianRep V3 = ev_sl2(par, kA3);
        const cplx c1(2.1, 0.9), c2(0.7, -1.3), c(0.95, 0.25);
        const YangianRep V12 = ytensor(V1, V2, c1);
        const YangianRep V23 = ytensor(V2, V3, c2);
        const AbelianR R12_3 = build_R0(V12, V3, +1, N);
        const AbelianR R13 = build_R0(V1, V3, +1, N);
        const AbelianR R23 = build_R0(V2, V3, +1, N);
        const AbelianR R1_23 = build_R0(V1, V23, +1, N);
        const AbelianR R12 = build_R0(V1, V2, +1, N);
        const Mat rhs1 = embed_13(R13.eval(c1 + c2 + c), 2, 2, 2) *
                         embed_23(R23.eval(c2 + c), 2, 2, 2);
        g.check("cabling, first leg", (R12_3.eval(c2 + c) - rhs1).norm() / rhs1.norm(), 1e-7);
        const Mat rhs2 = embed_13(R13.eval(c1 + c2 + c), 2, 2, 2) *
                         embed_12(R12.eval(c1 + c), 2, 2, 2);
        g.check("cabling, second leg",
                (R1_23.eval(c1 + c2 + c) - rhs2).norm() / rhs2.norm(), 1e-7);
    }

    const Mat om = omega_h(V1, V2);
    const cplx far = 1.0e3 * std::polar(1.0, 0.55);
    for (const AbelianR* R : {&Rp, &Rm})
        g.check("one-jet at infinity", (R->eval(far) - Id - h / far * om).norm(), 1e-5);

    const cplx s0(1.37, 0.52);
    const auto evp = [&Rp](cplx t) { return Rp.eval(t); };
    const auto evm = [&Rm](cplx t) { return Rm.eval(t); };
    g.check("intertwiner defect, right", intertwiner_defect(evp, V1, V2, s0), 1e-7);
    g.check("intertwiner defect, left", intertwiner_defect(evm, V1, V2, s0), 1e-7);
}

// 5: loop-algebra functor on a rank-1 seed
void crit_gamma(Gate& g, const GlobalParams& par) {
    const YangianRep V = ev_sl2(par, kA1);
    const GammaConstants gc = choose_constants(V.cartan, par);
    const QLoopRep L = gamma_functor(V, gc, par.trunc_inner);

    g.check("loop field relations", verify_ql_relations(L).max_residual, 1e-7);

    // closed sine-ratio form of psi on the weight eigenvectors
    const cplx q = par.q();
    const cplx alpha = std::exp(cplx(0.0, 2.0 * M_PI) * kA1);
    for (const cplx z : {cplx(1.9, 2.3), cplx(-0.8, 1.7), cplx(0.4, -2.6)}) {
        std::vector<cplx> expect = {q * (z - alpha / (q * q)) / (z - alpha),
                                    (z - q * q * alpha) / (q * (z - alpha))};
        const Eigen::VectorXcd ev = L.psi[0].eval(z).eigenvalues();
        g.check("psi closed form",
                multiset_distance({ev(0), ev(1)}, expect), 1e-8);
    }

    // anchor of the zero mode: psi_i(inf) = q_i^{xi_{i,0}}
    const Mat anchor = (cplx(0.0, M_PI) * par.hbar * (double)V.cartan.d[0] * V.xi0(0)).exp();
    g.check("zero-mode anchor", (L.psi_plus(0, 0) - anchor).norm(), 1e-8);

    g.check("shift compatibility",
            gamma_shift_check(V, cplx(0.23, -0.31), gc, par.trunc_inner), 1e-7);
}

// 6: twist between the additive and loop tensor structures
void crit_twist(Gate& g, const GlobalParams& par, bool quick) {
    const YangianRep V1 = ev_sl2(par, kA1), V2 = ev_sl2(par, kA2);
    const GammaConstants gc = choose_constants(V1.cartan, par);
    const int N = par.trunc_outer, M = par.trunc_twosided;
    const QLoopRep L1 = gamma_functor(V1, gc, N);
    const QLoopRep L2 = gamma_functor(V2, gc, N);
    const TwistData td = build_twist(V1, V2, par.eps(), N, M);

    const int npts = quick ? 2 : 5;
    for (int k = 0; k < npts; ++k) {
        const cplx s = kS1 + (double)k * cplx(0.07, -0.04);
        const cplx zeta = std::exp(cplx(0.0, 2.0 * M_PI) * s);
        const QLoopRep T = qtensor(L1, L2, zeta);
        const QLoopRep L12 = gamma_functor(ytensor(V1, V2, s), gc, N);
        g.check("intertwining of the generating fields",
                conjugation_defect(T, L12, td.twist(s)), 1e-6);
    }

    const YangianRep V3 = ev_sl2(par, kA3);
    const YangianRep V12 = ytensor(V1, V2, kS1);
    const YangianRep V23 = ytensor(V2, V3, kS2);
    const Mat J12 = td.twist(kS1);
    const Mat J23 = build_twist(V2, V3, par.eps(), N, M).twist(kS2);
    const Mat J12_3 = build_twist(V12, V3, par.eps(), N, M).twist(kS2);
    const Mat J1_23 = build_twist(V1, V23, par.eps(), N, M).twist(kS1 + kS2);
    const Mat lhs = J12_3 * kron(J12, Mat::Identity(2, 2));
    const Mat rhs = J1_23 * kron(Mat::Identity(2, 2), J23);
    g.check("cocycle on a triple", (lhs - rhs).norm() / rhs.norm(), 1e-6);
}

// 7: two-point monodromy equals the loop R-matrix
void crit_kd(Gate& g, const GlobalParams& par, bool quick) {
    const YangianRep V1 = ev_sl2(par, kA1), V2 = ev_sl2(par, kA2);
    const int ngrid = quick ? 2 : 5;
    const int N = par.trunc_outer, M = par.trunc_twosided;

    const KDResult kd = kd_check_n2(V1, V2, par.eps(), ngrid, N, M);
    g.check("monodromy vs loop R-matrix", kd.max_dev, 1e-5);
    g.check("q-difference equation of the monodromy", kd.qdiff_dev, 1e-6);
    g.check("bridging of the fundamental solutions", kd.bridge_dev, 1e-6);

    if (!quick) {
        const KDResult half = kd_check_n2(V1, V2, par.eps(), ngrid, N / 2, M / 2);
        g.require("deviation decreases under truncation doubling",
                  kd.max_dev <= half.max_dev * 1.001 + 1e-12);

        GlobalParams mirror = par;
        mirror.hbar = std::conj(par.hbar);
        const YangianRep W1 = ev_sl2(mirror, kA1), W2 = ev_sl2(mirror, kA2);
        g.require("mirror run exercises the other branch", mirror.eps() == -par.eps());
        const KDResult kdm = kd_check_n2(W1, W2, mirror.eps(), ngrid, N, M);
        g.check("mirror monodromy vs loop R-matrix", kdm.max_dev, 1e-5);
    }
}

// 8: three-point system integrability and monodromy cocycle
void crit_qkz3(Gate& g, const GlobalParams& par, bool quick) {
    const YangianRep V1 = ev_sl2(par, kA1), V2 = ev_sl2(par, kA2), V3 = ev_sl2(par, kA3);
    const std::vector<const YangianRep*> reps = {&V1, &V2, &V3};
    const int N = par.trunc_outer, M = par.trunc_twosided;
    const QKZSystem sys = build_system(reps, par.eps(), N, M);

    std::vector<std::vector<cplx>> samples = {
        {cplx(0.21, 0.17), cplx(-0.33, 0.41), cplx(0.52, -0.08)}};
    if (!quick) samples.push_back({cplx(-0.14, 0.29), cplx(0.44, 0.12), cplx(0.05, -0.37)});
    g.check("integrability of the coefficients", sys.integrability(samples), 1e-7);

    const std::vector<int> id = {0, 1, 2};
    g.check("monodromy cocycle at the first wall",
            monodromy_check(sys, reps, id, 0, samples[0], N), 1e-5);
    if (!quick)
        g.check("monodromy cocycle at the second wall",
                monodromy_check(sys, reps, id, 1, samples[0], N), 1e-5);
}

CriterionResult run_one(int id, const std::string& name, double time_budget,
                        const std::function<void(Gate&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    Gate g;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(g);
    } catch (const std::exception& e) {
        g.pass = false;
        g.note = std::string("exception: ") + e.what();
        g.worst = std::max(g.worst, 1.0);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (g.pass && r.seconds >= time_budget) {
        g.pass = false;
        g.note = "time budget exceeded";
    }
    r.pass = g.pass;
    r.worst = g.worst;
    r.note = g.note;
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const GlobalParams& par, bool quick) {
    // the quantum-loop side needs |q| != 1 to pick an attracting end
    const bool q_unit = std::abs(std::abs(par.q()) - 1.0) < 1e-12;
    auto skipped = [](int id, const std::string& name) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.pass = true;
        r.note = "skipped: |q| = 1, no attracting end on the q-orbit";
        return r;
    };

    std::vector<CriterionResult> out;
    out.push_back(run_one(1, "exact T-Cartan inversion through rank 8", 1.0,
                          [&](Gate& g) { crit_cartan(g); }));
    out.push_back(run_one(2, "field relations and shifted tensors", 10.0,
                          [&](Gate& g) { crit_yangian(g, par, quick); }));
    out.push_back(run_one(3, "coefficient operator asymptotics", 60.0,
                          [&](Gate& g) { crit_coeff(g, par); }));
    out.push_back(run_one(4, "abelian R-matrix property suite", 60.0,
                          [&](Gate& g) { crit_rmatrix(g, par); }));
    out.push_back(run_one(5, "loop-algebra functor on a seed", 60.0,
                          [&](Gate& g) { crit_gamma(g, par); }));
    if (q_unit) {
        out.push_back(skipped(6, "twist between the tensor structures"));
        out.push_back(skipped(7, "two-point monodromy identification"));
        out.push_back(skipped(8, "three-point system and its walls"));
        return out;
    }
    out.push_back(run_one(6, "twist between the tensor structures", 300.0,
                          [&](Gate& g) { crit_twist(g, par, quick); }));
    out.push_back(run_one(7, "two-point monodromy identification", 600.0,
                          [&](Gate& g) { crit_kd(g, par, quick); }));
    out.push_back(run_one(8, "three-point system and its walls", 600.0,
                          [&](Gate& g) { crit_qkz3(g, par, quick); }));
    return out;
}

}  // namespace yq
