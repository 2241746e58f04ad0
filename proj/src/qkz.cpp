#include "yq/qkz.hpp"

#include <cmath>
#include <stdexcept>

#include "yq/diffeq.hpp"
#include "yq/gamma.hpp"

namespace yq {

Mat embed_pair(const Mat& m, const std::vector<int>& dims, int a, int b) {
    const int n = (int)dims.size();
    if (a < 0 || b <= a || b >= n) throw std::invalid_argument("embed_pair: bad legs");
    int D = 1;
    for (const int d : dims) D *= d;
    // strides of the mixed-radix index (leftmost factor slowest)
    std::vector<int> stride(n, 1);
    for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * dims[k + 1];

    Mat out = Mat::Zero(D, D);
    std::vector<int> idx(n, 0);
    for (int row = 0; row < D; ++row) {
        int r = row;
        for (int k = 0; k < n; ++k) {
            idx[k] = r / stride[k];
            r %= stride[k];
        }
        const int ra = idx[a], rb = idx[b];
        const int base = row - ra * stride[a] - rb * stride[b];
        for (int ca = 0; ca < dims[a]; ++ca)
            for (int cb = 0; cb < dims[b]; ++cb) {
                const int col = base + ca * stride[a] + cb * stride[b];
                out(row, col) = m(ra * dims[b] + rb, ca * dims[b] + cb);
            }
    }
    return out;
}

int QKZSystem::total_dim() const {
    int D = 1;
    for (const int d : dims) D *= d;
    return D;
}

Mat QKZSystem::coeff(int i, const std::vector<cplx>& s) const {
    const int D = total_dim();
    Mat A = Mat::Identity(D, D);
    for (int j = i - 1; j >= 0; --j)
        A *= embed_pair(R[j][i]->eval(s[j] - s[i] - 1.0), dims, j, i).inverse();
    for (int j = n - 1; j > i; --j)
        A *= embed_pair(R[i][j]->eval(s[i] - s[j]), dims, i, j);
    return A;
}

Mat QKZSystem::phi(const std::vector<int>& sigma, const std::vector<cplx>& s) const {
    std::vector<int> inv(n);
    for (int k = 0; k < n; ++k) inv[sigma[k]] = k;
    const int D = total_dim();
    Mat F = Mat::Identity(D, D);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Mat f = (inv[a] < inv[b]) ? pair[a][b]->phi_plus(s[a] - s[b])
                                            : pair[a][b]->phi_minus(s[a] - s[b]);
            F *= embed_pair(f, dims, a, b);
        }
    return F;
}

double QKZSystem::integrability(const std::vector<std::vector<cplx>>& samples) const {
    double worst = 0.0;
    for (const auto& s : samples)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                std::vector<cplx> si = s, sj = s;
                si[i] += 1.0;
                sj[j] += 1.0;
                const Mat lhs = coeff(i, sj) * coeff(j, s);
                const Mat rhs = coeff(j, si) * coeff(i, s);
                worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
            }
    return worst;
}

QKZSystem build_system(const std::vector<const YangianRep*>& reps, int eps, int N, int M) {
    QKZSystem sys;
    sys.n = (int)reps.size();
    sys.eps = eps;
    for (const auto* V : reps) sys.dims.push_back(V->dim);
    sys.R.assign(sys.n, std::vector<std::shared_ptr<AbelianR>>(sys.n));
    sys.pair.assign(sys.n, std::vector<std::shared_ptr<AbelianQKZ2>>(sys.n));
    for (int a = 0; a < sys.n; ++a)
        for (int b = a + 1; b < sys.n; ++b) {
            sys.R[a][b] = std::make_shared<AbelianR>(build_R0(*reps[a], *reps[b], eps, N));
            sys.pair[a][b] = std::make_shared<AbelianQKZ2>(build_qkz2(
                *sys.R[a][b], omega_h(*reps[a], *reps[b]), reps[a]->par.hbar, N, M));
        }
    return sys;
}

KDResult kd_check_n2(const YangianRep& V1, const YangianRep& V2, int eps,
                     int ngrid, int N, int M) {
    const AbelianR R = build_R0(V1, V2, eps, N);
    const AbelianQKZ2 qkz = build_qkz2(R, omega_h(V1, V2), V1.par.hbar, N, M);

    const GammaConstants gc = choose_constants(V1.cartan, V1.par);
    const QLoopRep L1 = gamma_functor(V1, gc, N);
    const QLoopRep L2 = gamma_functor(V2, gc, N);
    const AbelianRQ Rq = build_R0_qloop(L1, L2, eps);
    const AbelianOpQ Aq = build_A_qloop(L1, L2);

    const cplx h = V1.par.hbar;
    const int l = V1.cartan.l;
    const cplx two_pi_i(0.0, 2.0 * M_PI);

    KDResult out;
    // grid on the circle |zeta| = |q|^l, i.e. Im s = l Im(hbar) / 2
    for (int t = 0; t < ngrid; ++t) {
        const cplx s(0.13 + (double)t / ngrid, 0.5 * l * h.imag());
        const cplx zeta = std::exp(two_pi_i * s);

        const Mat S = qkz.connection(s);
        const Mat Rv = Rq.eval(zeta);
        out.max_dev = std::max(out.max_dev, (S - Rv).norm() / std::max(1.0, Rv.norm()));

        const Mat Av = Aq.eval(zeta);
        const Mat Sq = qkz.connection(s + (double)l * h);
        out.qdiff_dev =
            std::max(out.qdiff_dev, (Sq * S.inverse() - Av).norm() / std::max(1.0, Av.norm()));
    }

    // bridging: the l hbar-step ratio of the step-1 canonical solutions equals
    // the canonical solutions of f(s+1) = A(s) f(s)
    const AbelianOp Ay = build_A(V1, V2);
    std::vector<ScalarCanonical> ar, al;
    for (int k = 0; k < Ay.dim(); ++k) {
        ar.push_back(ScalarCanonical::from_ratio(Ay.comp[k], 1.0, Side::right, N, 0));
        al.push_back(ScalarCanonical::from_ratio(Ay.comp[k], 1.0, Side::left, N));
    }
    for (int t = 0; t < 3; ++t) {
        const cplx s(0.41 + 0.23 * t, 0.29 - 0.17 * t);
        Vec dp(Ay.dim()), dm(Ay.dim());
        for (int k = 0; k < Ay.dim(); ++k) {
            dp(k) = std::exp(-ar[k].log_at(s));
            dm(k) = std::exp(al[k].log_at(s));
        }
        const Mat Ap = Ay.P * dp.asDiagonal() * Ay.Pinv;
        const Mat Am = Ay.P * dm.asDiagonal() * Ay.Pinv;
        const Mat lp = qkz.phi_plus(s + (double)l * h) * qkz.phi_plus(s).inverse();
        const Mat lm = qkz.phi_minus(s + (double)l * h) * qkz.phi_minus(s).inverse();
        out.bridge_dev = std::max(out.bridge_dev, (lp - Ap).norm() / std::max(1.0, Ap.norm()));
        out.bridge_dev = std::max(out.bridge_dev, (lm - Am).norm() / std::max(1.0, Am.norm()));
    }
    return out;
}

double monodromy_check(const QKZSystem& sys, const std::vector<const YangianRep*>& reps,
                       const std::vector<int>& sigma, int i, const std::vector<cplx>& s,
                       int N) {
    if (i < 0 || i + 1 >= sys.n) throw std::invalid_argument("monodromy_check: bad leg");
    std::vector<int> inv(sys.n);
    for (int k = 0; k < sys.n; ++k) inv[sigma[k]] = k;
    std::vector<int> tau = sigma;
    for (int k = 0; k < sys.n; ++k) {
        if (tau[k] == i) tau[k] = i + 1;
        else if (tau[k] == i + 1) tau[k] = i;
    }

    const Mat Mono = sys.phi(sigma, s).inverse() * sys.phi(tau, s);

    const GammaConstants gc = choose_constants(reps[i]->cartan, reps[i]->par);
    const QLoopRep Li = gamma_functor(*reps[i], gc, N);
    const QLoopRep Lj = gamma_functor(*reps[i + 1], gc, N);
    const AbelianRQ Rq = build_R0_qloop(Li, Lj, sys.eps);
    const cplx zeta = std::exp(cplx(0.0, 2.0 * M_PI) * (s[i] - s[i + 1]));
    Mat Rv = Rq.eval(zeta);
    if (inv[i] > inv[i + 1]) Rv = Rv.inverse().eval();
    const Mat ref = embed_pair(Rv, sys.dims, i, i + 1);
    return (Mono - ref).norm() / std::max(1.0, ref.norm());
}

}  // namespace yq
