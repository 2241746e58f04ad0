#include "yq/qrmatrix.hpp"

#include <cmath>
#include <stdexcept>

#include "yq/diffeq.hpp"
#include "yq/drinfeld.hpp"

namespace yq {

void TrigRatio::push(cplx b, int m) {
    if (m == 0) return;
    for (auto& f : fac) {
        if (std::abs(f.first - b) < 1e-10 * std::max(1.0, std::abs(b))) {
            f.second += m;
            return;
        }
    }
    fac.push_back({b, m});
}

int TrigRatio::degree() const {
    int d = 0;
    for (const auto& f : fac) d += f.second;
    return d;
}

cplx TrigRatio::eval(cplx z) const {
    cplx v = 1.0;
    for (const auto& f : fac) {
        const cplx base = 1.0 - z / f.first;
        v *= (f.second > 0) ? std::pow(base, f.second) : 1.0 / std::pow(base, -f.second);
    }
    return v;
}

cplx TrigRatio::log_eval(cplx z) const {
    cplx v = 0.0;
    for (const auto& f : fac) v += (double)f.second * std::log(1.0 - z / f.first);
    return v;
}

std::vector<cplx> TrigRatio::locations() const {
    std::vector<cplx> out;
    out.reserve(fac.size());
    for (const auto& f : fac) out.push_back(f.first);
    return out;
}

cplx PsiSpectrum::xi0_eigen(int node, int k, const GlobalParams& par, int d_i) const {
    const cplx logq = cplx(0.0, M_PI) * par.hbar;
    return std::log(lead[node][k]) / (logq * (double)d_i);
}

PsiSpectrum psi_spectrum(const QLoopRep& V) {
    std::vector<const RationalMatrixFunction*> family;
    for (const auto& f : V.psi) family.push_back(&f);
    double rad = 1.0;
    for (const cplx p : V.sigma) rad = std::max(rad, std::abs(p));
    std::vector<cplx> samples;
    for (int k = 0; k < 5; ++k)
        samples.push_back((2.3 * rad + 1.7) * std::exp(cplx(0.09 + 0.11 * k, 1.1 * k + 0.37)));
    const CommutingBasis B = common_eigenbasis(family, samples);

    PsiSpectrum sp;
    sp.dim = V.dim;
    sp.P = B.P;
    sp.Pinv = B.Pinv;
    sp.zeros.resize(V.rank());
    sp.poles.resize(V.rank());
    sp.lead.resize(V.rank());
    for (int i = 0; i < V.rank(); ++i) {
        sp.zeros[i].resize(V.dim);
        sp.poles[i].resize(V.dim);
        sp.lead[i].resize(V.dim);
        for (int k = 0; k < V.dim; ++k) {
            const ScalarRat lam = diagonal_entry(V.psi[i], B, k);
            if (std::abs(lam.constant) < 1e-12)
                throw std::runtime_error("psi eigenvalue vanishes at infinity");
            sp.lead[i][k] = lam.constant;
            sp.zeros[i][k] = scalar_zeros(lam);
            for (const auto& pl : lam.poles)
                for (size_t m = 0; m < pl.coef.size(); ++m) sp.poles[i][k].push_back(pl.loc);
            if (sp.zeros[i][k].size() != sp.poles[i][k].size())
                throw std::runtime_error("psi eigenvalue zero/pole count mismatch");
            for (const cplx z : sp.zeros[i][k])
                if (std::abs(z) < 1e-10)
                    throw std::runtime_error("psi eigenvalue not invertible at 0");
        }
    }
    return sp;
}

Mat omega_h_qloop(const QLoopRep& V, const QLoopRep& W) {
    const PsiSpectrum s1 = psi_spectrum(V), s2 = psi_spectrum(W);
    const Eigen::MatrixXd binv = omega_h_matrix(V.cartan);
    const int n = V.rank();

    auto xi0_mat = [](const PsiSpectrum& sp, const QLoopRep& R, int i) {
        Vec d(sp.dim);
        for (int k = 0; k < sp.dim; ++k) d(k) = sp.xi0_eigen(i, k, R.par, R.cartan.d[i]);
        return Mat(sp.P * d.asDiagonal() * sp.Pinv);
    };

    Mat om = Mat::Zero(V.dim * W.dim, V.dim * W.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            om += binv(i, j) * kron(xi0_mat(s1, V, i), xi0_mat(s2, W, j));
    return om;
}

cplx h_mode_eigen(const PsiSpectrum& sp, int node, int k, int m, cplx qi) {
    if (m == 0) throw std::invalid_argument("h_mode_eigen: m must be nonzero");
    cplx s = 0.0;
    for (const cplx z : sp.zeros[node][k]) s += std::pow(z, m);
    for (const cplx p : sp.poles[node][k]) s -= std::pow(p, m);
    const double am = std::abs((double)m);
    return ((m > 0) ? -s : s) / (am * (qi - 1.0 / qi));
}

Mat AbelianOpQ::eval(cplx zeta) const {
    Vec d(dim());
    for (int k = 0; k < dim(); ++k) d(k) = comp[k].eval(zeta);
    return P * d.asDiagonal() * Pinv;
}

AbelianOpQ build_A_qloop(const QLoopRep& V, const QLoopRep& W) {
    if (std::abs(std::abs(V.par.q()) - 1.0) < 1e-12)
        throw std::invalid_argument("build_A_qloop: |q| = 1");
    const PsiSpectrum s1 = psi_spectrum(V), s2 = psi_spectrum(W);
    const auto C = invert_t_cartan(V.cartan);
    const int l = V.cartan.l;
    const int n = V.rank();

    AbelianOpQ A;
    A.d1 = V.dim;
    A.d2 = W.dim;
    A.P = kron(s1.P, s2.P);
    A.Pinv = kron(s1.Pinv, s2.Pinv);
    A.comp.resize(A.dim());

    for (int k1 = 0; k1 < V.dim; ++k1)
        for (int k2 = 0; k2 < W.dim; ++k2) {
            TrigRatio& tr = A.comp[k1 * W.dim + k2];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (const auto& [r, c] : C[i][j].terms()) {
                        const cplx qshift = V.par.q_pow((double)(l + r));
                        auto add = [&](cplx x, int sx) {
                            for (const cplx y : s2.zeros[j][k2])
                                tr.push(y / (qshift * x), -(int)c * sx);
                            for (const cplx y : s2.poles[j][k2])
                                tr.push(y / (qshift * x), (int)c * sx);
                        };
                        for (const cplx x : s1.zeros[i][k1]) add(x, +1);
                        for (const cplx x : s1.poles[i][k1]) add(x, -1);
                    }
            if (tr.degree() != 0)
                throw std::runtime_error("loop coefficient matrix: degree mismatch");
        }
    return A;
}

cplx AbelianRQ::eigen_log(int k, cplx zeta) const {
    const TrigRatio& tr = afac[k];
    auto a = [&tr](cplx z) { return tr.eval(z); };
    const cplx prod = (side > 0) ? qdiff_log_plus(a, p, zeta) : qdiff_log_minus(a, p, zeta);
    return (double)eps * log_q * om[k] + prod;
}

Mat AbelianRQ::eval(cplx zeta) const {
    Vec d(dim());
    for (int k = 0; k < dim(); ++k) d(k) = std::exp(eigen_log(k, zeta));
    return P * d.asDiagonal() * Pinv;
}

AbelianRQ build_R0_qloop(const QLoopRep& V, const QLoopRep& W, int side) {
    AbelianOpQ A = build_A_qloop(V, W);
    const PsiSpectrum s1 = psi_spectrum(V), s2 = psi_spectrum(W);
    const Eigen::MatrixXd binv = omega_h_matrix(V.cartan);
    const int n = V.rank();

    AbelianRQ R;
    R.d1 = A.d1;
    R.d2 = A.d2;
    R.side = (side >= 0) ? +1 : -1;
    R.p = V.par.q_pow(2.0 * V.cartan.l);
    R.log_q = cplx(0.0, M_PI) * V.par.hbar;
    // the orbit p^{side n} zeta attracts to 0 (prefactor q^{+Om}) or to
    // infinity (prefactor q^{-Om})
    const bool to_zero = (R.side > 0) == (std::abs(R.p) < 1.0);
    R.eps = to_zero ? +1 : -1;
    R.P = A.P;
    R.Pinv = A.Pinv;
    R.afac = std::move(A.comp);
    R.om.assign(R.dim(), 0.0);
    for (int k1 = 0; k1 < R.d1; ++k1)
        for (int k2 = 0; k2 < R.d2; ++k2) {
            cplx o = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    o += binv(i, j) * s1.xi0_eigen(i, k1, V.par, V.cartan.d[i]) *
                         s2.xi0_eigen(j, k2, W.par, W.cartan.d[j]);
            R.om[k1 * R.d2 + k2] = o;
        }
    return R;
}

TwistData build_twist(const YangianRep& V1, const YangianRep& V2, int eps, int N, int M) {
    TwistData T;
    T.R = std::make_shared<AbelianR>(build_R0(V1, V2, eps, N));
    T.qkz = build_qkz2(*T.R, omega_h(V1, V2), V1.par.hbar, N, M);
    return T;
}

namespace {

std::vector<cplx> ring_avoiding(const std::vector<cplx>& avoid, int n) {
    double rad = 1.0;
    for (const cplx p : avoid) rad = std::max(rad, std::abs(p));
    std::vector<cplx> pts;
    int m = 0;
    while ((int)pts.size() < n) {
        const cplx z = (1.41 + 0.37 * (m % 5)) * rad * std::polar(1.0, 2.399 * (double)(m + 1));
        ++m;
        bool ok = true;
        for (const cplx p : avoid)
            if (std::abs(z - p) < 1e-3 * rad) ok = false;
        if (ok) pts.push_back(z);
    }
    return pts;
}

}  // namespace

double conjugation_defect(const QLoopRep& V, const QLoopRep& W, const Mat& J) {
    const Mat Jinv = J.inverse();
    std::vector<cplx> avoid = V.sigma;
    avoid.insert(avoid.end(), W.sigma.begin(), W.sigma.end());
    const auto zs = ring_avoiding(avoid, 5);

    double defect = 0.0;
    for (int i = 0; i < V.rank(); ++i)
        for (const cplx z : zs) {
            const Mat fields_v[3] = {V.psi[i].eval(z), V.xp[i].eval(z), V.xm[i].eval(z)};
            const Mat fields_w[3] = {W.psi[i].eval(z), W.xp[i].eval(z), W.xm[i].eval(z)};
            for (int f = 0; f < 3; ++f) {
                const double scale = std::max(1.0, fields_w[f].norm());
                defect = std::max(defect, (J * fields_v[f] * Jinv - fields_w[f]).norm() / scale);
            }
        }
    return defect;
}

double twist_intertwines(const YangianRep& V1, const YangianRep& V2, int eps, cplx s,
                         int N, int M) {
    const GammaConstants gc = choose_constants(V1.cartan, V1.par);
    const QLoopRep L1 = gamma_functor(V1, gc, N);
    const QLoopRep L2 = gamma_functor(V2, gc, N);
    const cplx zeta = std::exp(cplx(0.0, 2.0 * M_PI) * s);
    const QLoopRep T = qtensor(L1, L2, zeta);
    const QLoopRep L12 = gamma_functor(ytensor(V1, V2, s), gc, N);

    const TwistData td = build_twist(V1, V2, eps, N, M);
    return conjugation_defect(T, L12, td.twist(s));
}

}  // namespace yq
