#include "yq/gamma.hpp"

#include <cmath>
#include <stdexcept>

#include "yq/diffeq.hpp"
#include "yq/special.hpp"

namespace yq {

namespace {

const double pi = 3.14159265358979323846264338327950288;
const cplx twopii(0.0, 2.0 * pi);

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    const cplx b = n >= 0 ? z : 1.0 / z;
    for (int k = std::abs(n); k > 0; --k) r *= b;
    return r;
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * double(n - k + j) / double(j);
    return r;
}

// factored eigenvalue of the connection matrix as a function of z = e^{2 pi i u}:
//   prod_f sin(pi(u - a_f))^{e_f} = e^{i pi sum a_f e_f} prod_f (1 - z/b_f)^{e_f}
// with b_f = e^{2 pi i a_f} (total exponent is zero, so the u-dependent
// prefactors of the sines cancel)
struct TrigEigen {
    cplx pref = 1.0;
    std::vector<std::pair<cplx, int>> fac;  // (b_f, net exponent)

    cplx eval(cplx z) const {
        cplx r = pref;
        for (const auto& [b, e] : fac) r *= ipow(1.0 - z / b, e);
        return r;
    }
    cplx at_inf() const {
        cplx r = pref;
        for (const auto& [b, e] : fac) r *= ipow(-1.0 / b, e);
        return r;
    }
};

TrigEigen trig_eigen(const RatioProduct& lam) {
    TrigEigen t;
    for (const auto& [a, e] : lam.fac) {
        t.pref *= std::exp(cplx(0.0, pi) * a * (double)e);
        const cplx b = std::exp(twopii * a);
        bool merged = false;
        for (auto& [b0, e0] : t.fac)
            if (std::abs(b - b0) < 1e-9 * std::abs(b0)) {
                e0 += e;
                merged = true;
                break;
            }
        if (!merged) t.fac.emplace_back(b, e);
    }
    std::erase_if(t.fac, [](const auto& f) { return f.second == 0; });
    return t;
}

// partial-fraction coefficients of one pole of a factored scalar function,
// extracted by circle quadrature
std::vector<cplx> scalar_principal_part(const TrigEigen& f, cplx b, int ord, double radius) {
    std::vector<cplx> co(ord);
    for (int n = 1; n <= ord; ++n) {
        auto g = [&](cplx z) {
            Mat m(1, 1);
            m(0, 0) = f.eval(z) * ipow(z - b, n - 1);
            return m;
        };
        co[n - 1] = contour_integral_quad(g, {b}, radius, 1e-12, 4096)(0, 0);
    }
    return co;
}

}  // namespace

GammaConstants choose_constants(const CartanData& cd, const GlobalParams& par) {
    GammaConstants c;
    for (int i = 0; i < cd.rank; ++i) {
        const cplx hd = par.hbar * (double)cd.d[i];
        if (std::abs(hd.imag()) < 1e-12 &&
            std::abs(hd.real() - std::round(hd.real())) < 1e-12 && hd.real() < 0.5)
            throw std::invalid_argument("choose_constants: Gamma pole at hbar d_i");
        const cplx v = std::sqrt(cplx((double)cd.d[i])) * gamma_fn(hd);
        c.cp.push_back(v);
        c.cm.push_back(v);
    }
    return c;
}

QLoopRep gamma_functor(const YangianRep& V, const GammaConstants& c, int N) {
    if (!is_noncongruent({&V}))
        throw std::invalid_argument("gamma_functor: representation is congruent");

    QLoopRep out;
    out.cartan = V.cartan;
    out.par = V.par;
    out.dim = V.dim;

    const std::vector<cplx> support = spectral_support(V);

    for (int i = 0; i < V.rank(); ++i) {
        const NodeConnection nc = connection_matrix(V, i, N);

        // --- psi from the closed form of the connection eigenvalues
        std::vector<TrigEigen> te;
        for (int k = 0; k < nc.dim; ++k) te.push_back(trig_eigen(nc.lam[k]));

        // distinct pole/zero locations in z across eigenvalues
        std::vector<cplx> zpoles;
        auto note_pole = [&zpoles](cplx b) {
            for (const cplx p : zpoles)
                if (std::abs(p - b) < 1e-9 * std::abs(b)) return;
            zpoles.push_back(b);
        };
        for (const auto& t : te)
            for (const auto& [b, e] : t.fac)
                if (e < 0) note_pole(b);

        Mat cst = Mat::Zero(V.dim, V.dim);
        for (int k = 0; k < nc.dim; ++k) cst += te[k].at_inf() * nc.P.col(k) * nc.Pinv.row(k);
        RationalMatrixFunction psi(cst);

        for (const cplx b : zpoles) {
            double gap = 0.5 * std::abs(b);
            for (const auto& t : te)
                for (const auto& [b2, e2] : t.fac)
                    if (e2 < 0 && std::abs(b2 - b) > 1e-9 * std::abs(b))
                        gap = std::min(gap, 0.5 * std::abs(b2 - b));
            for (int k = 0; k < nc.dim; ++k) {
                int ord = 0;
                for (const auto& [b2, e2] : te[k].fac)
                    if (e2 < 0 && std::abs(b2 - b) < 1e-9 * std::abs(b)) ord = -e2;
                if (ord == 0) continue;
                const auto co = scalar_principal_part(te[k], b, ord, gap);
                const Mat proj = nc.P.col(k) * nc.Pinv.row(k);
                for (int n = 1; n <= ord; ++n) psi.add_pole_term(b, n, co[n - 1] * proj);
            }
        }
        psi.prune();

        // sanity: the closed form must agree with the regularized product
        {
            const cplx u0(0.31, 0.17);
            const Mat direct = nc.connection(u0);
            const Mat viaz = psi.eval(std::exp(twopii * u0));
            if ((direct - viaz).norm() > 1e-6 * direct.norm())
                throw std::runtime_error("gamma_functor: connection closed form mismatch");
        }
        out.psi.push_back(psi);

        // --- x^pm by mode quadrature over the pole support of x_i^pm
        for (int sg : {+1, -1}) {
            const RationalMatrixFunction& X = sg > 0 ? V.xp[i] : V.xm[i];
            const cplx cc = sg > 0 ? c.cp[i] : c.cm[i];
            const std::vector<cplx> locs = X.pole_locations();
            if (locs.empty()) {
                (sg > 0 ? out.xp : out.xm).push_back(RationalMatrixFunction::zero(V.dim));
                continue;
            }

            // circle radius: clear of the other support points and of all
            // nearby integer translates of the support
            double rad = 0.2;
            for (const cplx p : locs)
                for (const cplx q : support)
                    for (int m = -6; m <= 6; ++m) {
                        if (m == 0 && std::abs(p - q) < 1e-12) continue;
                        rad = std::min(rad, 0.5 * std::abs(p - (q + (double)m)));
                    }
            if (rad < 1e-4)
                throw std::invalid_argument("gamma_functor: pole support too congested");

            int degree = 0;
            for (const cplx p : locs) degree += X.pole_order(p);
            const int K = degree + 2;

            std::vector<Mat> modes(2 * K + 1);
            for (int k = -K; k <= K; ++k) {
                auto f = [&](cplx u) -> Mat {
                    const Mat g = sg > 0 ? nc.g_plus(u) : nc.g_minus(u);
                    return std::exp(twopii * (double)k * u) * (g * X.eval(u));
                };
                modes[k + K] = cc * contour_integral_quad(f, locs, rad, 1e-12, 4096);
            }

            // least-squares reconstruction of the rational field from its
            // modes; poles sit at e^{2 pi i p} with the order inherited from
            // x_i^pm (the half product is regular on the contour interiors)
            std::vector<std::pair<cplx, int>> zp;
            for (const cplx p : locs) zp.emplace_back(std::exp(twopii * p), X.pole_order(p));
            int cols = 1;
            for (const auto& [b, o] : zp) cols += o;

            const int rows = 2 * K + 2;  // all modes plus the value-at-0 constraint
            Eigen::MatrixXcd Phi = Eigen::MatrixXcd::Zero(rows, cols);
            Eigen::MatrixXcd B(rows, V.dim * V.dim);
            for (int k = 0; k <= K; ++k) {
                int col = 0;
                if (k == 0) Phi(k, 0) = 1.0;
                ++col;
                for (const auto& [b, o] : zp)
                    for (int n = 1; n <= o; ++n, ++col)
                        if (k >= n) Phi(k, col) = binom(k - 1, n - 1) * ipow(b, k - n);
                B.row(k) = modes[k + K].reshaped().transpose();
            }
            for (int m = 1; m <= K; ++m) {
                const int row = K + m;
                int col = 1;
                for (const auto& [b, o] : zp)
                    for (int n = 1; n <= o; ++n, ++col) {
                        const double sgn = (n % 2) ? 1.0 : -1.0;  // -(-1)^n
                        Phi(row, col) = sgn * binom(n + m - 1, m) * ipow(b, -(n + m));
                    }
                B.row(row) = modes[-m + K].reshaped().transpose();
            }
            {  // value at z = 0 vanishes
                const int row = 2 * K + 1;
                int col = 0;
                Phi(row, col++) = 1.0;
                for (const auto& [b, o] : zp)
                    for (int n = 1; n <= o; ++n, ++col)
                        Phi(row, col) = ((n % 2) ? -1.0 : 1.0) * ipow(b, -n);
                B.row(row).setZero();
            }

            const Eigen::MatrixXcd A = Phi.colPivHouseholderQr().solve(B);
            const double resid = (Phi * A - B).norm() / std::max(B.norm(), 1e-30);
            if (resid > 1e-6)
                throw std::runtime_error("gamma_functor: rational reconstruction failed");

            RationalMatrixFunction f(Mat(A.row(0).reshaped(V.dim, V.dim)));
            int col = 1;
            for (const auto& [b, o] : zp)
                for (int n = 1; n <= o; ++n, ++col)
                    f.add_pole_term(b, n, Mat(A.row(col).reshaped(V.dim, V.dim)));
            f.prune();
            (sg > 0 ? out.xp : out.xm).push_back(f);
        }
    }

    // pole support in the z-plane: poles of psi^{+-1} and of x^pm
    auto note_sigma = [&out](cplx b) {
        for (const cplx p : out.sigma)
            if (std::abs(p - b) < 1e-9 * std::abs(b)) return;
        out.sigma.push_back(b);
    };
    for (int i = 0; i < V.rank(); ++i) {
        const NodeConnection nc = connection_matrix(V, i, 8);
        for (int k = 0; k < nc.dim; ++k)
            for (const auto& [a, e] : nc.lam[k].fac) note_sigma(std::exp(twopii * a));
        for (const cplx p : out.xp[i].pole_locations()) note_sigma(p);
        for (const cplx p : out.xm[i].pole_locations()) note_sigma(p);
    }
    return out;
}

double gamma_shift_check(const YangianRep& V, cplx a, const GammaConstants& c, int N) {
    const QLoopRep lhs = gamma_functor(shift_rep(V, a), c, N);
    const QLoopRep rhs = ql_scale(gamma_functor(V, c, N), std::exp(twopii * a));

    double rad = 1.0;
    for (const cplx p : rhs.sigma) rad = std::max(rad, std::abs(p));
    double worst = 0.0;
    for (int i = 0; i < V.rank(); ++i)
        for (int m = 0; m < 5; ++m) {
            const cplx z = (1.61 + 0.23 * m) * rad * std::polar(1.0, 2.399 * (m + 1));
            worst = std::max(worst, (lhs.psi[i].eval(z) - rhs.psi[i].eval(z)).norm() /
                                        std::max(1.0, rhs.psi[i].eval(z).norm()));
            worst = std::max(worst, (lhs.xp[i].eval(z) - rhs.xp[i].eval(z)).norm() /
                                        std::max(1.0, rhs.xp[i].eval(z).norm()));
            worst = std::max(worst, (lhs.xm[i].eval(z) - rhs.xm[i].eval(z)).norm() /
                                        std::max(1.0, rhs.xm[i].eval(z).norm()));
        }
    return worst;
}

}  // namespace yq
