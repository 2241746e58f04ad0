#include "yq/ratfun.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace yq {

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

void RationalMatrixFunction::add_pole_term(cplx p, int order, const Mat& c) {
    if (order < 1) throw std::invalid_argument("add_pole_term: order must be >= 1");
    for (auto& pl : poles) {
        if (std::abs(pl.loc - p) < merge_tol) {
            if ((int)pl.coef.size() < order) pl.coef.resize(order, Mat::Zero(dim, dim));
            pl.coef[order - 1] += c;
            return;
        }
    }
    Pole pl;
    pl.loc = p;
    pl.coef.assign(order, Mat::Zero(dim, dim));
    pl.coef[order - 1] = c;
    poles.push_back(std::move(pl));
}

void RationalMatrixFunction::prune(double tol) {
    double scale = constant.norm();
    for (auto& pl : poles)
        for (auto& c : pl.coef) scale = std::max(scale, c.norm());
    if (scale == 0.0) scale = 1.0;
    for (auto& pl : poles) {
        for (auto& c : pl.coef)
            if (c.norm() < tol * scale) c.setZero();
        while (!pl.coef.empty() && pl.coef.back().norm() == 0.0) pl.coef.pop_back();
    }
    std::erase_if(poles, [](const Pole& pl) {
        for (auto& c : pl.coef)
            if (c.norm() != 0.0) return false;
        return true;
    });
}

Mat RationalMatrixFunction::eval(cplx u) const {
    Mat r = constant;
    for (auto& pl : poles) {
        const cplx d = u - pl.loc;
        cplx inv = 1.0 / d;
        cplx w = inv;
        for (auto& c : pl.coef) {
            r += w * c;
            w *= inv;
        }
    }
    return r;
}

RationalMatrixFunction RationalMatrixFunction::shifted(cplx a) const {
    RationalMatrixFunction r = *this;
    for (auto& pl : r.poles) pl.loc += a;
    return r;
}

RationalMatrixFunction RationalMatrixFunction::dilated(cplx alpha) const {
    // (u/alpha - p)^{-n} = alpha^n (u - alpha p)^{-n}
    RationalMatrixFunction r = *this;
    for (auto& pl : r.poles) {
        pl.loc *= alpha;
        cplx an = 1.0;
        for (auto& c : pl.coef) {
            an *= alpha;
            c *= an;
        }
    }
    return r;
}

RationalMatrixFunction RationalMatrixFunction::derivative() const {
    RationalMatrixFunction r = zero(dim);
    for (auto& pl : poles)
        for (int n = 1; n <= (int)pl.coef.size(); ++n)
            r.add_pole_term(pl.loc, n + 1, -double(n) * pl.coef[n - 1]);
    return r;
}

int RationalMatrixFunction::pole_order(cplx p) const {
    for (auto& pl : poles)
        if (std::abs(pl.loc - p) < merge_tol) return (int)pl.coef.size();
    return 0;
}

std::vector<cplx> RationalMatrixFunction::pole_locations() const {
    std::vector<cplx> r;
    r.reserve(poles.size());
    for (auto& pl : poles) r.push_back(pl.loc);
    return r;
}

static double binom_neg(int m, int t) {
    // coefficient of x^t in (1+x)^{-m}: (-1)^t C(m+t-1, t)
    double b = 1.0;
    for (int i = 1; i <= t; ++i) b *= double(m + i - 1) / i;
    return (t % 2 == 0) ? b : -b;
}

std::vector<Mat> RationalMatrixFunction::laurent(cplx p, int nmin, int nmax) const {
    std::vector<Mat> out(nmax - nmin + 1, Mat::Zero(dim, dim));
    auto at = [&](int n) -> Mat& { return out[n - nmin]; };
    if (nmin <= 0 && 0 <= nmax) at(0) += constant;
    for (auto& pl : poles) {
        if (std::abs(pl.loc - p) < merge_tol) {
            for (int m = 1; m <= (int)pl.coef.size(); ++m)
                if (nmin <= -m && -m <= nmax) at(-m) += pl.coef[m - 1];
        } else {
            const cplx base = p - pl.loc;
            for (int m = 1; m <= (int)pl.coef.size(); ++m)
                for (int t = std::max(0, nmin); t <= nmax; ++t)
                    at(t) += binom_neg(m, t) * std::pow(base, cplx(-m - t)) * pl.coef[m - 1];
        }
    }
    return out;
}

RationalMatrixFunction& RationalMatrixFunction::operator+=(const RationalMatrixFunction& o) {
    if (dim != o.dim) throw std::invalid_argument("dimension mismatch");
    constant += o.constant;
    for (auto& pl : o.poles)
        for (int n = 1; n <= (int)pl.coef.size(); ++n) add_pole_term(pl.loc, n, pl.coef[n - 1]);
    return *this;
}

RationalMatrixFunction& RationalMatrixFunction::operator-=(const RationalMatrixFunction& o) {
    if (dim != o.dim) throw std::invalid_argument("dimension mismatch");
    constant -= o.constant;
    for (auto& pl : o.poles)
        for (int n = 1; n <= (int)pl.coef.size(); ++n) add_pole_term(pl.loc, n, -pl.coef[n - 1]);
    return *this;
}

RationalMatrixFunction& RationalMatrixFunction::operator*=(cplx c) {
    constant *= c;
    for (auto& pl : poles)
        for (auto& m : pl.coef) m *= c;
    return *this;
}

RationalMatrixFunction operator*(const RationalMatrixFunction& a, const RationalMatrixFunction& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
    RationalMatrixFunction r(Mat(a.constant * b.constant));
    // union of pole locations, merged
    std::vector<cplx> locs;
    for (auto& pl : a.poles) locs.push_back(pl.loc);
    for (auto& pl : b.poles) {
        bool found = false;
        for (auto& q : locs)
            if (std::abs(q - pl.loc) < RationalMatrixFunction::merge_tol) { found = true; break; }
        if (!found) locs.push_back(pl.loc);
    }
    for (auto& p : locs) {
        const int ka = a.pole_order(p), kb = b.pole_order(p);
        const int k = ka + kb;
        auto A = a.laurent(p, -ka, kb - 1);
        auto B = b.laurent(p, -kb, ka - 1);
        for (int n = 1; n <= k; ++n) {
            Mat c = Mat::Zero(a.dim, a.dim);
            for (int i = -ka; i <= kb - n; ++i) {
                const int j = -n - i;
                if (j < -kb || j > ka - 1) continue;
                c += A[i + ka] * B[j + kb];
            }
            if (c.norm() > 0) r.add_pole_term(p, n, c);
        }
    }
    r.prune();
    return r;
}

RationalMatrixFunction RationalMatrixFunction::lmul(const Mat& m) const {
    RationalMatrixFunction r = *this;
    r.constant = m * r.constant;
    for (auto& pl : r.poles)
        for (auto& c : pl.coef) c = m * c;
    return r;
}

RationalMatrixFunction RationalMatrixFunction::rmul(const Mat& m) const {
    RationalMatrixFunction r = *this;
    r.constant = r.constant * m;
    for (auto& pl : r.poles)
        for (auto& c : pl.coef) c = c * m;
    return r;
}

RationalMatrixFunction RationalMatrixFunction::kron_left(int right_dim) const {
    RationalMatrixFunction r;
    r.dim = dim * right_dim;
    const Mat id = Mat::Identity(right_dim, right_dim);
    r.constant = kron(constant, id);
    for (auto& pl : poles) {
        Pole np;
        np.loc = pl.loc;
        for (auto& c : pl.coef) np.coef.push_back(kron(c, id));
        r.poles.push_back(std::move(np));
    }
    return r;
}

RationalMatrixFunction RationalMatrixFunction::kron_right(int left_dim) const {
    RationalMatrixFunction r;
    r.dim = dim * left_dim;
    const Mat id = Mat::Identity(left_dim, left_dim);
    r.constant = kron(id, constant);
    for (auto& pl : poles) {
        Pole np;
        np.loc = pl.loc;
        for (auto& c : pl.coef) np.coef.push_back(kron(id, c));
        r.poles.push_back(std::move(np));
    }
    return r;
}

Mat contour_integral(const RationalMatrixFunction& F, const std::vector<cplx>& enclosed,
                     const std::function<cplx(cplx, int)>& weight_deriv) {
    Mat r = Mat::Zero(F.dim, F.dim);
    for (auto& p : enclosed) {
        for (auto& pl : F.poles) {
            if (std::abs(pl.loc - p) >= RationalMatrixFunction::merge_tol) continue;
            double fact = 1.0;
            for (int n = 1; n <= (int)pl.coef.size(); ++n) {
                if (n > 1) fact *= (n - 1);
                r += pl.coef[n - 1] * (weight_deriv(pl.loc, n - 1) / fact);
            }
        }
    }
    return r;
}

Mat contour_integral_quad(const std::function<Mat(cplx)>& f, const std::vector<cplx>& centers,
                          double radius, double tol, int max_points) {
    const double pi2 = 6.28318530717958647692528676655900577;
    Mat total;
    bool first_center = true;
    for (auto& c : centers) {
        Mat prev;
        bool have_prev = false;
        for (int n = 64; n <= max_points; n *= 2) {
            Mat acc;
            for (int k = 0; k < n; ++k) {
                const cplx w = radius * std::exp(cplx(0, pi2 * k / n));
                Mat v = f(c + w) * w;
                if (k == 0) acc = v; else acc += v;
            }
            acc /= double(n);
            if (have_prev && (acc - prev).norm() <= tol * std::max(1.0, acc.norm())) {
                prev = acc;
                break;
            }
            prev = acc;
            have_prev = true;
        }
        if (first_center) { total = prev; first_center = false; }
        else total += prev;
    }
    return total;
}

CommutingBasis common_eigenbasis(const std::vector<const RationalMatrixFunction*>& family,
                                 const std::vector<cplx>& sample_points, double tol) {
    if (family.empty() || sample_points.empty())
        throw std::invalid_argument("common_eigenbasis: empty input");
    const int d = family[0]->dim;
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    Mat M = Mat::Zero(d, d);
    for (auto* F : family)
        for (auto& u : sample_points) M += cplx(U(rng), U(rng)) * F->eval(u);
    Eigen::ComplexEigenSolver<Mat> es(M);
    if (es.info() != Eigen::Success) throw std::runtime_error("common_eigenbasis: eigensolver failed");
    Mat P = es.eigenvectors();
    Eigen::FullPivLU<Mat> lu(P);
    if (!lu.isInvertible()) throw std::runtime_error("common_eigenbasis: defective family");
    Mat Pinv = lu.inverse();
    for (auto* F : family) {
        for (auto& u : sample_points) {
            Mat D = Pinv * F->eval(u) * P;
            Mat off = D - Mat(D.diagonal().asDiagonal());
            if (off.norm() > tol * std::max(1.0, D.norm()))
                throw std::runtime_error("common_eigenbasis: family not simultaneously diagonalizable");
        }
    }
    return {P, Pinv};
}

cplx ScalarRat::eval(cplx u) const {
    cplx r = constant;
    for (auto& pl : poles) {
        const cplx inv = 1.0 / (u - pl.loc);
        cplx w = inv;
        for (auto& c : pl.coef) {
            r += w * c;
            w *= inv;
        }
    }
    return r;
}

ScalarRat diagonal_entry(const RationalMatrixFunction& F, const CommutingBasis& B, int k) {
    ScalarRat f;
    f.constant = (B.Pinv * F.constant * B.P)(k, k);
    double scale = std::abs(f.constant);
    for (auto& pl : F.poles) {
        ScalarRat::Pole np;
        np.loc = pl.loc;
        for (auto& c : pl.coef) {
            np.coef.push_back((B.Pinv * c * B.P)(k, k));
            scale = std::max(scale, std::abs(np.coef.back()));
        }
        f.poles.push_back(std::move(np));
    }
    if (scale == 0.0) scale = 1.0;
    for (auto& pl : f.poles) {
        for (auto& c : pl.coef)
            if (std::abs(c) < 1e-11 * scale) c = 0.0;
        while (!pl.coef.empty() && pl.coef.back() == 0.0) pl.coef.pop_back();
    }
    std::erase_if(f.poles, [](const ScalarRat::Pole& pl) {
        for (auto& c : pl.coef)
            if (c != 0.0) return false;
        return true;
    });
    return f;
}

std::vector<cplx> scalar_zeros(const ScalarRat& f, double tol) {
    int deg = 0;
    double rad = 1.0;
    for (auto& pl : f.poles) {
        deg += (int)pl.coef.size();
        rad = std::max(rad, std::abs(pl.loc));
    }
    if (deg == 0) return {};
    // numerator N(u) = f(u) prod (u - p)^ord, degree deg when f(inf) != 0
    const double R = 2.0 * rad + 3.0;
    const int npts = deg + 1;
    Eigen::MatrixXcd V(npts, npts);
    Eigen::VectorXcd rhs(npts);
    for (int s = 0; s < npts; ++s) {
        const cplx u = R * std::exp(cplx(0, 2 * M_PI * (s + 0.375) / npts));
        cplx prod = 1.0;
        for (auto& pl : f.poles)
            for (size_t m = 0; m < pl.coef.size(); ++m) prod *= (u - pl.loc);
        rhs(s) = f.eval(u) * prod;
        cplx w = 1.0;
        for (int j = 0; j < npts; ++j) {
            V(s, j) = w;
            w *= u;
        }
    }
    Eigen::VectorXcd c = V.colPivHouseholderQr().solve(rhs);
    if (std::abs(c(deg)) < tol * c.cwiseAbs().maxCoeff())
        throw std::runtime_error("scalar_zeros: vanishing leading coefficient");
    // companion matrix roots
    Mat comp = Mat::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c(i) / c(deg);
    Eigen::ComplexEigenSolver<Mat> es(comp);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
    return roots;
}

Mat StarLog::eval_additive(cplx u) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = eval_additive_scalar(k, u);
    return P * d.asDiagonal() * Pinv;
}

cplx StarLog::eval_additive_scalar(int k, cplx u) const {
    cplx s = 0.0;
    for (auto& a : zeros[k]) s += std::log(1.0 - a / u);
    for (auto& b : poles[k]) s -= std::log(1.0 - b / u);
    return s;
}

Mat StarLog::eval_trig(cplx w) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = eval_trig_scalar(k, w);
    return P * d.asDiagonal() * Pinv;
}

cplx StarLog::eval_trig_scalar(int k, cplx w) const {
    cplx s = 0.0;
    for (auto& a : zeros[k]) s += std::log(1.0 - w / a);
    for (auto& b : poles[k]) s -= std::log(1.0 - w / b);
    return s;
}

RationalMatrixFunction StarLog::log_derivative() const {
    RationalMatrixFunction r = RationalMatrixFunction::zero(dim);
    for (int k = 0; k < dim; ++k) {
        Mat proj = P.col(k) * Pinv.row(k);
        for (auto& a : zeros[k]) r.add_pole_term(a, 1, proj);
        for (auto& b : poles[k]) r.add_pole_term(b, 1, -proj);
    }
    r.prune();
    return r;
}

StarLog star_log(const RationalMatrixFunction& F, bool require_inf_one, double tol) {
    std::vector<cplx> samples;
    double rad = 1.0;
    for (auto& pl : F.poles) rad = std::max(rad, std::abs(pl.loc));
    for (int k = 0; k < 5; ++k)
        samples.push_back((2.0 * rad + 1.7) * std::exp(cplx(0.1 + 0.13 * k, 1.1 * k + 0.37)));
    CommutingBasis B = common_eigenbasis({&F}, samples, tol);
    StarLog sl;
    sl.P = B.P;
    sl.Pinv = B.Pinv;
    sl.dim = F.dim;
    sl.zeros.resize(F.dim);
    sl.poles.resize(F.dim);
    sl.lead.resize(F.dim);
    for (int k = 0; k < F.dim; ++k) {
        ScalarRat lam = diagonal_entry(F, B, k);
        sl.lead[k] = lam.constant;
        if (require_inf_one && std::abs(lam.constant - 1.0) > tol)
            throw std::runtime_error("star_log: eigenvalue not 1 at infinity");
        sl.zeros[k] = scalar_zeros(lam);
        for (auto& pl : lam.poles)
            for (size_t m = 0; m < pl.coef.size(); ++m) sl.poles[k].push_back(pl.loc);
        if (require_inf_one && sl.zeros[k].size() != sl.poles[k].size())
            throw std::runtime_error("star_log: zero/pole count mismatch");
    }
    return sl;
}

RationalMatrixFunction log_unipotent(const RationalMatrixFunction& F, double tol) {
    RationalMatrixFunction N = F;
    N.constant -= Mat::Identity(F.dim, F.dim);
    RationalMatrixFunction term = N, result = N;
    for (int k = 2; k <= 2 * F.dim + 2; ++k) {
        term = term * N;
        double sz = term.constant.norm();
        for (auto& pl : term.poles)
            for (auto& c : pl.coef) sz = std::max(sz, c.norm());
        if (sz < tol) return result;
        result += (k % 2 == 0 ? cplx(-1.0 / k) : cplx(1.0 / k)) * term;
    }
    throw std::runtime_error("log_unipotent: series did not terminate (input not unipotent)");
}

}  // namespace yq
