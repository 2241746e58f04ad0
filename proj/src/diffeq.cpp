#include "yq/diffeq.hpp"

#include <cmath>
#include <stdexcept>

#include "yq/ratfun.hpp"
#include "yq/special.hpp"

namespace yq {

void RatioProduct::push(cplx z, int e) {
    if (e == 0) return;
    for (auto& f : fac) {
        if (std::abs(f.first - z) < 1e-10) {
            f.second += e;
            return;
        }
    }
    fac.push_back({z, e});
}

int RatioProduct::degree() const {
    int d = 0;
    for (const auto& f : fac) d += f.second;
    return d;
}

namespace {
cplx ipow(cplx z, int e) {
    if (e < 0) return 1.0 / ipow(z, -e);
    cplx v = 1.0;
    while (e-- > 0) v *= z;
    return v;
}
}  // namespace

cplx RatioProduct::eval(cplx s) const {
    cplx v = 1.0;
    for (const auto& f : fac) v *= ipow(s - f.first, f.second);
    return v;
}

cplx RatioProduct::log_eval(cplx s) const {
    cplx v = 0.0;
    for (const auto& f : fac) v += (double)f.second * std::log(s - f.first);
    return v;
}

cplx RatioProduct::c(int n) const {
    // log prod (s-z)^e = deg*log s + sum e log(1 - z/s); requires deg = 0
    cplx v = 0.0;
    for (const auto& f : fac) v -= (double)f.second * std::pow(f.first, (double)n);
    return v / (double)n;
}

std::vector<cplx> RatioProduct::locations() const {
    std::vector<cplx> out;
    for (const auto& f : fac) out.push_back(f.first);
    return out;
}

ScalarCanonical::ScalarCanonical(std::function<cplx(cplx)> a, cplx delta, Side side,
                                 int N, cplx c1, cplx l2, cplx l3, cplx l4, int n0)
    : a_(std::move(a)), delta_(delta), side_(side), N_(N), n0_(n0), c1_(c1),
      e2_(l2), e3_(l3), e4_(l4) {
    if (std::abs(c1) > 1e-13 && std::abs(delta - 1.0) > 1e-13)
        throw std::invalid_argument("regularized product requires unit step");
    if (n0_ != 0 && n0_ != 1) throw std::invalid_argument("n0 must be 0 or 1");
}

ScalarCanonical ScalarCanonical::from_ratio(const RatioProduct& rp, cplx delta,
                                            Side side, int N, int n0) {
    if (rp.degree() != 0) throw std::invalid_argument("factor degrees must cancel");
    RatioProduct copy = rp;
    // snap a residue term that vanishes only up to root-finding noise
    cplx c1 = rp.c(1);
    if (std::abs(c1) < 1e-9) c1 = 0.0;
    return ScalarCanonical([copy](cplx s) { return copy.eval(s); }, delta, side, N,
                           c1, rp.c(2), rp.c(3), rp.c(4), n0);
}

ScalarCanonical ScalarCanonical::fitted(std::function<cplx(cplx)> a, cplx delta,
                                        Side side, int N, int n0, const cplx* c1_known) {
    // fit log a(s) = c1/s + e2/s^2 + e3/s^3 + e4/s^4 at large arguments
    const cplx dir = std::polar(1.0, 0.45);
    const double s0 = 1.0e3;
    const int nsamp = c1_known ? 4 : 5;
    Eigen::MatrixXcd Mt(nsamp, nsamp);
    Eigen::VectorXcd rhs(nsamp);
    for (int j = 0; j < nsamp; ++j) {
        const cplx s = s0 * std::pow(2.0, j) * dir;
        cplx g = std::log(a(s));
        if (c1_known) g -= *c1_known / s;
        rhs(j) = g;
        const int plo = c1_known ? 2 : 1;
        for (int k = 0; k < nsamp; ++k) Mt(j, k) = std::pow(s, -(double)(plo + k));
    }
    const Eigen::VectorXcd sol = Mt.fullPivLu().solve(rhs);
    const int off = c1_known ? 0 : 1;
    const cplx c1 = c1_known ? *c1_known : sol(0);
    return ScalarCanonical(std::move(a), delta, side, N, c1, sol(off), sol(off + 1),
                           sol(off + 2), n0);
}

cplx ScalarCanonical::log_at(cplx s) const {
    cplx acc = 0.0;
    if (side_ == Side::right) {
        acc = euler_gamma * c1_;
        for (int n = n0_; n <= N_; ++n) {
            acc += std::log(a_(s + (double)n * delta_));
            if (n >= 1) acc -= c1_ / (double)n;
        }
        const cplx w = (double)(N_ + 1) + s / delta_;
        const cplx d2 = delta_ * delta_;
        acc += c1_ * (digamma((double)(N_ + 1)) - digamma(w));
        acc += e2_ / d2 * trigamma(w);
        acc -= e3_ / (d2 * delta_) * tetragamma(w) / 2.0;
        acc += e4_ / (d2 * d2) * pentagamma(w) / 6.0;
    } else {
        acc = -euler_gamma * c1_;
        for (int n = 1; n <= N_; ++n)
            acc += std::log(a_(s - (double)n * delta_)) + c1_ / (double)n;
        const cplx w = (double)(N_ + 1) - s / delta_;
        const cplx d2 = delta_ * delta_;
        acc += c1_ * (digamma(w) - digamma((double)(N_ + 1)));
        acc += e2_ / d2 * trigamma(w);
        acc += e3_ / (d2 * delta_) * tetragamma(w) / 2.0;
        acc += e4_ / (d2 * d2) * pentagamma(w) / 6.0;
    }
    return acc;
}

cplx two_sided_log(const std::function<cplx(cplx)>& a, int M,
                   cplx c1, cplx e2, cplx e3, cplx e4, cplx s) {
    cplx acc = 0.0;
    for (int m = -M; m <= M; ++m) acc += std::log(a(s + (double)m));
    const cplx wp = (double)(M + 1) + s, wm = (double)(M + 1) - s;
    acc += c1 * (digamma(wm) - digamma(wp));
    acc += e2 * (trigamma(wp) + trigamma(wm));
    acc += e3 * (tetragamma(wm) - tetragamma(wp)) / 2.0;
    acc += e4 * (pentagamma(wp) + pentagamma(wm)) / 6.0;
    return acc;
}

cplx two_sided_log(const RatioProduct& rp, int M, cplx s) {
    return two_sided_log([&rp](cplx u) { return rp.eval(u); }, M,
                         rp.c(1), rp.c(2), rp.c(3), rp.c(4), s);
}

cplx qdiff_log_plus(const std::function<cplx(cplx)>& a, cplx p, cplx z,
                    double tol, int max_terms) {
    cplx acc = 0.0, w = z;
    double prev = 1e300;
    for (int n = 0; n < max_terms; ++n) {
        const cplx t = std::log(a(w));
        acc -= t;
        const double m = std::abs(t);
        // terms decay geometrically until they hit the rounding floor of the
        // factored evaluation, which may sit above tol; a tiny non-decreasing
        // term means the product has converged to machine precision
        if (n > 3 && (m < tol || (m < 1e-10 && m >= prev))) return acc;
        prev = m;
        w *= p;
    }
    throw std::runtime_error("q-difference product did not converge");
}

cplx qdiff_log_minus(const std::function<cplx(cplx)>& a, cplx p, cplx z,
                     double tol, int max_terms) {
    cplx acc = 0.0, w = z / p;
    double prev = 1e300;
    for (int n = 1; n < max_terms; ++n) {
        const cplx t = std::log(a(w));
        acc += t;
        const double m = std::abs(t);
        if (n > 3 && (m < tol || (m < 1e-10 && m >= prev))) return acc;
        prev = m;
        w /= p;
    }
    throw std::runtime_error("q-difference product did not converge");
}

Mat NodeConnection::g_plus(cplx u) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = gp[k].value_at(u);
    return P * d.asDiagonal() * Pinv;
}

Mat NodeConnection::g_minus(cplx u) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = gm[k].value_at(u);
    return P * d.asDiagonal() * Pinv;
}

Mat NodeConnection::connection(cplx u) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = connection_scalar(k, u);
    return P * d.asDiagonal() * Pinv;
}

cplx NodeConnection::connection_scalar(int k, cplx u) const {
    return gp[k].value_at(u) * lam[k].eval(u) * gm[k].value_at(u);
}

cplx NodeConnection::sine_ratio(int k, cplx u) const {
    const double pi = 3.14159265358979323846;
    cplx v = 1.0;
    for (const auto& f : lam[k].fac)
        v *= std::pow(std::sin(pi * (u - f.first)), (double)f.second);
    return v;
}

NodeConnection connection_matrix(const YangianRep& V, int node, int N) {
    const StarLog sl = star_log(V.xi[node], true);
    NodeConnection nc;
    nc.dim = sl.dim;
    nc.P = sl.P;
    nc.Pinv = sl.Pinv;
    for (int k = 0; k < sl.dim; ++k) {
        RatioProduct rp;
        for (const cplx z : sl.zeros[k]) rp.push(z, 1);
        for (const cplx p : sl.poles[k]) rp.push(p, -1);
        if (rp.degree() != 0)
            throw std::runtime_error("eigenvalue zero/pole counts do not match");
        nc.lam.push_back(rp);
        nc.gp.push_back(ScalarCanonical::from_ratio(rp, 1.0, Side::right, N, 1));
        nc.gm.push_back(ScalarCanonical::from_ratio(rp, 1.0, Side::left, N, 1));
    }
    return nc;
}

}  // namespace yq
