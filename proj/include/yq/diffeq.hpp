#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "yq/yangian.hpp"

namespace yq {

// Scalar rational function given in factored form, prod_f (s - z_f)^{e_f},
// with total degree sum(e_f) = 0 so that the value at infinity is 1.
struct RatioProduct {
    std::vector<std::pair<cplx, int>> fac;

    void push(cplx z, int e);
    int degree() const;
    cplx eval(cplx s) const;
    // sum of principal-branch logs of the factors; exp(log_eval) == eval
    cplx log_eval(cplx s) const;
    // coefficient of s^{-n} in the expansion of log at infinity, n >= 1
    cplx c(int n) const;
    // all factor locations (for pole/zero avoidance checks)
    std::vector<cplx> locations() const;
};

enum class Side { right, left };

// Log of a regularized one-sided product for the additive difference equation
//   f(s + delta) = a(s) f(s),   log a(s) = c1/s + l2/s^2 + l3/s^3 + ...
//
//   right: log of  e^{+gamma c1} prod_{n>=n0} a(s + n delta) e^{-c1/n}   (n0 = 0 or 1)
//   left:  log of  e^{-gamma c1} prod_{n>=1}  a(s - n delta) e^{+c1/n}
//
// The e^{c1/n} factors and Euler constant are the standard Gamma-style
// regularization; when c1 = 0 they drop out and any step delta is allowed.
// When c1 != 0 the step must be 1. Truncation at N terms is corrected by
// polygamma tails through fourth order, giving O(N^-5) accuracy.
class ScalarCanonical {
public:
    ScalarCanonical(std::function<cplx(cplx)> a, cplx delta, Side side, int N,
                    cplx c1, cplx l2, cplx l3, cplx l4, int n0 = 1);
    static ScalarCanonical from_ratio(const RatioProduct& rp, cplx delta, Side side,
                                      int N, int n0 = 1);
    // fits c1 (optionally fixed), c2, c3 from samples of a at large argument
    static ScalarCanonical fitted(std::function<cplx(cplx)> a, cplx delta, Side side,
                                  int N, int n0 = 1, const cplx* c1_known = nullptr);

    cplx log_at(cplx s) const;
    cplx value_at(cplx s) const { return std::exp(log_at(s)); }
    cplx c1() const { return c1_; }
    cplx l2() const { return e2_; }
    cplx l3() const { return e3_; }
    cplx l4() const { return e4_; }

private:
    std::function<cplx(cplx)> a_;
    cplx delta_;
    Side side_;
    int N_, n0_;
    cplx c1_, e2_, e3_, e4_;  // 1/s^2 .. 1/s^4 coefficients of log a
};

// Log of the two-sided product prod_{m in Z} a(s + m), truncated at |m| <= M
// with symmetric polygamma tails; c1, l2, l3, l4 are the
// expansion coefficients of log a at infinity.
cplx two_sided_log(const std::function<cplx(cplx)>& a, int M,
                   cplx c1, cplx l2, cplx l3, cplx l4, cplx s);
cplx two_sided_log(const RatioProduct& rp, int M, cplx s);

// Logs of the canonical solutions of the q-difference equation
//   f(p z) = a(z) f(z)
// with a regular and equal to 1 at the attracting end of the orbit.
//   plus:  -sum_{n>=0} log a(p^n z)
//   minus: +sum_{n>=1} log a(p^{-n} z)
// Terms are summed until negligible (the orbit converges geometrically).
cplx qdiff_log_plus(const std::function<cplx(cplx)>& a, cplx p, cplx z,
                    double tol = 1e-15, int max_terms = 4000);
cplx qdiff_log_minus(const std::function<cplx(cplx)>& a, cplx p, cplx z,
                     double tol = 1e-15, int max_terms = 4000);

// Connection data of the additive difference equation f(u+1) = xi_i(u) f(u)
// attached to one node of a representation. Everything is diagonal in the
// eigenbasis of the commuting family xi_i(u).
struct NodeConnection {
    int dim = 0;
    Mat P, Pinv;
    std::vector<RatioProduct> lam;         // eigenvalues of xi_i in factored form
    std::vector<ScalarCanonical> gp, gm;   // regularized half products g^+, g^-

    // g^+(u) = e^{+gamma c1} prod_{n>=1} xi(u+n) e^{-c1/n}, and mirror for g^-
    Mat g_plus(cplx u) const;
    Mat g_minus(cplx u) const;
    // connection S(u) = g^+(u) xi(u) g^-(u); 1-periodic, rational in e^{2 pi i u}
    Mat connection(cplx u) const;
    cplx connection_scalar(int k, cplx u) const;
    // closed form: prod over factor pairs of sin pi(u-zero)/sin pi(u-pole)
    cplx sine_ratio(int k, cplx u) const;
};

NodeConnection connection_matrix(const YangianRep& V, int node, int N);

}  // namespace yq
