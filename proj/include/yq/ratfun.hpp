#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "yq/special.hpp"

namespace yq {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Matrix-valued rational function of one complex variable, regular at
// infinity, kept in pole-centered partial-fraction form:
//   F(u) = constant + sum_p sum_{n>=1} part[p][n-1] (u - p)^{-n}
class RationalMatrixFunction {
public:
    struct Pole {
        cplx loc;
        std::vector<Mat> coef;  // coef[n-1] multiplies (u-loc)^{-n}
    };

    int dim = 0;
    Mat constant;
    std::vector<Pole> poles;

    // distinct poles closer than this are merged at construction time
    static constexpr double merge_tol = 1e-8;

    RationalMatrixFunction() = default;
    explicit RationalMatrixFunction(const Mat& c) : dim((int)c.rows()), constant(c) {}
    static RationalMatrixFunction identity(int d) {
        return RationalMatrixFunction(Mat::Identity(d, d));
    }
    static RationalMatrixFunction zero(int d) {
        return RationalMatrixFunction(Mat::Zero(d, d));
    }

    void add_pole_term(cplx p, int order, const Mat& c);
    void prune(double tol = 1e-13);

    Mat eval(cplx u) const;
    Mat value_at_inf() const { return constant; }

    // F(u - a) (poles move to p + a)
    RationalMatrixFunction shifted(cplx a) const;
    // F(u / alpha) (poles move to alpha p)
    RationalMatrixFunction dilated(cplx alpha) const;
    RationalMatrixFunction derivative() const;

    // Laurent coefficients c_n at p for nmin <= n <= nmax (c_n multiplies
    // (u-p)^n); negative indices read the stored principal part.
    std::vector<Mat> laurent(cplx p, int nmin, int nmax) const;
    int pole_order(cplx p) const;

    std::vector<cplx> pole_locations() const;

    RationalMatrixFunction& operator+=(const RationalMatrixFunction& o);
    RationalMatrixFunction& operator-=(const RationalMatrixFunction& o);
    RationalMatrixFunction& operator*=(cplx c);
    friend RationalMatrixFunction operator+(RationalMatrixFunction a, const RationalMatrixFunction& b) { return a += b; }
    friend RationalMatrixFunction operator-(RationalMatrixFunction a, const RationalMatrixFunction& b) { return a -= b; }
    friend RationalMatrixFunction operator*(cplx c, RationalMatrixFunction a) { return a *= c; }
    // pointwise matrix product, exact in partial-fraction form
    friend RationalMatrixFunction operator*(const RationalMatrixFunction& a, const RationalMatrixFunction& b);

    // left/right multiplication by a constant matrix
    RationalMatrixFunction lmul(const Mat& m) const;
    RationalMatrixFunction rmul(const Mat& m) const;

    // Kronecker helpers: this acting on the left/right tensor factor
    RationalMatrixFunction kron_left(int right_dim) const;   // F (x) 1
    RationalMatrixFunction kron_right(int left_dim) const;   // 1 (x) F
};

// (1/2 pi i) oint F(u) w(u) du around the listed poles; weight_deriv(p, k)
// must return w^(k)(p). Exact residue sum.
Mat contour_integral(const RationalMatrixFunction& F, const std::vector<cplx>& enclosed,
                     const std::function<cplx(cplx, int)>& weight_deriv);

// Same integral by trapezoid quadrature on circles around each listed pole,
// with doubling refinement 64 -> max_points until successive values agree
// to tol. Independent of the partial-fraction representation.
Mat contour_integral_quad(const std::function<Mat(cplx)>& f, const std::vector<cplx>& centers,
                          double radius, double tol = 1e-10, int max_points = 1024);

// Shared eigenbasis of a pairwise-commuting family, built from a random
// linear combination of samples and verified to diagonalize every member at
// every sample point to within tol. Throws if the family is defective.
struct CommutingBasis {
    Mat P, Pinv;
};
CommutingBasis common_eigenbasis(const std::vector<const RationalMatrixFunction*>& family,
                                 const std::vector<cplx>& sample_points, double tol = 1e-8);

// Scalar rational function in pole-centered form (one eigenvalue of F).
struct ScalarRat {
    cplx constant = 1.0;
    struct Pole {
        cplx loc;
        std::vector<cplx> coef;
    };
    std::vector<Pole> poles;
    cplx eval(cplx u) const;
};
ScalarRat diagonal_entry(const RationalMatrixFunction& F, const CommutingBasis& B, int k);

// Zeros of a ScalarRat with nonzero value at infinity (roots of the
// numerator, via companion-matrix eigenvalues).
std::vector<cplx> scalar_zeros(const ScalarRat& f, double tol = 1e-9);

// Branch-stable logarithm of a diagonalizable rational F.
//
// Additive variant t(u): t(infinity) = 0, scalar logs sum
// log(1 - a/u) - log(1 - b/u) over eigen zero/pole data (cuts along [0,a]).
// Trigonometric variant H(w): H(0) = 0, scalar logs log(1 - w/a) (cut rays
// [a, infinity)).
struct StarLog {
    Mat P, Pinv;
    int dim = 0;
    std::vector<std::vector<cplx>> zeros, poles;  // per eigen index
    std::vector<cplx> lead;                       // eigenvalue of F at anchor

    Mat eval_additive(cplx u) const;   // log F(u), -> 0 at infinity
    Mat eval_trig(cplx w) const;       // log(F(w)/F(0))
    cplx eval_additive_scalar(int k, cplx u) const;
    cplx eval_trig_scalar(int k, cplx w) const;

    // t'(u) as an exact rational function (simple poles at zeros/poles of F)
    RationalMatrixFunction log_derivative() const;
};
// require_inf_one: additive use, checks F(infinity) = 1
StarLog star_log(const RationalMatrixFunction& F, bool require_inf_one, double tol = 1e-8);

// Exact log of a unipotent rational function (F - 1 nilpotent in the
// matrix-rational algebra); finite series, throws if it fails to terminate.
RationalMatrixFunction log_unipotent(const RationalMatrixFunction& F, double tol = 1e-10);

Mat kron(const Mat& a, const Mat& b);

}  // namespace yq
