#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "yq/laurent.hpp"

namespace yq {

// Simple type, Bourbaki node numbering throughout.
struct CartanData {
    char type = 'A';  // 'A'..'G'
    int rank = 0;
    std::vector<std::vector<int>> a;   // Cartan matrix a_ij
    std::vector<int> d;                // symmetrizers, gcd 1, short roots get 1
    int l = 0;                         // [l]_T clears the inverse of B(T)
    int m = 0;                         // long/short squared-length ratio
    int h_dual = 0;                    // l / m

    int b(int i, int j) const { return d[i] * a[i][j]; }
    Eigen::MatrixXd b_matrix() const;
};

CartanData build_cartan(char type, int rank);

// B(T)_ij = [b_ij]_T (T-number of the symmetrized Cartan entry).
std::vector<std::vector<LaurentPolyZ>> t_cartan_matrix(const CartanData& cd);

// Exact inverse: B(T) * C(T) = [l]_T * Id, entries of C in N[T,T^-1].
// Fraction-free elimination; throws if the identity or nonnegativity fails.
std::vector<std::vector<LaurentPolyZ>> invert_t_cartan(const CartanData& cd);

// Row i is the coefficient vector of the i-th fundamental coweight in the
// simple roots, times [l]_T: coweight_i = sum_j C_ij/[l]_T alpha_j.
// Same data as invert_t_cartan; kept as a named view for callers.
std::vector<std::vector<LaurentPolyZ>> fundamental_coweights_q(const CartanData& cd);

// Numeric B^{-1} obtained as C(1)/l; cross-checked against direct inversion.
Eigen::MatrixXd omega_h_matrix(const CartanData& cd);

}  // namespace yq
