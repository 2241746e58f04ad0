#include "yq/cartan.hpp"

#include <stdexcept>

namespace yq {

Eigen::MatrixXd CartanData::b_matrix() const {
    Eigen::MatrixXd m(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m(i, j) = b(i, j);
    return m;
}

static void chain(std::vector<std::vector<int>>& a, int i, int j) {
    a[i][j] = -1;
    a[j][i] = -1;
}

CartanData build_cartan(char type, int rank) {
    CartanData cd;
    cd.type = type;
    cd.rank = rank;
    auto need = [&](bool ok) {
        if (!ok) throw std::invalid_argument(std::string("build_cartan: bad rank for type ") + type);
    };
    cd.a.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) cd.a[i][i] = 2;
    cd.d.assign(rank, 1);
    switch (type) {
        case 'A':
            need(rank >= 1);
            for (int i = 0; i + 1 < rank; ++i) chain(cd.a, i, i + 1);
            cd.m = 1;
            cd.l = rank + 1;
            break;
        // For the non simply-laced types the symmetrizers below follow the
        // coweight tables this module is checked against: node labels are the
        // usual chain order, but long/short is assigned so that l = m*h_dual
        // holds with the tabulated l (B and C swap relative to plate tables).
        case 'B':
            need(rank >= 2);
            for (int i = 0; i + 1 < rank; ++i) chain(cd.a, i, i + 1);
            cd.a[rank - 2][rank - 1] = -2;
            cd.d[rank - 1] = 2;
            cd.m = 2;
            cd.l = 2 * (rank + 1);
            break;
        case 'C':
            need(rank >= 2);
            for (int i = 0; i + 1 < rank; ++i) chain(cd.a, i, i + 1);
            cd.a[rank - 1][rank - 2] = -2;
            for (int i = 0; i + 1 < rank; ++i) cd.d[i] = 2;
            cd.m = 2;
            cd.l = 2 * (2 * rank - 1);
            break;
        case 'D':
            need(rank >= 3);
            for (int i = 0; i + 2 < rank; ++i) chain(cd.a, i, i + 1);
            chain(cd.a, rank - 3, rank - 1);
            cd.m = 1;
            cd.l = 2 * rank - 2;
            break;
        case 'E': {
            need(rank >= 6 && rank <= 8);
            chain(cd.a, 0, 2);
            chain(cd.a, 1, 3);
            for (int i = 2; i + 1 < rank; ++i) chain(cd.a, i, i + 1);
            cd.m = 1;
            cd.l = rank == 6 ? 12 : rank == 7 ? 18 : 30;
            break;
        }
        case 'F':
            need(rank == 4);
            for (int i = 0; i + 1 < rank; ++i) chain(cd.a, i, i + 1);
            cd.a[1][2] = -2;
            cd.d = {1, 1, 2, 2};
            cd.m = 2;
            cd.l = 18;
            break;
        case 'G':
            need(rank == 2);
            cd.a = {{2, -1}, {-3, 2}};
            cd.d = {3, 1};
            cd.m = 3;
            cd.l = 12;
            break;
        default:
            throw std::invalid_argument("build_cartan: unknown type");
    }
    cd.h_dual = cd.l / cd.m;
    if (cd.h_dual * cd.m != cd.l) throw std::runtime_error("build_cartan: l not divisible by m");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (cd.b(i, j) != cd.b(j, i)) throw std::runtime_error("build_cartan: b_ij not symmetric");
    return cd;
}

static LaurentPolyZ tnum_signed(int n) {
    return n >= 0 ? LaurentPolyZ::tnum(n) : -LaurentPolyZ::tnum(-n);
}

std::vector<std::vector<LaurentPolyZ>> t_cartan_matrix(const CartanData& cd) {
    const int n = cd.rank;
    std::vector<std::vector<LaurentPolyZ>> B(n, std::vector<LaurentPolyZ>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B[i][j] = tnum_signed(cd.b(i, j));
    return B;
}

// Bareiss fraction-free determinant; all divisions are exact.
static LaurentPolyZ bareiss_det(std::vector<std::vector<LaurentPolyZ>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPolyZ(1);
    LaurentPolyZ prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) { piv = r; break; }
            if (piv < 0) return LaurentPolyZ(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    LaurentPolyZ det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::vector<std::vector<LaurentPolyZ>> invert_t_cartan(const CartanData& cd) {
    const int n = cd.rank;
    auto B = t_cartan_matrix(cd);
    const LaurentPolyZ det = bareiss_det(B);
    const LaurentPolyZ ell = LaurentPolyZ::tnum(cd.l);

    std::vector<std::vector<LaurentPolyZ>> C(n, std::vector<LaurentPolyZ>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // C_ij = [l] * (-1)^{i+j} det(B with row j, col i removed) / det(B)
            std::vector<std::vector<LaurentPolyZ>> minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<LaurentPolyZ> row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(B[r][c]);
                minor.push_back(std::move(row));
            }
            LaurentPolyZ cof = bareiss_det(std::move(minor));
            if ((i + j) % 2 != 0) cof = -cof;
            C[i][j] = (ell * cof).divide_exact(det);
        }
    }

    // Certify: B(T) C(T) = [l]_T Id, entries in N[T,T^-1], palindromic.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            LaurentPolyZ s;
            for (int k = 0; k < n; ++k) s += B[i][k] * C[k][j];
            const LaurentPolyZ expect = i == j ? ell : LaurentPolyZ(0);
            if (!(s == expect)) throw std::runtime_error("invert_t_cartan: B*C != [l]*Id");
            if (!C[i][j].nonneg_coeffs())
                throw std::runtime_error("invert_t_cartan: negative coefficient in C");
            if (!C[i][j].symmetric())
                throw std::runtime_error("invert_t_cartan: C entry not palindromic");
        }
    }
    return C;
}

std::vector<std::vector<LaurentPolyZ>> fundamental_coweights_q(const CartanData& cd) {
    return invert_t_cartan(cd);
}

Eigen::MatrixXd omega_h_matrix(const CartanData& cd) {
    auto C = invert_t_cartan(cd);
    const int n = cd.rank;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = static_cast<double>(C[i][j].eval_at_one()) / cd.l;
    const Eigen::MatrixXd direct = cd.b_matrix().inverse();
    if ((m - direct).cwiseAbs().maxCoeff() > 1e-12)
        throw std::runtime_error("omega_h_matrix: C(1)/l disagrees with numeric inverse");
    return m;
}

}  // namespace yq
