#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace yq {

// Laurent polynomial in T with exact integer coefficients.
// Invariant: no zero coefficients are stored.
class LaurentPolyZ {
public:
    using coeff_t = long long;

    LaurentPolyZ() = default;
    explicit LaurentPolyZ(coeff_t constant) {
        if (constant != 0) c_[0] = constant;
    }
    static LaurentPolyZ monomial(int exp, coeff_t coeff) {
        LaurentPolyZ p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    // [n]_T = (T^n - T^-n)/(T - T^-1), n >= 0.
    static LaurentPolyZ tnum(int n);
    // <m> = T^m + T^-m, m >= 0 (so <0> = 2).
    static LaurentPolyZ angle(int m);

    bool is_zero() const { return c_.empty(); }
    coeff_t coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }
    const std::map<int, coeff_t>& terms() const { return c_; }
    int min_exp() const;  // throws on zero poly
    int max_exp() const;

    bool nonneg_coeffs() const;
    // palindromic: coeff(e) == coeff(-e) for all e
    bool symmetric() const;

    LaurentPolyZ operator-() const;
    LaurentPolyZ& operator+=(const LaurentPolyZ& o);
    LaurentPolyZ& operator-=(const LaurentPolyZ& o);
    friend LaurentPolyZ operator+(LaurentPolyZ a, const LaurentPolyZ& b) { return a += b; }
    friend LaurentPolyZ operator-(LaurentPolyZ a, const LaurentPolyZ& b) { return a -= b; }
    friend LaurentPolyZ operator*(const LaurentPolyZ& a, const LaurentPolyZ& b);
    friend bool operator==(const LaurentPolyZ& a, const LaurentPolyZ& b) { return a.c_ == b.c_; }

    // Exact division; throws std::runtime_error if the remainder is nonzero.
    LaurentPolyZ divide_exact(const LaurentPolyZ& divisor) const;

    std::complex<double> eval(std::complex<double> t) const;
    long long eval_at_one() const;

    std::string str() const;  // e.g. "T^-2 + 3 + 2*T^4"

private:
    std::map<int, coeff_t> c_;
    void set(int exp, coeff_t v) {
        if (v == 0) c_.erase(exp); else c_[exp] = v;
    }
};

}  // namespace yq
