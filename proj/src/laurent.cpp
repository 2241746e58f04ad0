#include "yq/laurent.hpp"

#include <sstream>
#include <vector>

namespace yq {

LaurentPolyZ LaurentPolyZ::tnum(int n) {
    if (n < 0) throw std::invalid_argument("tnum: n must be >= 0");
    LaurentPolyZ p;
    for (int i = 0; i < n; ++i) p.c_[n - 1 - 2 * i] = 1;
    return p;
}

LaurentPolyZ LaurentPolyZ::angle(int m) {
    if (m < 0) throw std::invalid_argument("angle: m must be >= 0");
    LaurentPolyZ p;
    if (m == 0) { p.c_[0] = 2; return p; }
    p.c_[m] = 1;
    p.c_[-m] = 1;
    return p;
}

int LaurentPolyZ::min_exp() const {
    if (c_.empty()) throw std::runtime_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPolyZ::max_exp() const {
    if (c_.empty()) throw std::runtime_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

bool LaurentPolyZ::nonneg_coeffs() const {
    for (auto& [e, v] : c_)
        if (v < 0) return false;
    return true;
}

bool LaurentPolyZ::symmetric() const {
    for (auto& [e, v] : c_)
        if (coeff(-e) != v) return false;
    return true;
}

LaurentPolyZ LaurentPolyZ::operator-() const {
    LaurentPolyZ p;
    for (auto& [e, v] : c_) p.c_[e] = -v;
    return p;
}

LaurentPolyZ& LaurentPolyZ::operator+=(const LaurentPolyZ& o) {
    for (auto& [e, v] : o.c_) set(e, coeff(e) + v);
    return *this;
}

LaurentPolyZ& LaurentPolyZ::operator-=(const LaurentPolyZ& o) {
    for (auto& [e, v] : o.c_) set(e, coeff(e) - v);
    return *this;
}

static long long checked_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("LaurentPolyZ: coefficient overflow");
    return static_cast<long long>(v);
}

LaurentPolyZ operator*(const LaurentPolyZ& a, const LaurentPolyZ& b) {
    std::map<int, __int128> acc;
    for (auto& [ea, va] : a.c_)
        for (auto& [eb, vb] : b.c_)
            acc[ea + eb] += static_cast<__int128>(va) * vb;
    LaurentPolyZ p;
    for (auto& [e, v] : acc)
        if (v != 0) p.c_[e] = checked_narrow(v);
    return p;
}

LaurentPolyZ LaurentPolyZ::divide_exact(const LaurentPolyZ& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("divide_exact: division by zero");
    if (is_zero()) return LaurentPolyZ();
    // shift both to ordinary polynomials and long-divide; exact iff remainder 0
    const int amin = min_exp(), dmin = divisor.min_exp();
    std::vector<coeff_t> a(max_exp() - amin + 1, 0), d(divisor.max_exp() - dmin + 1, 0);
    for (auto& [e, v] : c_) a[e - amin] = v;
    for (auto& [e, v] : divisor.c_) d[e - dmin] = v;
    const int dega = static_cast<int>(a.size()) - 1, degd = static_cast<int>(d.size()) - 1;
    if (dega < degd) throw std::runtime_error("divide_exact: inexact division");
    LaurentPolyZ quot;
    for (int i = dega - degd; i >= 0; --i) {
        const coeff_t lead = a[i + degd];
        if (lead == 0) continue;
        if (lead % d[degd] != 0) throw std::runtime_error("divide_exact: inexact division");
        const coeff_t c = lead / d[degd];
        quot.set(i + amin - dmin, c);
        for (int j = 0; j <= degd; ++j) a[i + j] -= c * d[j];
    }
    for (coeff_t v : a)
        if (v != 0) throw std::runtime_error("divide_exact: inexact division");
    return quot;
}

std::complex<double> LaurentPolyZ::eval(std::complex<double> t) const {
    std::complex<double> r = 0.0;
    for (auto& [e, v] : c_) r += static_cast<double>(v) * std::pow(t, e);
    return r;
}

long long LaurentPolyZ::eval_at_one() const {
    long long r = 0;
    for (auto& [e, v] : c_) r += v;
    return r;
}

std::string LaurentPolyZ::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        first = false;
        long long a = v < 0 ? -v : v;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << "T";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace yq
