#include "yq/special.hpp"

#include <cmath>

namespace yq {

namespace {
const double pi = 3.14159265358979323846264338327950288;

// Lanczos, g = 607/128, 15 coefficients (Boost/Godfrey set).
const double lanczos_g = 607.0 / 128.0;
const double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx log_gamma_core(cplx z) {
    // valid for Re z > 0; z shifted by caller otherwise
    cplx sum = lanczos_c[0];
    for (int k = 1; k < 15; ++k) sum += lanczos_c[k] / (z + cplx(k - 1, 0));
    const cplx t = z + lanczos_g - 0.5;
    return 0.5 * std::log(2 * pi) + (z - 0.5) * std::log(t) - t + std::log(sum);
}
}  // namespace

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection; keeps the principal branch off the cut
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    return log_gamma_core(z);
}

cplx digamma(cplx z) {
    if (z.real() < 0.5 && std::abs(z.imag()) < 100.0)
        return digamma(1.0 - z) - pi / std::tan(pi * z);
    cplx acc = 0.0;
    while (z.real() < 12.0 && std::abs(z) < 100.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv = 1.0 / z, inv2 = inv * inv;
    // asymptotic series with Bernoulli numbers B2..B14
    cplx s = std::log(z) - 0.5 * inv;
    const double b[7] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    cplx p = inv2;
    for (int k = 0; k < 7; ++k) {
        s -= b[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return acc + s;
}

cplx trigamma(cplx z) {
    if (z.real() < 0.5 && std::abs(z.imag()) < 100.0) {
        const cplx c = pi / std::sin(pi * z);
        return -trigamma(1.0 - z) + c * c;
    }
    cplx acc = 0.0;
    while (z.real() < 12.0 && std::abs(z) < 100.0) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    const cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = inv + 0.5 * inv2;
    const double b[7] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    cplx p = inv * inv2;
    for (int k = 0; k < 7; ++k) {
        s += b[k] * p;
        p *= inv2;
    }
    return acc + s;
}

cplx tetragamma(cplx z) {
    // reflection only near the real axis; sin(pi z) overflows for large |Im|,
    // where the asymptotic series below is valid as is
    if (z.real() < 0.5 && std::abs(z.imag()) < 100.0) {
        const cplx s = std::sin(pi * z);
        return tetragamma(1.0 - z) - 2.0 * pi * pi * pi * std::cos(pi * z) / (s * s * s);
    }
    cplx acc = 0.0;
    while (z.real() < 12.0 && std::abs(z) < 100.0) {
        acc -= 2.0 / (z * z * z);
        z += 1.0;
    }
    const cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = -inv2 - inv * inv2;
    const double b[7] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    cplx p = inv2 * inv2;
    for (int k = 0; k < 7; ++k) {
        s -= b[k] * (2.0 * (k + 1) + 1.0) * p;
        p *= inv2;
    }
    return acc + s;
}

cplx pentagamma(cplx z) {
    if (z.real() < 0.5 && std::abs(z.imag()) < 100.0) {
        // third derivative of the reflection pi cot(pi z)
        const cplx s = std::sin(pi * z), c = std::cos(pi * z);
        const double p4 = pi * pi * pi * pi;
        return -pentagamma(1.0 - z) + 2.0 * p4 * (2.0 * c * c + 1.0) / (s * s * s * s);
    }
    cplx acc = 0.0;
    while (z.real() < 12.0 && std::abs(z) < 100.0) {
        acc += 6.0 / (z * z * z * z);
        z += 1.0;
    }
    const cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = 2.0 * inv * inv2 + 3.0 * inv2 * inv2;
    const double b[7] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    cplx p = inv * inv2 * inv2;
    for (int k = 0; k < 7; ++k) {
        const double n = 2.0 * (k + 1);
        s += b[k] * (n + 1.0) * (n + 2.0) * p;
        p *= inv2;
    }
    return acc + s;
}

}  // namespace yq
