#pragma once
// Scalar special functions: complex log-gamma, the Gauss hypergeometric
// series, and the Mehler-type kernel of the cosine representation.

#include <complex>

#include "jlogan/core.hpp"

namespace jlogan {

namespace detail {

// Lanczos approximation, g = 7, 9 terms.
inline constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// log(sin(pi z)) up to an integer multiple of 2 pi i, stable for large |Im z|
// where sin(pi z) itself overflows.
inline std::complex<double> log_sin_pi(std::complex<double> z) {
    const std::complex<double> ipi(0.0, kPi);
    if (z.imag() >= 0.0) {
        // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2 i)
        std::complex<double> w = std::exp(2.0 * ipi * z);
        return -ipi * z + std::log(w - 1.0) - std::log(std::complex<double>(0.0, 2.0));
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

inline std::complex<double> log_gamma_core(std::complex<double> z) {
    // valid for Re z >= 0.5
    std::complex<double> w = z - 1.0;
    std::complex<double> acc(kLanczosCoef[0], 0.0);
    for (int k = 1; k < 9; ++k) acc += kLanczosCoef[k] / (w + static_cast<double>(k));
    std::complex<double> t = w + 7.5;
    return kHalfLog2Pi + (w + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace detail

// Principal-branch-compatible log Gamma(z); for Re z < 1/2 the reflection
// formula is used, so the imaginary part may differ from the principal value
// by a multiple of 2 pi (callers exponentiate or take real parts).
inline std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return detail::log_gamma_core(z);
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(kPi) - detail::log_sin_pi(z) - detail::log_gamma_core(1.0 - z);
}

inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_gamma: need x > 0");
    if (x >= 0.5) return detail::log_gamma_core(std::complex<double>(x, 0.0)).real();
    return std::log(kPi / std::sin(kPi * x)) -
           detail::log_gamma_core(std::complex<double>(1.0 - x, 0.0)).real();
}

// Gauss hypergeometric series 2F1(a, b; c; x) summed directly; requires
// |x| < 1 and is intended for the region |x| <= 0.95 where the series is
// well conditioned. Parameters may be complex, the argument is real.
inline std::complex<double> gauss_2f1(std::complex<double> a, std::complex<double> b,
                                      std::complex<double> c, double x,
                                      const SeriesConfig& cfg = {}) {
    if (!(std::fabs(x) < 1.0)) throw std::invalid_argument("gauss_2f1: need |x| < 1");
    if (std::fabs(c.imag()) < 1e-13) {
        double cr = c.real();
        double n = std::round(cr);
        if (cr <= 0.25 && std::fabs(cr - n) < 1e-13 && n <= 0.0)
            throw std::invalid_argument("gauss_2f1: c is a nonpositive integer");
    }
    std::complex<double> term(1.0, 0.0);
    std::complex<double> sum = term;
    int quiet = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * x;
        sum += term;
        if (std::abs(term) <= cfg.rel_tol * std::abs(sum) + cfg.abs_tol) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("gauss_2f1: series did not converge");
}

inline double gauss_2f1(double a, double b, double c, double x, const SeriesConfig& cfg = {}) {
    return gauss_2f1(std::complex<double>(a, 0.0), std::complex<double>(b, 0.0),
                     std::complex<double>(c, 0.0), x, cfg)
        .real();
}

// Kernel A(s, t) of the cosine representation
//   phi_lambda(t) = (c_alpha / Delta(t)) Int_0^t A(s, t) cos(lambda s) ds,
// defined for 0 <= s < t and alpha > -1/2.
inline double mehler_kernel(const JacobiParams& p, double s, double t,
                            const SeriesConfig& cfg = {}) {
    validate(p);
    if (!(p.alpha > -0.5)) throw std::invalid_argument("mehler_kernel: need alpha > -1/2");
    if (!(t > 0.0) || !(s >= 0.0) || !(s < t))
        throw std::invalid_argument("mehler_kernel: need 0 <= s < t");
    const double al = p.alpha, be = p.beta;
    double pre = std::pow(2.0, al + 2.0 * be + 2.5) * std::sinh(2.0 * t) *
                 std::pow(std::cosh(t), be - al) *
                 std::pow(std::cosh(2.0 * t) - std::cosh(2.0 * s), al - 0.5);
    double x = (std::cosh(t) - std::cosh(s)) / (2.0 * std::cosh(t));
    return pre * gauss_2f1(al + be, al - be, al + 0.5, x, cfg);
}

}  // namespace jlogan
