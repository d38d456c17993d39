#pragma once
// Shared types, configuration, and error classes for the Jacobi harmonic
// analysis library.

#include <cmath>
#include <stdexcept>
#include <string>

namespace jlogan {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Parameter pair (alpha, beta) of the hyperbolic weight
// Delta(t) = 2^{2 rho} sinh(t)^{2 alpha + 1} cosh(t)^{2 beta + 1),
// with rho = alpha + beta + 1. Admissible range: alpha >= beta >= -1/2.
struct JacobiParams {
    double alpha = 0.0;
    double beta = -0.5;

    double rho() const { return alpha + beta + 1.0; }
};

inline void validate(const JacobiParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta))
        throw std::invalid_argument("JacobiParams: non-finite parameter");
    if (!(p.alpha >= p.beta) || !(p.beta >= -0.5))
        throw std::invalid_argument("JacobiParams: need alpha >= beta >= -1/2");
}

// Termination control for power series and fixed-point iterations.
// A series stops once three consecutive terms satisfy
// |term| <= rel_tol * |partial sum| + abs_tol.
struct SeriesConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    int max_terms = 10000;
};

enum class TailAccel { NONE, AITKEN };

// Control of half-line quadrature: panel tolerance targets, a global panel
// budget, and the tail acceleration mode for slowly decaying oscillatory
// integrands.
struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_panels = 40000;
    TailAccel tail_accel = TailAccel::AITKEN;
};

// Thrown when an iteration or series fails to reach its tolerance within the
// configured budget.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace jlogan
