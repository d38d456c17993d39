#pragma once
// Specialization to the hyperboloid H^d: radial analysis on H^d is the
// Jacobi transform with parameters (d/2 - 1, -1/2), so the frequency bound
// and its extremizer carry over verbatim. Only spherical (radial) functions
// appear; the angular variable enters as a constant embedding.

#include <stdexcept>

#include "jlogan/core.hpp"
#include "jlogan/logan.hpp"
#include "jlogan/zeros.hpp"

namespace jlogan {

struct HyperboloidParams {
    int d = 2;
    JacobiParams params;
};

inline HyperboloidParams params_for_dim(int d) {
    if (d < 2) throw std::invalid_argument("params_for_dim: need dimension d >= 2");
    return HyperboloidParams{d, JacobiParams{0.5 * d - 1.0, -0.5}};
}

// Sharp frequency bound for m sign changes of a positive-definite spherical
// function supported in a ball of radius 2*tau: the m-th zero of phi at tau.
inline double logan_bound(int d, int m, double tau, const SeriesConfig& scfg = {}) {
    HyperboloidParams hp = params_for_dim(d);
    if (m < 1) throw std::invalid_argument("logan_bound: need m >= 1");
    return lambda_zeros(hp.params, tau, static_cast<std::size_t>(m), scfg)
        .zeros[static_cast<std::size_t>(m) - 1];
}

// The unique spherical extremizer, as a function of the radial frequency.
inline Extremizer spherical_extremizer(int d, int m, double tau,
                                       const SeriesConfig& scfg = {}) {
    HyperboloidParams hp = params_for_dim(d);
    return build_extremizer(hp.params, m, tau, ExtremizerKind::SMALL_F_M, scfg);
}

inline double spherical_extremizer(int d, int m, double tau, double lambda) {
    return spherical_extremizer(d, m, tau)(lambda);
}

}  // namespace jlogan
