#pragma once
// Panel-based Gauss-Legendre quadrature: an adaptive integrator on finite
// intervals and a half-line integrator for spectral-side integrals, whose
// integrands decay algebraically with an oscillatory component. The head of
// the half-line integral is done adaptively (with optional interior panel
// edges, e.g. at spectral zeros); the tail is summed in fixed panels and
// extrapolated by iterated Aitken acceleration, with geometric enlargement
// of the head if the tail estimate fails to settle.

#include <algorithm>
#include <limits>
#include <vector>

#include "jlogan/core.hpp"

namespace jlogan {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels_used = 0;
};

struct HalfLineOptions {
    double panel_hint = 0.0;         // head/tail panel width scale; 0 = pi/2
    double lambda_cut = 0.0;         // initial head cutoff; 0 = 64 * panel_hint
    std::vector<double> boundaries;  // interior head panel edges, ascending
    std::size_t tail_panels = 40;
    int max_doublings = 4;
};

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1].
inline constexpr double kGL15Nodes[15] = {
    -0.9879925180204854, -0.937273392400706,   -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388,  -0.3941513470775634,
    -0.20119409399743451, 0.0,                  0.20119409399743451,
    0.3941513470775634,   0.5709721726085388,   0.7244177313601701,
    0.8482065834104272,   0.937273392400706,    0.9879925180204854};
inline constexpr double kGL15Weights[15] = {
    0.03075324199611727, 0.07036604748810812, 0.10715922046717194,
    0.13957067792615432, 0.16626920581699392, 0.1861610000155622,
    0.19843148532711158, 0.2025782419255613,  0.19843148532711158,
    0.1861610000155622,  0.16626920581699392, 0.13957067792615432,
    0.10715922046717194, 0.07036604748810812, 0.03075324199611727};

template <class F>
double gl15_panel(F& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 15; ++i) acc += kGL15Weights[i] * f(mid + half * kGL15Nodes[i]);
    return acc * half;
}

}  // namespace detail

// Adaptive integration of f over [a, b]. Panels are split until the change
// under one halving falls below the segment's share of the tolerance; the
// budget is cfg.max_panels rule applications. On budget exhaustion the
// remaining segments are accepted as-is with a penalty in error_estimate.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadConfig& cfg = {}) {
    QuadResult out;
    if (!(b > a)) return out;
    struct Seg {
        double a, b, whole, parent_delta;
    };
    const double total_len = b - a;

    // A coarse pre-split gives a cancellation-robust magnitude scale.
    double scale = 0.0;
    std::vector<Seg> stack;
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 8; ++i) {
        double sa = a + total_len * i / 8.0, sb = a + total_len * (i + 1) / 8.0;
        double v = detail::gl15_panel(f, sa, sb);
        scale += std::fabs(v);
        stack.push_back({sa, sb, v, inf});
        ++out.panels_used;
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * scale);

    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (out.panels_used + 2 > static_cast<std::size_t>(cfg.max_panels)) {
            out.value += s.whole;
            out.error_estimate += 1e-3 * std::fabs(s.whole);
            continue;
        }
        double mid = 0.5 * (s.a + s.b);
        double left = detail::gl15_panel(f, s.a, mid);
        double right = detail::gl15_panel(f, mid, s.b);
        out.panels_used += 2;
        double delta = left + right - s.whole;
        bool converged = std::fabs(delta) <= tol * (s.b - s.a) / total_len;
        // When halving no longer shrinks the delta although the panel is
        // already resolved to seven digits of its own mass, the delta is
        // evaluation noise in the integrand, not discretization error;
        // splitting further would recurse toward machine width. Genuine
        // singularities fail the size gate (their deltas stay comparable
        // to the panel mass), smooth panels fail the stagnation gate
        // (their deltas collapse by orders of magnitude per halving).
        bool noise_limited = std::fabs(delta) <= 1e-7 * (std::fabs(left) + std::fabs(right)) &&
                             std::fabs(delta) > 0.25 * s.parent_delta;
        if (converged || noise_limited || s.b - s.a < 1e-6 * total_len) {
            out.value += left + right;
            out.error_estimate += std::fabs(delta);
        } else {
            stack.push_back({s.a, mid, left, std::fabs(delta)});
            stack.push_back({mid, s.b, right, std::fabs(delta)});
        }
    }
    return out;
}

namespace detail {

// Iterated Aitken delta-squared extrapolation of a convergent sequence.
// Returns the accelerated limit and a crude error estimate.
inline std::pair<double, double> aitken_limit(std::vector<double> s) {
    double prev = s.back();
    for (int level = 0; level < 6 && s.size() >= 3; ++level) {
        std::vector<double> next;
        next.reserve(s.size() - 2);
        bool ok = true;
        for (std::size_t j = 0; j + 2 < s.size(); ++j) {
            double d1 = s[j + 1] - s[j];
            double d2 = s[j + 2] - 2.0 * s[j + 1] + s[j];
            if (std::fabs(d2) <= 1e-14 * (std::fabs(s[j]) + std::fabs(s[j + 2]))) {
                ok = false;
                break;
            }
            next.push_back(s[j] - d1 * d1 / d2);
        }
        if (!ok || next.empty()) break;
        prev = s.back();
        s = std::move(next);
    }
    return {s.back(), std::fabs(s.back() - prev)};
}

}  // namespace detail

// Integration of f over [0, infinity) for integrands that decay
// algebraically (possibly with bounded oscillation of roughly known period,
// communicated through panel_hint = quarter period).
template <class F>
QuadResult integrate_half_line(F&& f, const QuadConfig& cfg = {}, HalfLineOptions opt = {}) {
    const double hint = opt.panel_hint > 0.0 ? opt.panel_hint : kPi / 2.0;
    double cut = opt.lambda_cut > 0.0 ? opt.lambda_cut : 64.0 * hint;
    if (!opt.boundaries.empty()) cut = std::max(cut, opt.boundaries.back() + 2.0 * hint);

    QuadResult out;
    double prev_edge = 0.0;
    for (double edge : opt.boundaries) {
        if (!(edge > prev_edge) || edge >= cut) continue;
        QuadResult piece = integrate(f, prev_edge, edge, cfg);
        out.value += piece.value;
        out.error_estimate += piece.error_estimate;
        out.panels_used += piece.panels_used;
        prev_edge = edge;
    }
    QuadResult head_end = integrate(f, prev_edge, cut, cfg);
    out.value += head_end.value;
    out.error_estimate += head_end.error_estimate;
    out.panels_used += head_end.panels_used;

    const double w = 2.0 * hint;  // tail panel = half oscillation period
    double tail = 0.0, tail_err = 0.0;
    for (int attempt = 0;; ++attempt) {
        std::vector<double> partial;
        partial.reserve(opt.tail_panels);
        double acc = 0.0;
        double last_panel = 0.0;
        for (std::size_t j = 0; j < opt.tail_panels; ++j) {
            last_panel = detail::gl15_panel(f, cut + w * j, cut + w * (j + 1));
            ++out.panels_used;
            acc += last_panel;
            partial.push_back(acc);
        }
        double raw_bound =
            std::fabs(last_panel) * (cut + w * opt.tail_panels) / w;  // ~1/lambda^2 decay
        if (cfg.tail_accel == TailAccel::AITKEN) {
            auto [limit, est] = detail::aitken_limit(partial);
            tail = limit;
            // Agreement between acceleration levels understates the residual
            // of algebraic tails, so keep a fraction of the raw bound as a floor.
            tail_err = std::min(std::max(est, 0.01 * raw_bound), raw_bound);
        } else {
            tail = acc;
            tail_err = raw_bound;
        }
        double target = std::max(cfg.abs_tol, cfg.rel_tol * (std::fabs(out.value + tail)));
        if (tail_err <= target || attempt >= opt.max_doublings) break;
        QuadResult more = integrate(f, cut, 2.0 * cut, cfg);
        out.value += more.value;
        out.error_estimate += more.error_estimate;
        out.panels_used += more.panels_used;
        cut *= 2.0;
    }
    out.value += tail;
    out.error_estimate += tail_err;
    return out;
}

}  // namespace jlogan
