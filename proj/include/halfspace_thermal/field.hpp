#pragma once

// Field assembly: the temperature at (r, theta, t) from the contour kernel
// and the time kernels.
//
// Default form (continuous across theta = 0):
//   T = (T0 /(pi sqrt2)) int_1^inf G(b,th) { T1(r,b,t) - T1(r,cos th,t) } db
//     + (T0'/(pi sqrt2)) int_1^inf G(b,th) { T2(r,b,t) - T2(r,cos th,t) } db
//     + T0 T1(r, cos th, t)
//
// Cross-check form (jumps at theta = 0, where H flips):
//   T = (T0 /(pi sqrt2)) int G T1(r,b,t) db + (T0'/(pi sqrt2)) int G T2 db
//     + H(th) T0 T1(r,cos th,t) - (1 - H(th)) T0' T2(r,cos th,t)
//
// The beta integrals run through two exact finite maps: beta = 1 + u^2 on
// [1,2] (absorbs the integrable endpoint singularity) and beta = 2/v^2 on
// [2,inf) (no truncation; the integrand stays bounded as v -> 0 because
// G ~ beta^{-3/2}).

#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

#include "cdh_kernel.hpp"
#include "core.hpp"
#include "quadrature.hpp"
#include "time_kernels.hpp"

namespace halfspace_thermal {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    std::size_t max_panels = 4000;
};

struct FieldResult {
    double value = 0.0;
    double error_estimate = 0.0;
    // Term breakdown for diagnostics.
    double term_dirichlet_integral = 0.0;
    double term_neumann_integral = 0.0;
    double term_closed = 0.0;
    bool converged = true;
    const char* failing_term = nullptr;
};

namespace detail {

inline constexpr double pi_sqrt2_inv = 0.22507907903927651; // 1/(pi sqrt 2)

// Integral of G(beta) * time_diff(beta) d beta over [1, inf) via the two maps.
// time_diff must be bounded as beta -> inf.
template <class TimeFn>
IntegrationResult g_weighted_integral(double theta, TimeFn&& time_fn,
                                      const QuadratureConfig& cfg) {
    auto head = integrate(
        [&](double u) { return kernel_G_scaled_u(u, theta) * time_fn(1.0 + u * u); },
        0.0, 1.0, cfg.rel_tol, cfg.abs_tol, cfg.max_panels);
    auto tail = integrate(
        [&](double v) {
            const double beta = 2.0 / (v * v);
            return 4.0 / (v * v * v) * kernel_G(beta, theta) * time_fn(beta);
        },
        0.0, 1.0, cfg.rel_tol, cfg.abs_tol, cfg.max_panels);
    IntegrationResult r;
    r.value = head.value + tail.value;
    r.error = head.error + tail.error;
    r.panels = head.panels + tail.panels;
    r.converged = head.converged && tail.converged;
    return r;
}

inline void require_point(double r, double theta, double /*t*/) {
    if (!(r >= 0.0))
        throw std::invalid_argument("temperature: r must be >= 0");
    if (!(theta >= -1.5707963267948967 && theta <= 1.5707963267948967))
        throw std::invalid_argument("temperature: theta outside [-pi/2, pi/2]");
}

} // namespace detail

inline FieldResult temperature(double r, double theta, double t,
                               const ProblemSpec& spec,
                               const QuadratureConfig& cfg = {}) {
    detail::require_point(r, theta, t);
    FieldResult res;
    if (t <= 0.0) return res; // initial condition: identically zero

    const double ct = std::cos(theta);
    const double T1c = t1_profile(spec.f0, r, ct, t);
    res.term_closed = spec.T0 * T1c;

    if (spec.T0 != 0.0) {
        auto ig = detail::g_weighted_integral(
            theta,
            [&](double beta) { return t1_profile(spec.f0, r, beta, t) - T1c; },
            cfg);
        res.term_dirichlet_integral = spec.T0 * detail::pi_sqrt2_inv * ig.value;
        res.error_estimate += std::abs(spec.T0) * detail::pi_sqrt2_inv * ig.error;
        if (!ig.converged) {
            res.converged = false;
            res.failing_term = "dirichlet_integral";
        }
    }
    if (spec.T0_prime != 0.0) {
        const double T2c = t2_profile(spec.g0, r, ct, t);
        auto ig = detail::g_weighted_integral(
            theta,
            [&](double beta) { return t2_profile(spec.g0, r, beta, t) - T2c; },
            cfg);
        res.term_neumann_integral = spec.T0_prime * detail::pi_sqrt2_inv * ig.value;
        res.error_estimate += std::abs(spec.T0_prime) * detail::pi_sqrt2_inv * ig.error;
        if (!ig.converged) {
            res.converged = false;
            res.failing_term = "neumann_integral";
        }
    }
    res.value = res.term_dirichlet_integral + res.term_neumann_integral
              + res.term_closed;
    return res;
}

// Alternative assembly with the Heaviside split; exists for verification.
// Ill-defined at theta = 0 exactly.
inline FieldResult temperature_discontinuous_form(double r, double theta,
                                                  double t,
                                                  const ProblemSpec& spec,
                                                  const QuadratureConfig& cfg = {}) {
    detail::require_point(r, theta, t);
    if (theta == 0.0)
        throw std::invalid_argument(
            "temperature_discontinuous_form: theta = 0 is ill-defined");
    FieldResult res;
    if (t <= 0.0) return res;

    const double ct = std::cos(theta);
    const double H = theta > 0.0 ? 1.0 : 0.0;

    if (spec.T0 != 0.0) {
        auto ig = detail::g_weighted_integral(
            theta, [&](double beta) { return t1_profile(spec.f0, r, beta, t); },
            cfg);
        res.term_dirichlet_integral = spec.T0 * detail::pi_sqrt2_inv * ig.value;
        res.error_estimate += std::abs(spec.T0) * detail::pi_sqrt2_inv * ig.error;
        if (!ig.converged) {
            res.converged = false;
            res.failing_term = "dirichlet_integral";
        }
    }
    if (spec.T0_prime != 0.0) {
        auto ig = detail::g_weighted_integral(
            theta, [&](double beta) { return t2_profile(spec.g0, r, beta, t); },
            cfg);
        res.term_neumann_integral = spec.T0_prime * detail::pi_sqrt2_inv * ig.value;
        res.error_estimate += std::abs(spec.T0_prime) * detail::pi_sqrt2_inv * ig.error;
        if (!ig.converged) {
            res.converged = false;
            res.failing_term = "neumann_integral";
        }
    }
    res.term_closed = H * spec.T0 * t1_profile(spec.f0, r, ct, t)
                    - (1.0 - H) * spec.T0_prime * t2_profile(spec.g0, r, ct, t);
    res.value = res.term_dirichlet_integral + res.term_neumann_integral
              + res.term_closed;
    return res;
}

inline FieldResult temperature_xy(double x, double y, double t,
                                  const ProblemSpec& spec,
                                  const QuadratureConfig& cfg = {}) {
    auto [r, theta] = to_polar(x, y);
    return temperature(r, theta, t, spec, cfg);
}

// Fixed-x slice over a list of y values.
inline std::vector<FieldResult> evaluate_slice(double x_fixed,
                                               const std::vector<double>& y_points,
                                               double t, const ProblemSpec& spec,
                                               const QuadratureConfig& cfg = {}) {
    std::vector<FieldResult> out(y_points.size());
    for (std::size_t i = 0; i < y_points.size(); ++i)
        out[i] = temperature_xy(x_fixed, y_points[i], t, spec, cfg);
    return out;
}

struct FieldGrid {
    std::vector<double> xs;          // size nx
    std::vector<double> ys;          // size ny
    std::vector<FieldResult> cells;  // row-major: cells[iy * nx + ix]
    double t = 0.0;

    const FieldResult& at(std::size_t ix, std::size_t iy) const {
        return cells[iy * xs.size() + ix];
    }
};

// Per-point failures are flagged in the cell (converged = false), never
// thrown. Evaluation order does not affect results; n_threads > 1 splits the
// cell index range and each worker writes only its own slots, so output is
// identical to the sequential run.
inline FieldGrid evaluate_grid(double x0, double x1, std::size_t nx,
                               double y0, double y1, std::size_t ny,
                               double t, const ProblemSpec& spec,
                               const QuadratureConfig& cfg = {},
                               unsigned n_threads = 1) {
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("evaluate_grid: need at least 2x2 points");
    if (!(x0 >= 0.0))
        throw std::invalid_argument("evaluate_grid: x range must be >= 0");
    FieldGrid g;
    g.t = t;
    g.xs.resize(nx);
    g.ys.resize(ny);
    for (std::size_t i = 0; i < nx; ++i)
        g.xs[i] = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(nx - 1);
    for (std::size_t j = 0; j < ny; ++j)
        g.ys[j] = y0 + (y1 - y0) * static_cast<double>(j) / static_cast<double>(ny - 1);
    g.cells.resize(nx * ny);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const std::size_t ix = idx % nx, iy = idx / nx;
            try {
                g.cells[idx] = temperature_xy(g.xs[ix], g.ys[iy], t, spec, cfg);
            } catch (const std::exception&) {
                g.cells[idx] = FieldResult{};
                g.cells[idx].converged = false;
                g.cells[idx].failing_term = "evaluation";
            }
        }
    };

    const std::size_t total = g.cells.size();
    if (n_threads <= 1) {
        run_range(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + n_threads - 1) / n_threads;
        for (unsigned w = 0; w < n_threads; ++w) {
            const std::size_t b = std::min<std::size_t>(w * chunk, total);
            const std::size_t e = std::min<std::size_t>(b + chunk, total);
            if (b < e) pool.emplace_back(run_range, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return g;
}

} // namespace halfspace_thermal
