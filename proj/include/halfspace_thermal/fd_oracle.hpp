#pragma once

// Independent transient finite-difference solver on the truncated rectangle
// [0, a] x [-b/2, b/2], used to validate the semi-analytical field.
//
// Discretization: 5-point Laplacian on a uniform grid, Crank-Nicolson in
// time with a Rannacher startup (the first step is taken as two backward
// Euler half-steps, damping the ringing excited by the incompatible t = 0
// step data). BE with step dt/2 and CN with step dt share the system matrix
// I - (dt/2) L, so one factorization serves the whole march.
//
// Boundary conditions on x = 0: prescribed temperature T0 f0(t) for y > 0
// (junction node included), prescribed flux dT/dx = T0' g0(t) for y < 0 via
// a ghost node: T(-h,y) = T(h,y) - 2h T0' g0, which adds -(2/h) T0' g0 to
// the Laplacian row. Far edges (x = a, y = +-b/2) are zero-flux.

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "field.hpp"

namespace halfspace_thermal {

struct FdGrid {
    double a = 1.0;   // depth extent: x in [0, a]
    double b = 2.0;   // width extent: y in [-b/2, b/2]
    double h = 0.01;  // mesh spacing
    double dt = 1e-4; // time step

    int nx() const { return static_cast<int>(std::lround(a / h)) + 1; }
    int ny() const { return static_cast<int>(std::lround(b / h)) + 1; }
    double y0() const { return -0.5 * b; }

    void validate() const {
        if (!(h > 0.0 && dt > 0.0 && a > 0.0 && b > 0.0))
            throw std::invalid_argument("FdGrid: a, b, h, dt must be positive");
    }
};

class FdSolution {
public:
    FdSolution(FdGrid grid, double t_end, std::vector<double> data,
               double min_seen, double max_seen)
        : grid_(grid), t_end_(t_end), data_(std::move(data)),
          min_seen_(min_seen), max_seen_(max_seen) {}

    const FdGrid& grid() const { return grid_; }
    double t_end() const { return t_end_; }
    double min_seen() const { return min_seen_; }
    double max_seen() const { return max_seen_; }

    double value_at_node(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * grid_.ny() + j];
    }

    // Bilinear interpolation at an arbitrary in-domain point.
    double sample(double x, double y) const {
        const int nx = grid_.nx(), ny = grid_.ny();
        const double fi = x / grid_.h;
        const double fj = (y - grid_.y0()) / grid_.h;
        if (!(fi >= -1e-9 && fi <= nx - 1 + 1e-9 && fj >= -1e-9
              && fj <= ny - 1 + 1e-9))
            throw std::invalid_argument("FdSolution::sample: point outside domain");
        int i0 = std::min(static_cast<int>(std::floor(fi)), nx - 2);
        int j0 = std::min(static_cast<int>(std::floor(fj)), ny - 2);
        i0 = std::max(i0, 0);
        j0 = std::max(j0, 0);
        const double di = std::min(std::max(fi - i0, 0.0), 1.0);
        const double dj = std::min(std::max(fj - j0, 0.0), 1.0);
        return value_at_node(i0, j0) * (1.0 - di) * (1.0 - dj)
             + value_at_node(i0 + 1, j0) * di * (1.0 - dj)
             + value_at_node(i0, j0 + 1) * (1.0 - di) * dj
             + value_at_node(i0 + 1, j0 + 1) * di * dj;
    }

    // Largest |T| on the x = a edge; the depth truncation is sound when this
    // is tiny (the reflective cutoff doubles the true far tail, no more).
    double max_abs_depth_edge() const {
        const int nx = grid_.nx(), ny = grid_.ny();
        double m = 0.0;
        for (int j = 0; j < ny; ++j)
            m = std::max(m, std::abs(value_at_node(nx - 1, j)));
        return m;
    }

    // Largest |T| on the y = -b/2 edge, excluding the x = 0 corner node.
    double max_abs_bottom_edge() const {
        const int nx = grid_.nx();
        double m = 0.0;
        for (int i = 1; i < nx; ++i)
            m = std::max(m, std::abs(value_at_node(i, 0)));
        return m;
    }

private:
    FdGrid grid_;
    double t_end_;
    std::vector<double> data_; // idx = i * ny + j; x = i h, y = y0 + j h
    double min_seen_, max_seen_;
};

inline FdSolution fd_solve(const ProblemSpec& spec, const FdGrid& grid,
                           double t_end) {
    grid.validate();
    if (!(t_end > 0.0))
        throw std::invalid_argument("fd_solve: t_end must be > 0");

    const int nx = grid.nx(), ny = grid.ny();
    const double h = grid.h, dt = grid.dt, y0 = grid.y0();
    const std::size_t N = static_cast<std::size_t>(nx) * ny;
    const auto idx = [ny](int i, int j) { return static_cast<long>(i) * ny + j; };

    std::vector<bool> dirichlet(N, false);
    Eigen::VectorXd neumann_coeff = Eigen::VectorXd::Zero(static_cast<long>(N));

    std::vector<Eigen::Triplet<double>> lap;
    lap.reserve(N * 5);
    const double ih2 = 1.0 / (h * h);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const long k = idx(i, j);
            const double y = y0 + j * h;
            if (i == 0 && y > -0.25 * h) { // Dirichlet side, junction included
                dirichlet[k] = true;
                continue;
            }
            lap.emplace_back(k, k, -4.0 * ih2);
            if (i == 0) {
                // flux row: ghost T(-h) = T(h) - 2h T0' g0
                lap.emplace_back(k, idx(1, j), 2.0 * ih2);
                neumann_coeff[k] = -2.0 / h * spec.T0_prime;
            } else if (i == nx - 1) {
                lap.emplace_back(k, idx(nx - 2, j), 2.0 * ih2);
            } else {
                lap.emplace_back(k, idx(i - 1, j), ih2);
                lap.emplace_back(k, idx(i + 1, j), ih2);
            }
            if (j == 0) {
                lap.emplace_back(k, idx(i, 1), 2.0 * ih2);
            } else if (j == ny - 1) {
                lap.emplace_back(k, idx(i, ny - 2), 2.0 * ih2);
            } else {
                lap.emplace_back(k, idx(i, j - 1), ih2);
                lap.emplace_back(k, idx(i, j + 1), ih2);
            }
        }
    }

    Eigen::SparseMatrix<double> L(static_cast<long>(N), static_cast<long>(N));
    L.setFromTriplets(lap.begin(), lap.end());

    // A = I - (dt/2) L; Dirichlet rows of L are empty, so those rows of A
    // are pure identity.
    std::vector<Eigen::Triplet<double>> sys;
    sys.reserve(lap.size() + N);
    for (std::size_t k = 0; k < N; ++k)
        sys.emplace_back(static_cast<long>(k), static_cast<long>(k), 1.0);
    for (const auto& tpl : lap)
        sys.emplace_back(tpl.row(), tpl.col(), -0.5 * dt * tpl.value());
    Eigen::SparseMatrix<double> A(static_cast<long>(N), static_cast<long>(N));
    A.setFromTriplets(sys.begin(), sys.end());

    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.compute(A);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("fd_solve: factorization failed");

    Eigen::VectorXd T = Eigen::VectorXd::Zero(static_cast<long>(N));
    Eigen::VectorXd rhs(static_cast<long>(N));
    const long nsteps = std::lround(t_end / dt);
    if (!(nsteps >= 1) || std::abs(nsteps * dt - t_end) > 1e-9 * t_end)
        throw std::invalid_argument("fd_solve: t_end must be a multiple of dt");

    double min_seen = 0.0, max_seen = 0.0;
    auto apply_dirichlet = [&](Eigen::VectorXd& v, double tval) {
        const double bc = spec.T0 * spec.f0.value(tval);
        for (std::size_t k = 0; k < N; ++k)
            if (dirichlet[k]) v[static_cast<long>(k)] = bc;
    };

    for (long step = 0; step < nsteps; ++step) {
        const double t_n = step * dt;
        const double t_np1 = (step + 1) * dt;
        if (step == 0) {
            // Rannacher startup: two backward Euler half-steps.
            for (int half = 0; half < 2; ++half) {
                const double t_half = t_n + 0.5 * dt * (half + 1);
                rhs = T + (0.5 * dt * spec.g0.value(t_half)) * neumann_coeff;
                apply_dirichlet(rhs, t_half);
                T = solver.solve(rhs);
            }
        } else {
            const double g_avg =
                0.5 * (spec.g0.value(t_n) + spec.g0.value(t_np1));
            rhs = T + 0.5 * dt * (L * T) + (dt * g_avg) * neumann_coeff;
            apply_dirichlet(rhs, t_np1);
            T = solver.solve(rhs);
        }
        const double lo = T.minCoeff(), hi = T.maxCoeff();
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::runtime_error("fd_solve: non-finite values at t = "
                                     + std::to_string(t_np1));
        min_seen = std::min(min_seen, lo);
        max_seen = std::max(max_seen, hi);
    }

    return FdSolution(grid, nsteps * dt,
                      std::vector<double>(T.data(), T.data() + N),
                      min_seen, max_seen);
}

struct CompareStats {
    double max_diff = 0.0;
    double mean_diff = 0.0;
    std::size_t worst_index = 0;
    std::vector<double> diffs;
    bool pass = false;
};

// Per-point |semi-analytical - FD| over a sample set at the solve's end time.
inline CompareStats fd_compare(const FdSolution& fd, const ProblemSpec& spec,
                               const std::vector<std::pair<double, double>>& points,
                               double tol,
                               const QuadratureConfig& cfg = {}) {
    CompareStats st;
    st.diffs.reserve(points.size());
    double sum = 0.0;
    for (std::size_t n = 0; n < points.size(); ++n) {
        const auto& [x, y] = points[n];
        const double semi = temperature_xy(x, y, fd.t_end(), spec, cfg).value;
        const double d = std::abs(semi - fd.sample(x, y));
        st.diffs.push_back(d);
        sum += d;
        if (d > st.max_diff) {
            st.max_diff = d;
            st.worst_index = n;
        }
    }
    st.mean_diff = points.empty() ? 0.0 : sum / static_cast<double>(points.size());
    st.pass = st.max_diff <= tol;
    return st;
}

} // namespace halfspace_thermal
