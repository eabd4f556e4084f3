#pragma once

// Problem definition, unit scaling, and coordinate handling.
//
// All solver modules work in scaled variables: lengths against x* = 1 m
// (y additionally stretched by sqrt(ell) through y* = 1/sqrt(ell)), time
// against t* = x*^2/kappa, and temperature as (T - T*)/T*. The half-space
// occupies x >= 0; its surface carries prescribed temperature for y > 0 and
// prescribed flux for y < 0.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "forcing.hpp"

namespace halfspace_thermal {

struct MaterialScales {
    double k = 1.0;      // thermal conductivity, W/(m K)
    double ell = 1.0;    // anisotropy ratio, dimensionless
    double rho = 1.0;    // density, kg/m^3
    double c_v = 1.0;    // specific heat, J/(kg K)
    double T_star = 1.0; // reference temperature, K

    double kappa() const { return k / (rho * c_v); }
    double x_star() const { return 1.0; }
    double y_star() const { return 1.0 / std::sqrt(ell); }
    double t_star() const { return x_star() * x_star() / kappa(); }

    static MaterialScales validated(double k, double ell, double rho,
                                    double c_v, double T_star) {
        auto positive = [](double v, const char* name) {
            if (!(std::isfinite(v) && v > 0.0))
                throw std::invalid_argument(std::string("material.") + name
                                            + " must be a finite positive number");
        };
        positive(k, "k");
        positive(ell, "ell");
        positive(rho, "rho");
        positive(c_v, "c_v");
        positive(T_star, "T_star");
        return MaterialScales{k, ell, rho, c_v, T_star};
    }
};

struct ProblemSpec {
    double T0 = 1.0;       // Dirichlet amplitude (scaled)
    double T0_prime = 0.0; // Neumann amplitude (scaled)
    ForcingProfile f0 = ForcingProfile::step(); // temperature-side profile
    ForcingProfile g0 = ForcingProfile::step(); // flux-side profile
};

struct FieldSample {
    double r = 0.0;
    double theta = 0.0;
    double t = 0.0;
    double value = 0.0;
};

struct PhysicalPoint { double x, y, t, T; };
struct ScaledPoint { double x, y, t, T; };

namespace detail {
inline void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite");
}
} // namespace detail

inline ScaledPoint nondimensionalize(const PhysicalPoint& p,
                                     const MaterialScales& s) {
    detail::require_finite(p.x, "x");
    detail::require_finite(p.y, "y");
    detail::require_finite(p.t, "t");
    detail::require_finite(p.T, "T");
    return {p.x / s.x_star(), p.y / s.y_star(), p.t / s.t_star(),
            (p.T - s.T_star) / s.T_star};
}

inline PhysicalPoint redimensionalize(const ScaledPoint& p,
                                      const MaterialScales& s) {
    detail::require_finite(p.x, "x");
    detail::require_finite(p.y, "y");
    detail::require_finite(p.t, "t");
    detail::require_finite(p.T, "T");
    return {p.x * s.x_star(), p.y * s.y_star(), p.t * s.t_star(),
            s.T_star * (1.0 + p.T)};
}

// (x, y) -> (r, theta) with theta in [-pi/2, pi/2]; the half-space admits
// only x >= 0.
inline std::pair<double, double> to_polar(double x, double y) {
    if (!(x >= 0.0))
        throw std::invalid_argument("to_polar: x must be >= 0 (half-space)");
    return {std::hypot(x, y), std::atan2(y, x)};
}

inline std::pair<double, double> to_cartesian(double r, double theta) {
    if (!(r >= 0.0))
        throw std::invalid_argument("to_cartesian: r must be >= 0");
    return {r * std::cos(theta), r * std::sin(theta)};
}

} // namespace halfspace_thermal
