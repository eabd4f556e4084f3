#pragma once

// Real contour kernel G(beta, theta) and its complex progenitor F(beta, theta),
// evaluated on the deformed integration paths
//   alpha_pm = -i beta sin(theta) +- sqrt(beta^2 - 1) cos(theta),  beta >= 1.
//
// Branch bookkeeping: with R = beta + sin(theta) and
//   psi_plus = atan2(-(beta sin(theta) + 1), sqrt(beta^2 - 1) cos(theta)),
// the roots are (alpha_plus - i)^{1/2} = sqrt(R) e^{i psi_plus/2} (principal,
// valid because Re(alpha_plus - i) >= 0) and
// (alpha_minus - i)^{1/2} = -i sqrt(R) e^{-i psi_plus/2} (the lower-path branch,
// psi_minus = -pi - psi_plus). Folding these into F makes G purely real.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "quadrature.hpp"

namespace halfspace_thermal {

// Thrown when kernel_G is asked to evaluate inside the integrable
// endpoint singularity at beta = 1; integrals must substitute beta = 1 + u^2
// instead of sampling there pointwise.
struct singularity_proximity : std::domain_error {
    using std::domain_error::domain_error;
};

struct ContourPoint {
    double beta = 1.0;
    double theta = 0.0;
    std::complex<double> alpha_plus;
    std::complex<double> alpha_minus;
    double R = 0.0;        // |alpha_pm - i| = beta + sin(theta)
    double psi_plus = 0.0; // principal argument of alpha_plus - i
};

namespace detail {

inline void require_beta_theta(double beta, double theta) {
    if (!(beta >= 1.0))
        throw std::invalid_argument("beta must be >= 1");
    if (!(theta >= -1.5707963267948967 && theta <= 1.5707963267948967))
        throw std::invalid_argument("theta must lie in [-pi/2, pi/2]");
}

} // namespace detail

inline std::pair<std::complex<double>, std::complex<double>>
alpha_paths(double beta, double theta) {
    detail::require_beta_theta(beta, theta);
    const double root = std::sqrt(beta * beta - 1.0) * std::cos(theta);
    const double im = -beta * std::sin(theta);
    return {std::complex<double>(root, im), std::complex<double>(-root, im)};
}

inline double psi_plus(double beta, double theta) {
    detail::require_beta_theta(beta, theta);
    return std::atan2(-(beta * std::sin(theta) + 1.0),
                      std::sqrt(beta * beta - 1.0) * std::cos(theta));
}

inline ContourPoint make_contour_point(double beta, double theta) {
    ContourPoint p;
    p.beta = beta;
    p.theta = theta;
    auto [ap, am] = alpha_paths(beta, theta);
    p.alpha_plus = ap;
    p.alpha_minus = am;
    p.R = beta + std::sin(theta);
    p.psi_plus = psi_plus(beta, theta);
    return p;
}

// Large-beta limit of beta^{3/2} G(beta, theta).
inline double kernel_G_asymptotic_coefficient(double theta) {
    return std::cos(0.5 * theta) - std::sin(0.5 * theta);
}

namespace detail {

// Shared core: G given beta, sqrt(beta^2-1) and beta^2-1 computed by the
// caller in whatever parameterization is numerically exact for it.
inline double kernel_G_core(double beta, double theta,
                            double sqrt_beta2m1, double beta2m1) {
    const double sin_t = std::sin(theta);
    const double cos_t = std::cos(theta);
    const double psip = std::atan2(-(beta * sin_t + 1.0), sqrt_beta2m1 * cos_t);
    const double c = std::cos(0.5 * psip);
    const double s = std::sin(0.5 * psip);
    const double R = beta + sin_t;
    // beta^2 - cos^2(theta) = (beta^2 - 1) + sin^2(theta), exact in both maps
    const double denom = (beta2m1 + sin_t * sin_t) * std::sqrt(R);
    const double num = beta * (c + s) - cos_t * sin_t / sqrt_beta2m1 * (c - s);
    return num / denom;
}

} // namespace detail

// Pointwise kernel; strictly beta > 1. The beta = 1 endpoint is integrable
// but not evaluable, so proximity below 1e-300 is rejected.
inline double kernel_G(double beta, double theta) {
    detail::require_beta_theta(beta, theta);
    const double beta2m1 = beta * beta - 1.0;
    if (!(beta - 1.0 >= 1e-300))
        throw singularity_proximity("kernel_G: beta too close to 1; integrate "
                                    "through the beta = 1 + u^2 substitution");
    return detail::kernel_G_core(beta, theta, std::sqrt(beta2m1), beta2m1);
}

// Desingularized form: returns 2 u G(1 + u^2, theta), the integrand of
// int G dbeta under beta = 1 + u^2. The 1/sqrt(beta^2 - 1) factor cancels
// algebraically (beta^2 - 1 = u^2 (2 + u^2)), so u = 0 is regular.
inline double kernel_G_scaled_u(double u, double theta) {
    if (!(u >= 0.0)) throw std::invalid_argument("u must be >= 0");
    const double beta = 1.0 + u * u;
    const double sin_t = std::sin(theta);
    const double cos_t = std::cos(theta);
    const double q = std::sqrt(2.0 + u * u);      // sqrt(beta^2-1) = u q
    const double psip = std::atan2(-(beta * sin_t + 1.0), u * q * cos_t);
    const double c = std::cos(0.5 * psip);
    const double s = std::sin(0.5 * psip);
    const double R = beta + sin_t;
    const double beta2_m_cos2 = sin_t * sin_t + u * u * (2.0 + u * u);
    const double num = 2.0 * u * beta * (c + s) - 2.0 * cos_t * sin_t * (c - s) / q;
    return num / (beta2_m_cos2 * std::sqrt(R));
}

// Independent complex-arithmetic evaluation of F; G equals Re((ic/sqrt2) F)
// with c = e^{-i pi/4}. Used as the verification oracle for kernel_G.
inline std::complex<double> kernel_F_oracle(double beta, double theta) {
    detail::require_beta_theta(beta, theta);
    if (!(beta - 1.0 >= 1e-300))
        throw singularity_proximity("kernel_F_oracle: beta too close to 1");
    using cplx = std::complex<double>;
    const auto [ap, am] = alpha_paths(beta, theta);
    const double R = beta + std::sin(theta);
    const double psip = psi_plus(beta, theta);
    const double sqrtR = std::sqrt(R);
    const cplx sq_p = sqrtR * std::exp(cplx(0.0, 0.5 * psip));
    const cplx sq_m = cplx(0.0, -1.0) * sqrtR * std::exp(cplx(0.0, -0.5 * psip));
    const cplx t1 = 1.0 / (ap * sq_p);
    const cplx t2 = 1.0 / (am * sq_m);
    const double sin_t = std::sin(theta);
    const double cos_t = std::cos(theta);
    return cplx(0.0, -sin_t) * (t1 - t2)
         + beta / std::sqrt(beta * beta - 1.0) * cos_t * (t1 + t2);
}

inline std::complex<double> kernel_G_from_F(std::complex<double> F) {
    using cplx = std::complex<double>;
    const cplx c = std::exp(cplx(0.0, -0.78539816339744830962)); // e^{-i pi/4}
    return cplx(0.0, 1.0) * c / std::sqrt(2.0) * F;
}

// (1/(pi sqrt2)) int_1^inf G(beta, theta) dbeta, which equals 1 for theta < 0
// and 0 for theta > 0. Split as beta = 1 + u^2 on [1,2] and beta = 2/v^2 on
// [2,inf); both maps land on finite intervals with regular integrands.
struct IdentityResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

inline IdentityResult identity_integral(double theta,
                                        double rel_tol = 1e-10,
                                        double abs_tol = 1e-12,
                                        std::size_t max_panels = 4000) {
    detail::require_beta_theta(1.0, theta);
    auto head = integrate([theta](double u) { return kernel_G_scaled_u(u, theta); },
                          0.0, 1.0, rel_tol, abs_tol, max_panels);
    auto tail = integrate([theta](double v) {
                              const double beta = 2.0 / (v * v);
                              const double w = 4.0 / (v * v * v); // |dbeta/dv|
                              return w * kernel_G(beta, theta);
                          },
                          0.0, 1.0, rel_tol, abs_tol, max_panels);
    const double scale = 1.0 / (3.1415926535897932385 * std::sqrt(2.0));
    IdentityResult r;
    r.value = scale * (head.value + tail.value);
    r.error = scale * (head.error + tail.error);
    r.converged = head.converged && tail.converged;
    return r;
}

} // namespace halfspace_thermal
