#pragma once

// Fixed-Talbot numerical inverse Laplace transform.
//
// f(t) = (r/N) [ (1/2) F(r) e^{rt}
//              + sum_{k=1}^{N-1} Re( e^{s_k t} F(s_k) (1 + i sigma_k) ) ]
// with r = 2N/(5t), theta_k = k pi / N, s_k = r theta_k (cot theta_k + i),
// sigma_k = theta_k + (theta_k cot theta_k - 1) cot theta_k.
//
// Accuracy note: the scheme's roundoff term grows like e^{2N/5} * eps, so
// raising N beyond ~32 in double precision makes results worse, not better.
// Verification therefore compares two moderate node counts (24 vs 32)
// instead of doubling N.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace halfspace_thermal {

struct InversionResult {
    double value = 0.0;
    double error = 0.0; // |N=32 result - N=24 result|
    bool converged = false;
};

template <class F>
double fixed_talbot(F&& transform, double t, int n_nodes = 32) {
    if (!(t > 0.0)) throw std::invalid_argument("fixed_talbot: t must be > 0");
    if (n_nodes < 4) throw std::invalid_argument("fixed_talbot: need >= 4 nodes");
    using cplx = std::complex<double>;
    const double pi = 3.1415926535897932385;
    const double r = 2.0 * n_nodes / (5.0 * t);
    double sum = 0.5 * std::real(transform(cplx(r, 0.0))) * std::exp(r * t);
    for (int k = 1; k < n_nodes; ++k) {
        const double theta = k * pi / n_nodes;
        const double cot = std::cos(theta) / std::sin(theta);
        const cplx s(r * theta * cot, r * theta);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        sum += std::real(std::exp(s * t) * transform(s) * cplx(1.0, sigma));
    }
    return sum * r / n_nodes;
}

// Inverts transform at time t twice (N=24, N=32) and uses the spread as the
// error estimate. The 32-node value is returned.
template <class F>
InversionResult talbot_inverse_checked(F&& transform, double t,
                                       double rel_tol = 1e-8,
                                       double abs_tol = 1e-14) {
    InversionResult res;
    const double v24 = fixed_talbot(transform, t, 24);
    const double v32 = fixed_talbot(transform, t, 32);
    res.value = v32;
    res.error = std::abs(v32 - v24);
    res.converged = res.error <= std::max(abs_tol, rel_tol * std::abs(v32));
    return res;
}

} // namespace halfspace_thermal
