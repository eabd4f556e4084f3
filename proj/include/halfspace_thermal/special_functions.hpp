#pragma once

// Repeated integrals of the complementary error function, i^n erfc for n <= 3.
// These are the closed-form building blocks of the ramp time kernels.

#include <cmath>
#include <limits>

namespace halfspace_thermal {

inline constexpr double inv_sqrt_pi = 0.5641895835477562869480794515607726;

// erfc underflows to exact 0 in double arithmetic near x ~ 26.5; everything
// here treats x >= 27 as hard zero so callers never see spurious subnormals.
inline constexpr double erfc_underflow_x = 27.0;

namespace detail {

// The closed forms below subtract nearly equal terms once x is a few units
// wide, so for x >= 2 the family is evaluated by downward recurrence
// (i^{n} = 2(n+2) i^{n+2} + 2x i^{n+1}) from an arbitrary seed, rescaled
// against the accurately known i^0 = erfc(x). Downward, the wanted solution
// outgrows the parasitic one at every step; starting 80 orders up leaves no
// trace of the seed even at x = 2 and costs only ~320 flops.
inline void ierfc_downward(double x, double& i1, double& i2, double& i3) {
    constexpr int top = 80;
    double v_np2 = 0.0; // v_{n+2}, seeded arbitrarily
    double v_np1 = 1.0; // v_{n+1}
    double u1 = 0.0, u2 = 0.0, u3 = 0.0;
    for (int n = top - 1; n >= 0; --n) {
        const double v = 2.0 * (n + 2) * v_np2 + 2.0 * x * v_np1;
        if (n == 1) u1 = v;
        else if (n == 2) u2 = v;
        else if (n == 3) u3 = v;
        v_np2 = v_np1;
        v_np1 = v;
    }
    // v_np1 holds v_0. Divide by it before touching erfc: for large x the
    // raw factor erfc(x)/v_0 would underflow even though every i^n is
    // representable, while the ratios u_n/v_0 are always O(1/(2x)^n).
    const double i0 = std::erfc(x);
    i1 = (u1 / v_np1) * i0;
    i2 = (u2 / v_np1) * i0;
    i3 = (u3 / v_np1) * i0;
}

inline constexpr double ierfc_downward_switch = 2.0;

inline double ierfc_pick(int n, double x) {
    double i1, i2, i3;
    ierfc_downward(x, i1, i2, i3);
    return n == 1 ? i1 : (n == 2 ? i2 : i3);
}

} // namespace detail

// i^1 erfc(x) = e^{-x^2}/sqrt(pi) - x erfc(x)
inline double i1erfc(double x) {
    if (x >= erfc_underflow_x) return 0.0;
    if (x >= detail::ierfc_downward_switch) return detail::ierfc_pick(1, x);
    return inv_sqrt_pi * std::exp(-x * x) - x * std::erfc(x);
}

// i^2 erfc(x) = ((1 + 2x^2) erfc(x) - (2x/sqrt(pi)) e^{-x^2}) / 4
inline double i2erfc(double x) {
    if (x >= erfc_underflow_x) return 0.0;
    if (x >= detail::ierfc_downward_switch) return detail::ierfc_pick(2, x);
    return 0.25 * ((1.0 + 2.0 * x * x) * std::erfc(x)
                   - 2.0 * x * inv_sqrt_pi * std::exp(-x * x));
}

// i^3 erfc(x) = ((1 + x^2)/(6 sqrt(pi))) e^{-x^2} - (x/4 + x^3/6) erfc(x)
inline double i3erfc(double x) {
    if (x >= erfc_underflow_x) return 0.0;
    if (x >= detail::ierfc_downward_switch) return detail::ierfc_pick(3, x);
    return (1.0 + x * x) / 6.0 * inv_sqrt_pi * std::exp(-x * x)
         - (0.25 * x + x * x * x / 6.0) * std::erfc(x);
}

} // namespace halfspace_thermal
