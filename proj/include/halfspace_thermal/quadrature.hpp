#pragma once

// Adaptive Gauss-Kronrod 7-15 quadrature on a finite interval.
// Bisection is worst-panel-first with a deterministic ordering, so results
// are reproducible bit-for-bit for a given integrand and tolerance.

#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace halfspace_thermal {

struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;       // estimated absolute error bound
    std::size_t panels = 0;   // panels in the final subdivision
    bool converged = false;
};

namespace detail {

// 15-point Kronrod nodes (nonnegative half) with Kronrod and embedded
// 7-point Gauss weights. Symmetric about 0 on [-1, 1].
struct Gk15Node { double x, wk, wg; };
inline constexpr Gk15Node gk15_nodes[8] = {
    {0.000000000000000000000000000000000e+00, 2.094821410847278280129991748917143e-01, 4.179591836734693877551020408163265e-01},
    {2.077849550078984676006894037732449e-01, 2.044329400752988924141619992346491e-01, 0.0},
    {4.058451513773971669066064120769615e-01, 1.903505780647854099132564024210137e-01, 3.818300505051189449503697754889751e-01},
    {5.860872354676911302941448382587296e-01, 1.690047266392679028265834265985503e-01, 0.0},
    {7.415311855993944398638647732807884e-01, 1.406532597155259187451895905102379e-01, 2.797053914892766679014677714237796e-01},
    {8.648644233597690727897127886409262e-01, 1.047900103222501838398763225415180e-01, 0.0},
    {9.491079123427585245261896840478513e-01, 6.309209262997855329070066318920429e-02, 1.294849661688696932706114326790820e-01},
    {9.914553711208126392068546975263285e-01, 2.293532201052922496373200805896959e-02, 0.0},
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const {
        if (error != o.error) return error < o.error;
        return a > o.a; // deterministic tie-break
    }
};

template <class F>
Panel evaluate_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (const auto& n : gk15_nodes) {
        if (n.x == 0.0) {
            const double v = f(c);
            k15 += n.wk * v;
            g7 += n.wg * v;
        } else {
            const double v = f(c - hw * n.x) + f(c + hw * n.x);
            k15 += n.wk * v;
            g7 += n.wg * v;
        }
    }
    k15 *= hw;
    g7 *= hw;
    // QUADPACK-style error model: sharper than |k15-g7| on smooth panels,
    // conservative on rough ones.
    double err = std::abs(k15 - g7) * 200.0;
    if (err > 0.0 && err < 1.0) err *= std::sqrt(err);
    return {a, b, k15, err};
}

} // namespace detail

template <class F>
IntegrationResult integrate(F&& f, double a, double b,
                            double rel_tol = 1e-10, double abs_tol = 1e-12,
                            std::size_t max_panels = 4000) {
    IntegrationResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::priority_queue<detail::Panel> heap;
    heap.push(detail::evaluate_panel(f, a, b));
    double total_value = heap.top().value;
    double total_error = heap.top().error;
    std::size_t panels = 1;
    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))
           && panels < max_panels) {
        detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // interval at rounding limit
            heap.push(worst);
            break;
        }
        detail::Panel left = detail::evaluate_panel(f, worst.a, mid);
        detail::Panel right = detail::evaluate_panel(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // Recompute sums from the final panel set to shed accumulated rounding.
    double value = 0.0, error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    res.value = value;
    res.error = error;
    res.panels = panels;
    res.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
    return res;
}

} // namespace halfspace_thermal
