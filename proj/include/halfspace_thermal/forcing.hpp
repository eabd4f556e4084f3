#pragma once

// Temporal boundary forcing profiles and their Laplace transforms.
//
// unit_step: f0(t) = H(t),            f0~(s) = 1/s
// ramp:      f0(t) = H(t) + (t-a)H(t-a) - 2(t-b)H(t-b) + (t-2b+a)H(t-2b+a)
//            (rises from 1 with slope 1 at t=a, turns over at t=b, returns
//            to level 1 at t=2b-a),   f0~(s) = 1/s + (e^{-as} - 2e^{-bs}
//                                              + e^{-(2b-a)s})/s^2
// custom:    user-supplied transform s -> f0~(s), analytic for Re(s) > 0;
//            time-domain values come from numerical inversion.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "talbot.hpp"

namespace halfspace_thermal {

enum class ProfileKind { unit_step, ramp, custom };

// One exponential-shift component of a profile transform:
// weight * e^{-shift s} * s^{-s_power}.
struct LaplaceTerm {
    double shift = 0.0;
    double weight = 1.0;
    int s_power = 1;
};

class ForcingProfile {
public:
    static ForcingProfile step() { return ForcingProfile(ProfileKind::unit_step); }

    static ForcingProfile ramp(double a, double b) {
        if (!(a > 0.0 && b > a))
            throw std::invalid_argument("ramp profile requires 0 < a < b");
        ForcingProfile p(ProfileKind::ramp);
        p.a_ = a;
        p.b_ = b;
        return p;
    }

    static ForcingProfile custom(
        std::function<std::complex<double>(std::complex<double>)> transform) {
        if (!transform)
            throw std::invalid_argument("custom profile requires a transform");
        ForcingProfile p(ProfileKind::custom);
        p.custom_ = std::move(transform);
        return p;
    }

    ProfileKind kind() const { return kind_; }
    double ramp_a() const { return a_; }
    double ramp_b() const { return b_; }

    // Time-domain value f0(t); 0 for t <= 0.
    double value(double t) const {
        if (t <= 0.0) return 0.0;
        switch (kind_) {
        case ProfileKind::unit_step:
            return 1.0;
        case ProfileKind::ramp: {
            double v = 1.0;
            if (t > a_) v += t - a_;
            if (t > b_) v -= 2.0 * (t - b_);
            const double c = 2.0 * b_ - a_;
            if (t > c) v += t - c;
            return v;
        }
        case ProfileKind::custom:
            return talbot_inverse_checked(custom_, t).value;
        }
        return 0.0;
    }

    // Shift decomposition of the transform (step and ramp only).
    std::vector<LaplaceTerm> laplace_terms() const {
        switch (kind_) {
        case ProfileKind::unit_step:
            return {{0.0, 1.0, 1}};
        case ProfileKind::ramp:
            return {{0.0, 1.0, 1},
                    {a_, 1.0, 2},
                    {b_, -2.0, 2},
                    {2.0 * b_ - a_, 1.0, 2}};
        case ProfileKind::custom:
            throw std::logic_error("custom profiles have no term decomposition");
        }
        return {};
    }

    // f0~(s) for any kind.
    std::complex<double> transform(std::complex<double> s) const {
        if (kind_ == ProfileKind::custom) return custom_(s);
        std::complex<double> acc = 0.0;
        for (const auto& term : laplace_terms()) {
            std::complex<double> p = term.weight * std::exp(-term.shift * s);
            for (int i = 0; i < term.s_power; ++i) p /= s;
            acc += p;
        }
        return acc;
    }

    const std::function<std::complex<double>(std::complex<double>)>&
    custom_transform() const { return custom_; }

private:
    explicit ForcingProfile(ProfileKind k) : kind_(k) {}

    ProfileKind kind_;
    double a_ = 0.0, b_ = 0.0;
    std::function<std::complex<double>(std::complex<double>)> custom_;
};

} // namespace halfspace_thermal
