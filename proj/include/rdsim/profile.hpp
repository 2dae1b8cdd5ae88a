#pragma once

#include <functional>
#include <utility>

#include "rdsim/numerics.hpp"
#include "rdsim/scaling.hpp"

namespace rdsim {

// A reduced profile of the similarity variable (y, rho, sigma or tau).
// Analytic derivatives are optional; when absent, derivative() falls back to
// Richardson-extrapolated central differences with a step scaled to |z|.
struct Profile {
    using Fn = std::function<hp(hp)>;

    Fn value;
    Fn d1; // optional analytic first derivative
    Fn d2; // optional analytic second derivative

    bool has_analytic_derivatives() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }

    hp operator()(hp z) const { return value(z); }

    hp derivative(hp z, int richardson_steps = 1) const {
        if (d1) return d1(z);
        return central_d1(value, z, scaled_step(z), richardson_steps);
    }

    hp second_derivative(hp z, int richardson_steps = 1) const {
        if (d2) return d2(z);
        return central_d2(value, z, scaled_step(z), richardson_steps);
    }

    static Profile constant(hp c) {
        return Profile{[c](hp) { return c; }, [](hp) { return 0.0L; }, [](hp) { return 0.0L; }};
    }

    static Profile zero() { return constant(0.0L); }
};

// A field over (x, t).
struct SpaceTimeField {
    std::function<hp(hp, hp)> eval;
    hp operator()(hp x, hp t) const { return eval(x, t); }
};

// A PDE coefficient D(W, x, t) or f(W, x, t).  For most catalog systems the
// first argument is ignored; `depends_on_w` marks the genuinely nonlinear ones.
struct CoefficientField {
    std::function<hp(hp, hp, hp)> eval;
    bool depends_on_w = false;
    hp operator()(hp w, hp x, hp t) const { return eval(w, x, t); }
};

// W(x,t) = t^mu y(x / t^alpha); throws DomainError for t <= 0.
inline SpaceTimeField reconstruct_w(Profile y, ScalingExponents e) {
    return SpaceTimeField{[y = std::move(y), e](hp x, hp t) {
        const hp z = similarity_variable(x, t, e.alpha);
        return std::pow(t, static_cast<hp>(e.mu)) * y(z);
    }};
}

} // namespace rdsim
