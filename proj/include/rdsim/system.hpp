#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdsim/domain.hpp"
#include "rdsim/profile.hpp"
#include "rdsim/scaling.hpp"

namespace rdsim {

struct ParamDef {
    std::string key;
    double default_value;
    std::string doc;
};

// Default sampling windows used by the verification oracles.  z bounds drive
// the reduced-equation checks; the (t, x) box drives the PDE residual.
struct SampleWindows {
    double z_lo, z_hi;
    double t_lo, t_hi, x_lo, x_hi;
};

// One exactly solvable reaction-diffusion system: the reduced profiles, the
// closed-form fields, and enough metadata to verify and to time-step it.
struct AnalyticRDSystem {
    std::string name;
    std::string family;
    SpatialDomain domain = SpatialDomain::FullLine;
    ScalingExponents exponents;
    std::map<std::string, double> params;  // resolved values, by documented key
    std::map<std::string, double> derived; // values fixed by the construction (e.g. gamma, b)

    Profile y;     // reduced solution profile
    Profile rho;   // reduced diffusivity, D = t^nu rho(z)
    Profile sigma; // reduced source, f = t^lambda sigma(z)
    std::optional<Profile> tau; // conserving systems only: rho y' + alpha z y = tau

    CoefficientField D; // D(W, x, t), closed form
    CoefficientField f; // f(W, x, t), closed form
    SpaceTimeField W;   // exact solution

    // Compact-support systems: the support radius |x| <= support_radius(t).
    std::optional<std::function<hp(hp)>> support_radius;

    SampleWindows windows{};
    std::vector<std::string> warnings; // e.g. "negative diffusion coefficient"
    bool solver_eligible = true;
    std::string alpha_note = "free";   // "free" | "derived: ..." | "fixed: ..."
    std::string constraint_note;

    bool conserving() const { return exponents.conserving(); }

    bool in_domain(double x) const { return domain_contains(domain, x); }

    bool in_support(hp x, hp t) const {
        if (!support_radius) return true;
        return std::fabs(x) <= (*support_radius)(t);
    }

    // D and f as fields over (x, t), composing through W where needed.
    hp D_xt(hp x, hp t) const { return D.depends_on_w ? D(W(x, t), x, t) : D(0.0L, x, t); }
    hp f_xt(hp x, hp t) const { return f.depends_on_w ? f(W(x, t), x, t) : f(0.0L, x, t); }
};

struct SystemDescriptor {
    std::string name;
    std::string family;
    double alpha, mu;
    std::string alpha_note;
    bool conserving;
    bool solver_eligible;
    std::vector<ParamDef> params;
    std::string constraint_note;
    std::vector<std::string> warnings;
};

} // namespace rdsim
