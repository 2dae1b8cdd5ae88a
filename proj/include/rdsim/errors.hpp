#pragma once

#include <stdexcept>
#include <string>

namespace rdsim {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation outside the valid domain (t <= 0, sample off the half-line, ...).
struct DomainError : Error {
    using Error::Error;
};

// A documented parameter constraint failed.  `constraint` carries the bound
// that was violated, in the form it is documented (e.g. "C >= 1/|alpha-eta|").
struct ParamConstraintViolation : Error {
    std::string parameter;
    std::string constraint;
    ParamConstraintViolation(std::string param, std::string constr, const std::string& msg)
        : Error(msg), parameter(std::move(param)), constraint(std::move(constr)) {}
};

// Parameter combination that collapses a closed form (alpha = 2*eta,
// alpha = eta, alpha = 0 for the quadratic-mobility systems, n = 0, mu = -alpha
// for a growth system).
struct DegenerateParameterError : Error {
    using Error::Error;
};

// Operation invoked outside its contract, e.g. the first-integral residual on
// a non-conserving system.
struct ContractError : Error {
    using Error::Error;
};

// Integrand does not decay: no finite truncation of the integral exists.
struct DivergentIntegralError : Error {
    using Error::Error;
};

// Time stepping aborted; `step` is the index of the offending step.
struct SolverAbort : Error {
    long step;
    SolverAbort(const std::string& msg, long step_index) : Error(msg), step(step_index) {}
};

// A residual oracle evaluated to a non-finite value; message names the sample.
struct NumericFailure : Error {
    using Error::Error;
};

struct UnknownSystemError : Error {
    using Error::Error;
};

} // namespace rdsim
