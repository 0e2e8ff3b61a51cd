#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace elastica {

// Base class for all library failures. `code()` is a stable snake_case
// identifier suitable for machine-readable diagnostics (the CLI puts it in
// its JSON error output); `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DegenerateInterval : Error {
    explicit DegenerateInterval(const std::string& w) : Error("degenerate_interval", w) {}
};

struct NonUnitTangent : Error {
    explicit NonUnitTangent(const std::string& w) : Error("non_unit_tangent", w) {}
};

struct InfeasibleChord : Error {
    explicit InfeasibleChord(const std::string& w) : Error("infeasible_chord", w) {}
};

struct OddSubdivision : Error {
    explicit OddSubdivision(const std::string& w) : Error("odd_subdivision", w) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& w) : Error("length_mismatch", w) {}
};

struct TooFewKnots : Error {
    explicit TooFewKnots(const std::string& w) : Error("too_few_knots", w) {}
};

struct NonAscendingKnots : Error {
    explicit NonAscendingKnots(const std::string& w) : Error("non_ascending_knots", w) {}
};

struct DegenerateSeed : Error {
    explicit DegenerateSeed(const std::string& w) : Error("degenerate_seed", w) {}
};

struct NonFiniteEvaluation : Error {
    explicit NonFiniteEvaluation(const std::string& w) : Error("non_finite_evaluation", w) {}
};

struct EndpointMiss : Error {
    explicit EndpointMiss(const std::string& w) : Error("endpoint_miss", w) {}
};

// Invalid argument of an elliptic function (m < 0, or the integrand turning
// imaginary for m > 1).
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("domain_error", w) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& w) : Error("invalid_input", w) {}
};

struct InvalidSamples : Error {
    explicit InvalidSamples(const std::string& w) : Error("invalid_samples", w) {}
};

} // namespace elastica
