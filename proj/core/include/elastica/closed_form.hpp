#pragma once

#include <string_view>

#include "elastica/geometry.hpp"
#include "elastica/problem.hpp"

namespace elastica {

// The three nontrivial curvature profiles solving 2 kappa'' = c kappa - kappa^3:
//   wavelike:   kappa(t) = kappa0 cn(kappa0 (t-t0) / (2 sqrt(p)), p)
//   orbitlike:  kappa(t) = kappa0 dn(kappa0 (t-t0) / 2,           p)
//   borderline: kappa(t) = kappa0 sech(kappa0 (t-t0) / 2)
// with p the elliptic PARAMETER (orbitlike admits p > 1, where dn is signed
// and the curvature oscillates through zero).
enum class ElasticaFamily { wavelike, orbitlike, borderline };

std::string_view to_string(ElasticaFamily f);

struct ClosedFormParams {
    ElasticaFamily family = ElasticaFamily::wavelike;
    double kappa0 = 1.0; // curvature amplitude, > 0
    double p = 0.5;      // elliptic parameter (ignored, forced 1, for borderline)
    double t0 = 0.0;     // phase shift

    // Multiplier of (t - t0) inside the elliptic argument.
    double argument_scale() const;

    // The constant c of the curvature ODE implied by (family, kappa0, p):
    //   wavelike   c = kappa0^2 (2p - 1) / (2p)
    //   orbitlike  c = kappa0^2 (2 - p) / 2
    //   borderline c = kappa0^2 / 2
    // (One relation, 2c = kappa0^2 (3 w^2 - k^2 - 1) / w^2, in terms of the
    // modulus k = sqrt(p) with w = k resp. 1; stated here in parameter form.)
    double ode_constant() const;
};

// Throws DomainError when kappa0 <= 0 or p is out of range for the family.
ClosedFormParams validate_params(const ClosedFormParams& cp);

// Signed curvature at time t.
double curvature_at(const ClosedFormParams& cp, double t);

// Heading lifting with theta(a) = 0. Orbitlike uses the amplitude closed
// form 2(am(k0(t-t0)/2, p) - am(k0(a-t0)/2, p)); the other families
// integrate the curvature by adaptive Simpson (abs tol 1e-10).
double heading_at(const ClosedFormParams& cp, double t, double a);

// n+1 samples of the reference elastica on [a, b] starting at xa with
// heading 0 relative to its own lifting (positions via the refined Simpson
// reconstruction; curvature analytic).
CurveSamples sample_reference(const ClosedFormParams& cp, double a, double b, int n,
                              const Vec2& xa);

// 2 kappa'' - c kappa + kappa^3 with kappa'' by 5-point central differences
// (step 1e-4); near zero everywhere when the kernel and conventions agree.
double elastica_ode_residual(const ClosedFormParams& cp, double t);

} // namespace elastica
