#pragma once

#include <array>
#include <span>
#include <vector>

#include "elastica/geometry.hpp"
#include "elastica/problem.hpp"
#include "elastica/spline.hpp"

namespace elastica {

// Output of the boundary-data-only estimation step: raw interior vectors,
// their normalizations, and the unwrapped headings at the 5 uniform knots
// a, a+h, ..., b with h = (b-a)/4.
struct SeedEstimates {
    double h = 0.0;
    std::array<Vec2, 3> w_tilde{}; // raw estimates of v at a+h, a+2h, a+3h
    std::array<Vec2, 3> v_tilde{}; // normalized
    std::array<double, 5> theta_tilde{};
};

// Interior tangent estimates from boundary data alone:
//   w2  = 3/(8h) (xb - xa) - (va + vb)/4            (error O(h^4) after normalizing)
//   w13 = 3/(8h) (xb - xa) - (va + vb)/8 - v2/4
//   w1  = w13 - (vb - va)/4,  w3 = w13 + (vb - va)/4 (errors O(h^3))
// The problem must be canonical (xa = 0, va = (1,0)). Throws DegenerateSeed
// when any ||w_j|| <= 1e-8: the caller may substitute a straight-line seed,
// but that is its decision to report, not ours to hide.
// theta_tilde is left zero; unwrap_headings / seed_profile fill it.
SeedEstimates interior_tangent_estimates(const BoundaryProblem& canonical);

// Unwraps atan2 headings of unit vectors to the representative closest to
// the previous one; a jump of exactly pi goes counterclockwise (+pi).
// v.front() must correspond to theta0.
std::vector<double> unwrap_headings(std::span<const Vec2> v, double theta0);

struct SeedProfile {
    HeadingProfile heading;  // canonical frame, theta(a) = 0
    PlanarIsometry pose;     // maps the canonical frame back to the original
    SeedEstimates estimates;
};

// Step-1 pipeline: canonicalize, estimate interior tangents, unwrap, and fit
// the 5-knot natural cubic spline.
SeedProfile seed_profile(const BoundaryProblem& p);

} // namespace elastica
