#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "elastica/geometry.hpp"

namespace elastica {

// Clamped boundary data: find a unit-speed curve x : [a,b] -> R^2 with
// x(a)=xa, x'(a)=va, x(b)=xb, x'(b)=vb. The arc length is fixed at b-a.
struct BoundaryProblem {
    double a = 0.0;
    double b = 1.0;
    Vec2 xa = Vec2::Zero();
    Vec2 xb = Vec2::Zero();
    Vec2 va = Vec2::UnitX();
    Vec2 vb = Vec2::UnitX();

    double length() const { return b - a; }
    double chord() const { return (xb - xa).norm(); }
};

// Checks interval, tangent norms and chord feasibility. Tangents within 1e-9
// of unit length are renormalized; larger deviations are rejected.
// Throws DegenerateInterval, NonUnitTangent or InfeasibleChord.
BoundaryProblem validate_problem(const BoundaryProblem& p);

// Rotates/translates the data so that xa=(0,0), va=(1,0). The returned
// isometry maps the canonical frame back to the original one.
std::pair<BoundaryProblem, PlanarIsometry> canonical_pose(const BoundaryProblem& p);

// Sampled planar curve: position, heading lifting and curvature at each t.
struct CurveSamples {
    std::vector<double> t;
    std::vector<Vec2> position;
    std::vector<double> heading;
    std::vector<double> curvature;

    std::size_t size() const { return t.size(); }

    // Throws InvalidSamples when sizes disagree, t is not strictly
    // increasing, or the heading jumps by >= pi between samples (not a
    // continuous lifting).
    void validate() const;
};

CurveSamples apply_isometry(const CurveSamples& c, const PlanarIsometry& iso);

enum class SolveStatus { converged, max_iterations, infeasible, failed };

std::string_view to_string(SolveStatus s);

struct SolveReport {
    double energy = 0.0;
    double constraint_residual = 0.0;
    int iterations = 0;           // inner (quasi-Newton) iterations in total
    int outer_iterations = 0;
    double elapsed_seconds = 0.0;
    SolveStatus status = SolveStatus::failed;
};

// (1/2h) * sum (phi_j - phi_{j-1})^2, the uniform-grid discretisation of the
// bending energy 0.5 * integral of kappa^2. All methods in this project
// report energy through this one formula so that comparisons are meaningful.
double discrete_bending_energy(std::span<const double> phi, double h);

} // namespace elastica
