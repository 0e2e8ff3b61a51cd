#pragma once

#include <span>
#include <vector>

#include "elastica/optimizer.hpp"
#include "elastica/problem.hpp"
#include "elastica/spline.hpp"

namespace elastica {

struct Solution {
    BoundaryProblem problem;   // validated original-frame data
    HeadingProfile heading;    // original-frame lifting theta-hat
    CurveSamples curve;        // original-frame reconstruction
    SolveReport report;
    int n = 0;                 // subdivision actually used (even, >= 6)
    std::vector<SolveReport> stage_reports;
};

// Seed-then-optimize solve: samples the Step-1 profile at n+1 nodes, pins
// the end headings (phi_0 = 0 in the canonical frame, phi_n = the
// 2pi-representative of atan2(vb) nearest the seed's end value), minimizes
// the discrete bending energy subject to the Simpson closure S(phi) = xb - xa,
// fits the natural cubic spline through the minimizer and reconstructs the
// curve. n is rounded up to an even value >= 6.
//
// When initial_heading is given (an original-frame profile, e.g. a previous
// solution's), it replaces the Step-1 seed as the start point.
Solution solve_clamped_elastica(const BoundaryProblem& p, int n,
                                const OptimizerSettings& s = {},
                                const HeadingProfile* initial_heading = nullptr);

// Runs solve_clamped_elastica along an ascending schedule of subdivision
// counts, warm-starting each stage from the previous heading. A single-entry
// schedule is bit-identical to the plain solve.
Solution continuation_solve(const BoundaryProblem& p, std::span<const int> n_schedule,
                            const OptimizerSettings& s = {});

} // namespace elastica
