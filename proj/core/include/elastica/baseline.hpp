#pragma once

#include "elastica/optimizer.hpp"
#include "elastica/problem.hpp"
#include "elastica/solver.hpp"

namespace elastica {

// The comparison baseline: minimizes the turning-angle energy
// (1/2h) sum alpha_j^2 over the vertices of a piecewise-linear curve with n
// equal-length segments clamped to the boundary data, starting from the
// straight-line interpolation between the endpoints (deliberately seedless).
// End vertices P_0, P_1, P_{n-1}, P_n are pinned by the boundary positions
// and tangents; the remaining segment lengths are equality constraints.
//
// A run that exhausts its iteration budget returns status=failed with the
// best iterate converted to a curve; it never throws for nonconvergence.
Solution standard_discretisation(const BoundaryProblem& p, int n,
                                 const OptimizerSettings& s = {});

} // namespace elastica
