#pragma once

// Internal: the concrete ConstrainedProblem instances built by the solver
// and the baseline, exposed so tests can probe their callbacks (gradient
// and Jacobian checks) without duplicating the formulas.

#include <vector>

#include <Eigen/Core>

#include "elastica/optimizer.hpp"
#include "elastica/problem.hpp"

namespace elastica::detail {

struct Step2Instance {
    ConstrainedProblem problem;
    Eigen::VectorXd x0;        // seed headings with the ends pinned
    std::vector<double> nodes; // n+1 node times in the canonical frame
    double h = 0.0;
};

// `canonical` must already be in the canonical pose. initial_phi, when given,
// supplies the start headings (length n+1) instead of the Step-1 seed values;
// the end entries are pinned afterwards either way.
Step2Instance make_step2_instance(const BoundaryProblem& canonical, int n,
                                  const std::vector<double>* initial_phi = nullptr);

struct BaselineInstance {
    ConstrainedProblem problem;
    Eigen::VectorXd x0; // flattened vertices of the straight-line start
    double h = 0.0;
};

BaselineInstance make_baseline_instance(const BoundaryProblem& canonical, int n);

} // namespace elastica::detail
