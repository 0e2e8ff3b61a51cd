#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "elastica/problem.hpp"

namespace elastica {

struct OptimizerSettings {
    double constraint_tol = 1e-10;
    double gradient_tol = 1e-8;
    int max_outer = 50;
    int max_inner = 200;
    double initial_penalty = 10.0;

    // Optional per-accepted-step observer (outer index, inner index, merit
    // value). Used by tests to check merit monotonicity; leave empty
    // otherwise.
    std::function<void(int, int, double)> trace;
};

// Smooth equality-constrained problem
//     min f(x)  s.t.  c(x) = 0,
// with analytic gradient and constraint Jacobian. Entries listed in
// fixed_indices keep the value they have in the start vector and are
// eliminated from the search space, not penalized.
struct ConstrainedProblem {
    int dimension = 0;

    // f(x); must fill grad (size = dimension).
    std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)> objective;

    int constraint_count = 0;

    // Must fill c (size = constraint_count) and jac (constraint_count x dimension).
    std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&, Eigen::MatrixXd&)> constraints;

    std::vector<int> fixed_indices;
};

struct OptimizeResult {
    Eigen::VectorXd x;
    Eigen::VectorXd multipliers;
    SolveReport report; // energy = objective value at x
};

// Augmented-Lagrangian outer loop with a BFGS inner minimizer (Armijo
// backtracking line search). Deterministic: identical inputs produce
// identical iterates. Throws NonFiniteEvaluation when the callbacks return
// NaN/Inf at an accepted point; an exhausted iteration budget is reported
// through report.status, not thrown.
OptimizeResult minimize_equality_constrained(const ConstrainedProblem& p,
                                             const Eigen::VectorXd& x0,
                                             const OptimizerSettings& s = {});

} // namespace elastica
