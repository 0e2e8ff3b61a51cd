#include "elastica/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

constexpr double kArmijoSlope = 1e-4;
constexpr int kMaxBacktracks = 40;
constexpr double kPenaltyGrowth = 10.0;
constexpr double kPenaltyCap = 1e12;
constexpr double kRequiredShrink = 0.25; // ||c|| must shrink 4x per outer pass

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Evaluation {
    double f = 0.0;       // objective
    VectorXd grad;        // objective gradient, full space
    VectorXd c;           // constraints
    MatrixXd jac;         // constraint Jacobian, k x n
    double merit = 0.0;   // augmented Lagrangian value
    VectorXd merit_grad;  // its gradient on the free variables
};

class AugmentedLagrangian {
public:
    AugmentedLagrangian(const ConstrainedProblem& p, const std::vector<int>& free)
        : p_(p), free_(free) {}

    void set_multipliers(const VectorXd& lambda, double mu) {
        lambda_ = lambda;
        mu_ = mu;
    }

    Evaluation evaluate(const VectorXd& xfull) const {
        Evaluation e;
        e.grad.resize(p_.dimension);
        e.f = p_.objective(xfull, e.grad);
        VectorXd penalty_grad = e.grad;
        if (p_.constraint_count > 0) {
            e.c.resize(p_.constraint_count);
            e.jac.resize(p_.constraint_count, p_.dimension);
            p_.constraints(xfull, e.c, e.jac);
            const VectorXd shifted = lambda_ + mu_ * e.c;
            e.merit = e.f + lambda_.dot(e.c) + 0.5 * mu_ * e.c.squaredNorm();
            penalty_grad.noalias() += e.jac.transpose() * shifted;
        } else {
            e.merit = e.f;
        }
        e.merit_grad.resize(static_cast<Eigen::Index>(free_.size()));
        for (std::size_t i = 0; i < free_.size(); ++i) {
            e.merit_grad[static_cast<Eigen::Index>(i)] = penalty_grad[free_[i]];
        }
        return e;
    }

private:
    const ConstrainedProblem& p_;
    const std::vector<int>& free_;
    VectorXd lambda_;
    double mu_ = 0.0;
};

bool finite(double v) { return std::isfinite(v); }

bool finite(const VectorXd& v) { return v.allFinite(); }

} // namespace

OptimizeResult minimize_equality_constrained(const ConstrainedProblem& p,
                                             const Eigen::VectorXd& x0,
                                             const OptimizerSettings& s) {
    const auto t_start = std::chrono::steady_clock::now();
    if (!(s.constraint_tol > 0.0) || !(s.gradient_tol > 0.0) || s.max_outer <= 0 ||
        s.max_inner <= 0 || !(s.initial_penalty > 0.0)) {
        throw InvalidInput("optimizer settings must all be positive");
    }
    if (x0.size() != p.dimension || !x0.allFinite()) {
        throw NonFiniteEvaluation("start vector has wrong size or non-finite entries");
    }

    std::vector<char> is_fixed(static_cast<std::size_t>(p.dimension), 0);
    for (int idx : p.fixed_indices) is_fixed[static_cast<std::size_t>(idx)] = 1;
    std::vector<int> free;
    free.reserve(static_cast<std::size_t>(p.dimension));
    for (int i = 0; i < p.dimension; ++i) {
        if (!is_fixed[static_cast<std::size_t>(i)]) free.push_back(i);
    }
    const auto nfree = static_cast<Eigen::Index>(free.size());

    AugmentedLagrangian merit(p, free);
    VectorXd lambda = VectorXd::Zero(p.constraint_count);
    double mu = s.initial_penalty;
    merit.set_multipliers(lambda, mu);

    VectorXd x = x0;
    Evaluation e = merit.evaluate(x);
    if (!finite(e.f) || !finite(e.grad) || (p.constraint_count > 0 && !finite(e.c))) {
        throw NonFiniteEvaluation("objective or constraints non-finite at the start vector");
    }

    OptimizeResult out;
    out.report.status = SolveStatus::max_iterations;
    int total_inner = 0;
    // The 4x-shrink test compares successive outer results; the start point
    // is not one (a warm start at the solution would otherwise trigger
    // penalty escalation on its first, necessarily "worse", outer pass).
    double cnorm_prev = std::numeric_limits<double>::infinity();
    double inner_tol_seed = (p.constraint_count > 0) ? std::min(1e-2, e.c.norm()) : 1e-2;

    auto apply_free = [&free](VectorXd& xfull, const VectorXd& z) {
        for (std::size_t i = 0; i < free.size(); ++i) xfull[free[i]] = z[static_cast<Eigen::Index>(i)];
    };

    int outer = 0;
    for (outer = 0; outer < s.max_outer; ++outer) {
        // Inner BFGS on the free variables, tolerance tightening with ||c||.
        const double inner_tol = std::max(s.gradient_tol, 1e-2 * inner_tol_seed);
        MatrixXd H = MatrixXd::Identity(nfree, nfree);
        VectorXd z(nfree);
        for (std::size_t i = 0; i < free.size(); ++i) z[static_cast<Eigen::Index>(i)] = x[free[i]];
        bool first_update = true;
        if (s.trace) s.trace(outer, 0, e.merit);

        for (int inner = 0; inner < s.max_inner; ++inner) {
            if (e.merit_grad.size() == 0 ||
                e.merit_grad.lpNorm<Eigen::Infinity>() <= inner_tol) {
                break;
            }
            VectorXd d = -(H * e.merit_grad);
            double slope = d.dot(e.merit_grad);
            if (!finite(d) || slope >= 0.0) {
                H = MatrixXd::Identity(nfree, nfree);
                d = -e.merit_grad;
                slope = -e.merit_grad.squaredNorm();
                first_update = true;
            }

            double step = 1.0;
            bool accepted = false;
            Evaluation trial;
            VectorXd ztrial;
            // The cushion lets steps through once the requested decrease falls
            // below the resolution of the merit value itself, so the gradient
            // can still be polished on a numerically flat plateau.
            const double cushion = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(e.merit);
            for (int bt = 0; bt < kMaxBacktracks; ++bt) {
                ztrial = z + step * d;
                VectorXd xtrial = x;
                apply_free(xtrial, ztrial);
                trial = merit.evaluate(xtrial);
                if (finite(trial.merit) &&
                    trial.merit <= e.merit + kArmijoSlope * step * slope + cushion) {
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) break; // descent exhausted at this penalty level

            const VectorXd sstep = ztrial - z;
            const VectorXd y = trial.merit_grad - e.merit_grad;
            const double sy = sstep.dot(y);
            z = ztrial;
            apply_free(x, z);
            e = trial;
            ++total_inner;
            if (s.trace) s.trace(outer, total_inner, e.merit);

            if (sy > 1e-12 * sstep.norm() * y.norm()) {
                if (first_update) {
                    H *= sy / y.squaredNorm();
                    first_update = false;
                }
                const double rho = 1.0 / sy;
                const VectorXd Hy = H * y;
                const double yHy = y.dot(Hy);
                H.noalias() -= rho * (sstep * Hy.transpose() + Hy * sstep.transpose());
                H.noalias() += (rho * rho * yHy + rho) * (sstep * sstep.transpose());
            } else {
                H = MatrixXd::Identity(nfree, nfree);
                first_update = true;
            }
        }

        // First-order multiplier update and convergence test.
        const double cnorm = (p.constraint_count > 0) ? e.c.norm() : 0.0;
        VectorXd lambda_next = lambda;
        VectorXd kkt_grad = e.grad;
        if (p.constraint_count > 0) {
            lambda_next = lambda + mu * e.c;
            kkt_grad.noalias() += e.jac.transpose() * lambda_next;
        }
        double kkt = 0.0;
        for (int idx : free) kkt = std::max(kkt, std::abs(kkt_grad[idx]));

        if (!finite(e.f) || !finite(e.grad)) {
            throw NonFiniteEvaluation("objective became non-finite at an accepted iterate");
        }

        if (cnorm <= s.constraint_tol && kkt <= s.gradient_tol) {
            lambda = lambda_next;
            out.report.status = SolveStatus::converged;
            ++outer;
            break;
        }

        // First-order multiplier update every pass; the penalty tightens only
        // while the constraint is meaningfully unmet and failed to shrink 4x
        // since the previous pass. Escalating on residuals already at the
        // tolerance floor would only inject multiplier noise of size
        // mu * ||c||.
        lambda = lambda_next;
        if (cnorm > s.constraint_tol && cnorm > kRequiredShrink * cnorm_prev) {
            mu = std::min(mu * kPenaltyGrowth, kPenaltyCap);
        }
        merit.set_multipliers(lambda, mu);
        cnorm_prev = cnorm;
        inner_tol_seed = std::min(inner_tol_seed, cnorm);
        e = merit.evaluate(x); // refresh merit pieces under the new (lambda, mu)
    }

    out.x = x;
    out.multipliers = lambda;
    out.report.energy = e.f;
    out.report.constraint_residual = (p.constraint_count > 0) ? e.c.norm() : 0.0;
    out.report.iterations = total_inner;
    out.report.outer_iterations = outer;
    out.report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

} // namespace elastica
