#include "elastica/detail/instances.hpp"

#include <cmath>

#include "elastica/errors.hpp"
#include "elastica/quadrature.hpp"
#include "elastica/seed.hpp"

namespace elastica::detail {

Step2Instance make_step2_instance(const BoundaryProblem& canonical, int n,
                                  const std::vector<double>* initial_phi) {
    Step2Instance inst;
    const double L = canonical.length();
    inst.h = L / n;
    inst.nodes.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) inst.nodes[static_cast<std::size_t>(j)] = canonical.a + j * inst.h;
    inst.nodes.back() = canonical.b;

    std::vector<double> phi0;
    if (initial_phi != nullptr) {
        if (initial_phi->size() != inst.nodes.size()) {
            throw LengthMismatch("initial headings must have n+1 entries");
        }
        phi0 = *initial_phi;
    } else {
        const SeedProfile seed = seed_profile(canonical);
        phi0.resize(inst.nodes.size());
        for (std::size_t j = 0; j < inst.nodes.size(); ++j) {
            phi0[j] = seed.heading.eval(inst.nodes[j]);
        }
    }

    // Pin the boundary headings. phi_n gets the representative of atan2(vb)
    // nearest the initial profile's end value, preserving its winding.
    const double end_raw = std::atan2(canonical.vb.y(), canonical.vb.x());
    phi0.front() = 0.0;
    phi0.back() = end_raw - 2.0 * M_PI * std::round((end_raw - phi0.back()) / (2.0 * M_PI));

    const QuadratureWeights w = simpson_weights(n, inst.h);
    const Vec2 target = canonical.xb - canonical.xa;
    const double h = inst.h;

    inst.problem.dimension = n + 1;
    inst.problem.constraint_count = 2;
    inst.problem.fixed_indices = {0, n};
    inst.problem.objective = [h](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
        grad.setZero();
        double acc = 0.0;
        for (Eigen::Index j = 1; j < x.size(); ++j) {
            const double d = x[j] - x[j - 1];
            acc += d * d;
            grad[j] += d / h;
            grad[j - 1] -= d / h;
        }
        return acc / (2.0 * h);
    };
    inst.problem.constraints = [w, target](const Eigen::VectorXd& x, Eigen::VectorXd& c,
                                           Eigen::MatrixXd& jac) {
        double sx = 0.0, sy = 0.0;
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            const double qj = w.q[static_cast<std::size_t>(j)];
            const double cs = std::cos(x[j]), sn = std::sin(x[j]);
            sx += qj * cs;
            sy += qj * sn;
            jac(0, j) = -qj * sn;
            jac(1, j) = qj * cs;
        }
        c[0] = sx - target.x();
        c[1] = sy - target.y();
    };

    inst.x0.resize(static_cast<Eigen::Index>(phi0.size()));
    for (std::size_t j = 0; j < phi0.size(); ++j) inst.x0[static_cast<Eigen::Index>(j)] = phi0[j];
    return inst;
}

namespace {

Vec2 vertex(const Eigen::VectorXd& x, int j) {
    return Vec2(x[2 * j], x[2 * j + 1]);
}

} // namespace

BaselineInstance make_baseline_instance(const BoundaryProblem& canonical, int n) {
    BaselineInstance inst;
    const double h = canonical.length() / n;
    inst.h = h;

    inst.x0.resize(2 * (n + 1));
    for (int j = 0; j <= n; ++j) {
        const Vec2 pt =
            canonical.xa + (static_cast<double>(j) / n) * (canonical.xb - canonical.xa);
        inst.x0[2 * j] = pt.x();
        inst.x0[2 * j + 1] = pt.y();
    }
    const Vec2 p1 = canonical.xa + h * canonical.va;
    const Vec2 pn1 = canonical.xb - h * canonical.vb;
    inst.x0[2] = p1.x();
    inst.x0[3] = p1.y();
    inst.x0[2 * (n - 1)] = pn1.x();
    inst.x0[2 * (n - 1) + 1] = pn1.y();

    inst.problem.dimension = 2 * (n + 1);
    inst.problem.fixed_indices = {0, 1, 2, 3, 2 * (n - 1), 2 * (n - 1) + 1, 2 * n, 2 * n + 1};
    inst.problem.constraint_count = n - 2; // segments 0 and n-1 are fixed by the pins

    inst.problem.objective = [n, h](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
        grad.setZero();
        double acc = 0.0;
        // alpha_j = exterior angle at vertex j; d beta / d u = i u / |u|^2.
        for (int j = 1; j < n; ++j) {
            const Vec2 u0 = vertex(x, j) - vertex(x, j - 1);
            const Vec2 u1 = vertex(x, j + 1) - vertex(x, j);
            const double cross = u0.x() * u1.y() - u0.y() * u1.x();
            const double dot = u0.dot(u1);
            const double alpha = std::atan2(cross, dot);
            acc += alpha * alpha;
            const double w = alpha / h;
            const Vec2 g0 = Vec2(-u0.y(), u0.x()) / u0.squaredNorm();
            const Vec2 g1 = Vec2(-u1.y(), u1.x()) / u1.squaredNorm();
            grad[2 * (j + 1)] += w * g1.x();
            grad[2 * (j + 1) + 1] += w * g1.y();
            grad[2 * j] += w * (-g1.x() - g0.x());
            grad[2 * j + 1] += w * (-g1.y() - g0.y());
            grad[2 * (j - 1)] += w * g0.x();
            grad[2 * (j - 1) + 1] += w * g0.y();
        }
        return acc / (2.0 * h);
    };

    inst.problem.constraints = [n, h](const Eigen::VectorXd& x, Eigen::VectorXd& c,
                                      Eigen::MatrixXd& jac) {
        jac.setZero();
        for (int j = 1; j <= n - 2; ++j) {
            const Vec2 u = vertex(x, j + 1) - vertex(x, j);
            c[j - 1] = u.squaredNorm() - h * h;
            jac(j - 1, 2 * (j + 1)) = 2.0 * u.x();
            jac(j - 1, 2 * (j + 1) + 1) = 2.0 * u.y();
            jac(j - 1, 2 * j) = -2.0 * u.x();
            jac(j - 1, 2 * j + 1) = -2.0 * u.y();
        }
    };
    return inst;
}

} // namespace elastica::detail
