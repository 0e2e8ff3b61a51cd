#include "elastica/baseline.hpp"

#include <chrono>
#include <cmath>

#include "elastica/detail/instances.hpp"
#include "elastica/errors.hpp"
#include "elastica/spline.hpp"

namespace elastica {

namespace {

Vec2 vertex(const Eigen::VectorXd& x, int j) {
    return Vec2(x[2 * j], x[2 * j + 1]);
}

} // namespace

Solution standard_discretisation(const BoundaryProblem& p, int n, const OptimizerSettings& s) {
    const auto t_start = std::chrono::steady_clock::now();
    if (n < 4) {
        throw InvalidInput("standard discretisation needs n >= 4 segments");
    }
    auto [canon, pose] = canonical_pose(p);
    const detail::BaselineInstance inst = detail::make_baseline_instance(canon, n);
    const double h = inst.h;

    OptimizeResult res = minimize_equality_constrained(inst.problem, inst.x0, s);

    // Convert the polyline to the shared sample format: headings from
    // segment directions (unwrapped, last one duplicated so the array length
    // matches the vertices), curvature from the angle increments.
    std::vector<double> seg_heading(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Vec2 u = vertex(res.x, j + 1) - vertex(res.x, j);
        const double raw = std::atan2(u.y(), u.x());
        if (j == 0) {
            seg_heading[0] = raw;
        } else {
            const double prev = seg_heading[static_cast<std::size_t>(j) - 1];
            double th = raw - 2.0 * M_PI * std::round((raw - prev) / (2.0 * M_PI));
            if (th - prev <= -M_PI) th += 2.0 * M_PI;
            seg_heading[static_cast<std::size_t>(j)] = th;
        }
    }

    CurveSamples curve;
    for (int j = 0; j <= n; ++j) {
        curve.t.push_back(canon.a + j * h);
        // back to the original frame by hand: a failed iterate may fold back
        // on itself, which apply_isometry's lifting check would reject
        curve.position.push_back(pose.apply(vertex(res.x, j)));
        const double th = (j < n) ? seg_heading[static_cast<std::size_t>(j)] : seg_heading.back();
        curve.heading.push_back(th + pose.rotation);
    }
    curve.curvature.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int j = 1; j < n; ++j) {
        curve.curvature[static_cast<std::size_t>(j)] =
            (seg_heading[static_cast<std::size_t>(j)] - seg_heading[static_cast<std::size_t>(j) - 1]) / h;
    }

    Solution sol;
    sol.problem = validate_problem(p);
    sol.n = n;
    sol.curve = std::move(curve);
    sol.report = res.report;
    sol.report.energy = discrete_bending_energy(sol.curve.heading, h) /* == objective */;
    if (res.report.status != SolveStatus::converged) {
        sol.report.status = SolveStatus::failed;
    }
    sol.report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

    // A C^2 heading for diagnostics, fitted through the segment midpoints.
    std::vector<double> mid_t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) mid_t[static_cast<std::size_t>(j)] = canon.a + (j + 0.5) * h;
    sol.heading = natural_cubic_fit(mid_t, seg_heading).shifted(pose.rotation);
    sol.stage_reports = {sol.report};
    return sol;
}

} // namespace elastica
