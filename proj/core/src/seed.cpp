#include "elastica/seed.hpp"

#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

constexpr double kDegenerateNorm = 1e-8;

Vec2 normalized_or_throw(const Vec2& w, const char* name) {
    const double n = w.norm();
    if (n <= kDegenerateNorm) {
        std::ostringstream os;
        os << "near-canceling boundary data: ||" << name << "|| = " << n;
        throw DegenerateSeed(os.str());
    }
    return w / n;
}

} // namespace

SeedEstimates interior_tangent_estimates(const BoundaryProblem& canonical) {
    const BoundaryProblem& p = canonical;
    SeedEstimates e;
    e.h = p.length() / 4.0;

    const Vec2 chord_term = 3.0 / (8.0 * e.h) * (p.xb - p.xa);
    const Vec2 w2 = chord_term - 0.25 * (p.va + p.vb);
    const Vec2 v2 = normalized_or_throw(w2, "w2");
    const Vec2 w13 = chord_term - 0.125 * (p.va + p.vb) - 0.25 * v2;
    const Vec2 w1 = w13 - 0.25 * (p.vb - p.va);
    const Vec2 w3 = w13 + 0.25 * (p.vb - p.va);

    e.w_tilde = {w1, w2, w3};
    e.v_tilde = {normalized_or_throw(w1, "w1"), v2, normalized_or_throw(w3, "w3")};
    return e;
}

std::vector<double> unwrap_headings(std::span<const Vec2> v, double theta0) {
    std::vector<double> theta;
    theta.reserve(v.size());
    theta.push_back(theta0);
    for (std::size_t j = 1; j < v.size(); ++j) {
        const double raw = std::atan2(v[j].y(), v[j].x());
        double th = raw - 2.0 * M_PI * std::round((raw - theta.back()) / (2.0 * M_PI));
        if (th - theta.back() <= -M_PI) th += 2.0 * M_PI; // tie at pi goes counterclockwise
        theta.push_back(th);
    }
    return theta;
}

SeedProfile seed_profile(const BoundaryProblem& p) {
    auto [canonical, pose] = canonical_pose(p);

    SeedProfile out;
    out.pose = pose;
    out.estimates = interior_tangent_estimates(canonical);

    const std::array<Vec2, 5> dirs = {canonical.va, out.estimates.v_tilde[0],
                                      out.estimates.v_tilde[1], out.estimates.v_tilde[2],
                                      canonical.vb};
    const std::vector<double> theta = unwrap_headings(dirs, 0.0);
    for (std::size_t j = 0; j < 5; ++j) out.estimates.theta_tilde[j] = theta[j];

    std::array<double, 5> knots{};
    for (int j = 0; j < 5; ++j) {
        knots[static_cast<std::size_t>(j)] = canonical.a + j * out.estimates.h;
    }
    knots[4] = canonical.b;
    out.heading = natural_cubic_fit(knots, theta);
    return out;
}

} // namespace elastica
