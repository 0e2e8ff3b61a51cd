#include <doctest.h>

#include <cmath>
#include <random>

#include "elastica/detail/instances.hpp"
#include "elastica/problem.hpp"

using namespace elastica;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Central finite differences against the analytic derivatives of the actual
// solver/baseline callbacks, at random points around the start vector.
void check_gradients(const ConstrainedProblem& p, const VectorXd& x0, std::mt19937& rng) {
    std::uniform_real_distribution<double> U(-0.3, 0.3);
    const double step = 1e-6;
    for (int trial = 0; trial < 20; ++trial) {
        VectorXd x = x0;
        for (Eigen::Index i = 0; i < x.size(); ++i) x[i] += U(rng);

        VectorXd g(p.dimension);
        p.objective(x, g);
        VectorXd c0(p.constraint_count), c1(p.constraint_count);
        MatrixXd J(p.constraint_count, p.dimension);
        p.constraints(x, c0, J);

        for (Eigen::Index i = 0; i < x.size(); i += 3) { // probe a spread of coordinates
            VectorXd xp = x, xm = x;
            xp[i] += step;
            xm[i] -= step;
            VectorXd dummy(p.dimension);
            const double fd = (p.objective(xp, dummy) - p.objective(xm, dummy)) / (2 * step);
            CHECK(g[i] == doctest::Approx(fd).epsilon(1e-5).scale(1.0));

            MatrixXd Jd(p.constraint_count, p.dimension);
            p.constraints(xp, c1, Jd);
            VectorXd cm(p.constraint_count);
            p.constraints(xm, cm, Jd);
            for (Eigen::Index k = 0; k < p.constraint_count; ++k) {
                const double fdk = (c1[k] - cm[k]) / (2 * step);
                CHECK(J(k, i) == doctest::Approx(fdk).epsilon(1e-5).scale(1.0));
            }
        }
    }
}

} // namespace

TEST_CASE("step-2 instance: analytic derivatives match finite differences") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 10;
    p.xb = {3.75605, 2.35942};
    p.vb = {0.911711, -0.410832};
    const auto [canon, iso] = canonical_pose(p);
    const auto inst = detail::make_step2_instance(canon, 16);
    std::mt19937 rng(64);
    check_gradients(inst.problem, inst.x0, rng);
}

TEST_CASE("baseline instance: analytic derivatives match finite differences") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 10;
    p.xb = {3.75605, 2.35942};
    p.vb = {0.911711, -0.410832};
    const auto [canon, iso] = canonical_pose(p);
    const auto inst = detail::make_baseline_instance(canon, 12);
    std::mt19937 rng(65);
    check_gradients(inst.problem, inst.x0, rng);
}

TEST_CASE("step-2 instance pins match the boundary data") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 10;
    p.xb = {3.75605, 2.35942};
    p.vb = {0.911711, -0.410832};
    const auto [canon, iso] = canonical_pose(p);
    const auto inst = detail::make_step2_instance(canon, 12);
    CHECK(inst.x0[0] == 0.0);
    const double want = std::atan2(canon.vb.y(), canon.vb.x());
    CHECK(std::abs(std::remainder(inst.x0[12] - want, 2 * M_PI)) < 1e-12);
    CHECK(inst.problem.fixed_indices == std::vector<int>{0, 12});
}
