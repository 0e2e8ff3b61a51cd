#include <doctest.h>

#include <cmath>

#include "elastica/baseline.hpp"
#include "elastica/errors.hpp"
#include "elastica/solver.hpp"

using namespace elastica;

namespace {

BoundaryProblem example2() {
    BoundaryProblem p;
    p.a = 0;
    p.b = 10;
    p.xb = {3.75605, 2.35942};
    p.vb = {0.911711, -0.410832};
    return p;
}

BoundaryProblem example6() {
    BoundaryProblem p;
    p.a = 0;
    p.b = 20;
    p.xb = {7.583402674112595, 4.887384564444473};
    p.vb = {0.7288910266624665, -0.6846297329585793};
    return p;
}

} // namespace

TEST_CASE("straight-line problem: straight polyline, zero energy, few passes") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 4;
    p.xb = {4, 0};
    const Solution sol = standard_discretisation(p, 8);
    CHECK(sol.report.status == SolveStatus::converged);
    CHECK(sol.report.energy < 1e-18);
    CHECK(sol.report.outer_iterations <= 5);
    for (const Vec2& pt : sol.curve.position) {
        CHECK(std::abs(pt.y()) < 1e-10);
    }
}

TEST_CASE("segment lengths are met on converged runs") {
    const Solution sol = standard_discretisation(example2(), 40);
    if (sol.report.status == SolveStatus::converged) {
        const double h = 10.0 / 40;
        for (std::size_t j = 1; j < sol.curve.position.size(); ++j) {
            const double len = (sol.curve.position[j] - sol.curve.position[j - 1]).norm();
            CHECK(std::abs(len - h) <= 1e-8 * h);
        }
    }
    // end tangents are pinned regardless of convergence
    const Vec2 first = (sol.curve.position[1] - sol.curve.position[0]).normalized();
    CHECK((first - Vec2{1, 0}).norm() < 1e-12);
}

TEST_CASE("Example 2: baseline lands above the solver energy") {
    const Solution base = standard_discretisation(example2(), 100);
    const Solution fine = solve_clamped_elastica(example2(), 40);
    REQUIRE(fine.report.status == SolveStatus::converged);
    CHECK(base.report.energy > fine.report.energy);

    // comparability at matched resolution as well
    const Solution fine100 = solve_clamped_elastica(example2(), 100);
    REQUIRE(fine100.report.status == SolveStatus::converged);
    CHECK(base.report.energy > fine100.report.energy);
}

TEST_CASE("Example 6: baseline fails or is beaten; never crashes") {
    const Solution base = standard_discretisation(example6(), 100);
    const Solution fine = solve_clamped_elastica(example6(), 40);
    REQUIRE(fine.report.status == SolveStatus::converged);
    const bool acceptable =
        base.report.status == SolveStatus::failed || base.report.energy > fine.report.energy;
    CHECK(acceptable);
}

TEST_CASE("n below 4 is rejected") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 4;
    p.xb = {4, 0};
    CHECK_THROWS_AS(standard_discretisation(p, 3), InvalidInput);
}

TEST_CASE("baseline energy equals the shared formula on its heading array") {
    const Solution sol = standard_discretisation(example2(), 60);
    const double recomputed = discrete_bending_energy(sol.curve.heading, 10.0 / 60);
    CHECK(sol.report.energy == doctest::Approx(recomputed).epsilon(1e-14));
}
