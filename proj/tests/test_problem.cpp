#include <doctest.h>

#include <cmath>
#include <random>

#include "elastica/errors.hpp"
#include "elastica/problem.hpp"
#include "support/oracles.hpp"

using namespace elastica;

TEST_CASE("validate_problem accepts the reference boundary data") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 10;
    p.xa = {0, 0};
    p.xb = {3.75605, 2.35942};
    p.va = {1, 0};
    p.vb = {0.911711, -0.410832};
    const BoundaryProblem v = validate_problem(p);
    CHECK(v.chord() == doctest::Approx(4.4356).epsilon(1e-3));
    CHECK(v.va.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(v.vb.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("validate_problem rejects bad data") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 4;
    p.xb = {5, 0};
    CHECK_THROWS_AS(validate_problem(p), InfeasibleChord);

    p.xb = {2, 0};
    p.b = 0;
    CHECK_THROWS_AS(validate_problem(p), DegenerateInterval);

    p.b = 4;
    p.va = {1.1, 0};
    CHECK_THROWS_AS(validate_problem(p), NonUnitTangent);

    // nearly-unit tangents are renormalized, not rejected
    p.va = {1 + 5e-10, 0};
    CHECK(validate_problem(p).va.x() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("straight-line boundary data is feasible under rounding") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 1;
    p.xb = {1, 0};
    CHECK_NOTHROW(validate_problem(p));
}

TEST_CASE("canonical_pose normalizes and round-trips") {
    BoundaryProblem p;
    p.a = 0;
    p.b = 4;
    p.xa = {1, 1};
    p.xb = {1, 3};
    p.va = {0, 1};
    p.vb = {0, 1};
    const auto [c, iso] = canonical_pose(p);
    CHECK(c.xa.norm() == 0.0);
    CHECK(c.va.x() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(c.va.y()) < 1e-14);

    // the isometry maps canonical data back to the original
    CHECK((iso.apply(c.xb) - p.xb).norm() < 1e-12);
    CHECK((iso.rotate(c.vb) - p.vb).norm() < 1e-12);

    // already canonical -> identity
    BoundaryProblem q;
    q.b = 2.0;
    q.xb = {1.5, 0.5};
    const auto [c2, iso2] = canonical_pose(q);
    CHECK(iso2.rotation == 0.0);
    CHECK(iso2.translation.norm() == 0.0);
    CHECK((c2.xb - q.xb).norm() == 0.0);
}

TEST_CASE("canonical_pose preserves feasibility") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        BoundaryProblem p;
        p.a = -1;
        p.b = 2;
        p.xa = {U(rng), U(rng)};
        p.xb = p.xa + Vec2{U(rng), U(rng)};
        const double a0 = U(rng) * M_PI, a1 = U(rng) * M_PI;
        p.va = {std::cos(a0), std::sin(a0)};
        p.vb = {std::cos(a1), std::sin(a1)};
        const auto [c, iso] = canonical_pose(p);
        CHECK(c.chord() == doctest::Approx(p.chord()).epsilon(1e-12));
        CHECK(c.length() == doctest::Approx(p.length()).epsilon(1e-15));
    }
}

TEST_CASE("isometry composition with inverse is the identity") {
    PlanarIsometry iso{.rotation = 0.83, .translation = {3.0, -2.0}};
    const PlanarIsometry id = iso.compose(iso.inverse());
    CHECK(std::abs(id.rotation) < 1e-14);
    CHECK(id.translation.norm() < 1e-14);
    const Vec2 x{0.3, 0.7};
    CHECK((iso.inverse().apply(iso.apply(x)) - x).norm() < 1e-14);
}

TEST_CASE("apply_isometry shifts headings and keeps curvature") {
    CurveSamples c;
    for (int j = 0; j <= 10; ++j) {
        const double t = 0.1 * j;
        c.t.push_back(t);
        c.position.push_back({std::cos(t), std::sin(t)});
        c.heading.push_back(t + M_PI / 2);
        c.curvature.push_back(1.0);
    }
    SUBCASE("identity") {
        const CurveSamples out = apply_isometry(c, {});
        CHECK(out.heading == c.heading);
        CHECK(out.curvature == c.curvature);
        for (std::size_t j = 0; j < c.size(); ++j) {
            CHECK((out.position[j] - c.position[j]).norm() == 0.0);
        }
    }
    SUBCASE("rotation by pi") {
        const CurveSamples out = apply_isometry(c, {.rotation = M_PI});
        for (std::size_t j = 0; j < c.size(); ++j) {
            CHECK(out.heading[j] == doctest::Approx(c.heading[j] + M_PI));
            CHECK(out.curvature[j] == c.curvature[j]); // bit-identical
        }
    }
    SUBCASE("pure translation") {
        const CurveSamples out = apply_isometry(c, {.translation = {5.0, -3.0}});
        CHECK(out.heading == c.heading);
        CHECK(out.curvature == c.curvature);
        CHECK((out.position[3] - c.position[3] - Vec2{5.0, -3.0}).norm() < 1e-15);
    }
}

TEST_CASE("CurveSamples validation catches lifting jumps") {
    CurveSamples c;
    c.t = {0, 1};
    c.position = {{0, 0}, {1, 0}};
    c.heading = {0, 4.0}; // > pi jump
    c.curvature = {0, 0};
    CHECK_THROWS_AS(c.validate(), InvalidSamples);
    c.heading = {0, 0.5};
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("discrete bending energy: closed forms") {
    const std::vector<double> constant(8, 1.3);
    CHECK(discrete_bending_energy(constant, 0.5) == 0.0);

    // phi_j = j c over n steps -> n c^2 / (2h)
    std::vector<double> ramp;
    const double c = 0.37, h = 0.25;
    const int n = 11;
    for (int j = 0; j <= n; ++j) ramp.push_back(j * c);
    CHECK(discrete_bending_energy(ramp, h) == doctest::Approx(n * c * c / (2 * h)).epsilon(1e-14));
}

TEST_CASE("discrete energy properties: shift invariance and reversal") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> phi(16), shifted(16), reversed(16);
        for (auto& v : phi) v = U(rng);
        const double shift = U(rng);
        for (std::size_t j = 0; j < phi.size(); ++j) {
            shifted[j] = phi[j] + shift;
            reversed[j] = phi[phi.size() - 1 - j];
        }
        const double e = discrete_bending_energy(phi, 0.3);
        CHECK(discrete_bending_energy(shifted, 0.3) == doctest::Approx(e).epsilon(1e-13));
        CHECK(discrete_bending_energy(reversed, 0.3) == doctest::Approx(e).epsilon(1e-13));
    }
}
