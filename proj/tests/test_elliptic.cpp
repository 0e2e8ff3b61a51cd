#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"
#include "support/oracles.hpp"

using namespace elastica;

TEST_CASE("F(phi, 0) is the identity") {
    for (double phi : {-3.0, -0.4, 0.0, 0.7, 2.0, 9.0}) {
        CHECK(incomplete_elliptic_f(phi, 0.0) == doctest::Approx(phi).epsilon(1e-14));
    }
}

TEST_CASE("F(pi/2, 0.5) equals K(0.5)") {
    // 1.8540746773013719 computed independently (AGM and quadrature agree).
    CHECK(incomplete_elliptic_f(M_PI / 2, 0.5) == doctest::Approx(1.8540746773013719).epsilon(1e-13));
    CHECK(complete_elliptic_k(0.5) == doctest::Approx(1.8540746773013719).epsilon(1e-13));
}

TEST_CASE("F matches its defining integral") {
    for (double m : {0.1, 0.5, 0.9, 0.99}) {
        for (double phi : {-1.2, -0.3, 0.2, 0.8, 1.4, 2.5, 4.0}) {
            const double want = oracle::incomplete_f_by_quadrature(phi, m);
            CHECK(incomplete_elliptic_f(phi, m) == doctest::Approx(want).epsilon(1e-10));
        }
    }
    // m > 1, inside the real domain |sin phi| <= 1/sqrt(m)
    for (double phi : {-0.4, 0.1, 0.3, 0.6}) {
        const double want = oracle::incomplete_f_by_quadrature(phi, 2.0);
        CHECK(incomplete_elliptic_f(phi, 2.0) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("F periodicity and oddness for m < 1") {
    const double m = 0.7;
    const double K = complete_elliptic_k(m);
    for (double phi : {0.2, 0.9, 1.5}) {
        CHECK(incomplete_elliptic_f(phi + M_PI, m) ==
              doctest::Approx(incomplete_elliptic_f(phi, m) + 2 * K).epsilon(1e-12));
        CHECK(incomplete_elliptic_f(-phi, m) ==
              doctest::Approx(-incomplete_elliptic_f(phi, m)).epsilon(1e-13));
    }
}

TEST_CASE("F domain error for m > 1") {
    CHECK_THROWS_AS(incomplete_elliptic_f(1.0, 2.0), DomainError);
    CHECK_THROWS_AS(incomplete_elliptic_f(-1.0, 4.0), DomainError);
    CHECK_THROWS_AS(incomplete_elliptic_f(0.5, -0.25), DomainError);
}

TEST_CASE("the Example-1 constant: 2 am(0.25, 2) = 0.489774") {
    CHECK(std::abs(2.0 * jacobi_am(0.25, 2.0) - 0.489774) < 5e-6);
    // and the inverse direction
    CHECK(std::abs(incomplete_elliptic_f(0.244887, 2.0) - 0.25) < 1e-5);
}

TEST_CASE("am(u, 0) = u") {
    for (double u : {-7.0, -0.3, 0.0, 1.1, 12.0}) {
        CHECK(jacobi_am(u, 0.0) == doctest::Approx(u).epsilon(1e-14));
    }
}

TEST_CASE("am inverts F") {
    CHECK(jacobi_am(incomplete_elliptic_f(0.3, 0.7), 0.7) == doctest::Approx(0.3).epsilon(1e-10));
    for (double m : {0.0, 0.3, 0.7, 0.96}) {
        for (double phi : {-1.5, -0.6, 0.0, 0.45, 1.2, 2.8, 6.0}) {
            CHECK(jacobi_am(incomplete_elliptic_f(phi, m), m) ==
                  doctest::Approx(phi).epsilon(1e-9).scale(1.0));
        }
    }
    for (double phi : {-0.45, 0.0, 0.2, 0.44}) {
        CHECK(jacobi_am(incomplete_elliptic_f(phi, 2.0), 2.0) ==
              doctest::Approx(phi).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("Jacobi functions: pinned values") {
    for (double m : {0.0, 0.5, 1.0, 2.0}) {
        const auto t = jacobi_sn_cn_dn(0.0, m);
        CHECK(t.sn == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
        CHECK(t.cn == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(t.dn == doctest::Approx(1.0).epsilon(1e-15));
    }
    const auto t0 = jacobi_sn_cn_dn(0.8, 0.0);
    CHECK(t0.sn == doctest::Approx(std::sin(0.8)).epsilon(1e-14));
    CHECK(t0.cn == doctest::Approx(std::cos(0.8)).epsilon(1e-14));
    CHECK(t0.dn == doctest::Approx(1.0).epsilon(1e-14));

    // m = 2 via the reciprocal identity: dn(0.25, 2) = cn(0.25 sqrt(2), 0.5),
    // cross-checked against sqrt(1 - 2 sin^2(am(0.25, 2))).
    const auto t2 = jacobi_sn_cn_dn(0.25, 2.0);
    const double via_std = jacobi_sn_cn_dn(0.25 * std::sqrt(2.0), 0.5).cn;
    CHECK(t2.dn == doctest::Approx(via_std).epsilon(1e-14));
    const double am = jacobi_am(0.25, 2.0);
    CHECK(t2.dn == doctest::Approx(std::sqrt(1.0 - 2.0 * std::pow(std::sin(am), 2))).epsilon(1e-10));
}

TEST_CASE("identity suite over the parameter grid") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    for (double m : {0.0, 0.3, 0.7, 0.96, 1.0, 2.0, 4.0}) {
        for (int i = 0; i < 60; ++i) {
            const double u = U(rng);
            const auto t = jacobi_sn_cn_dn(u, m);
            CHECK(t.sn * t.sn + t.cn * t.cn == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(t.dn * t.dn + m * t.sn * t.sn == doctest::Approx(1.0).epsilon(1e-12));

            // oddness / evenness
            const auto tm = jacobi_sn_cn_dn(-u, m);
            CHECK(tm.sn == doctest::Approx(-t.sn).epsilon(1e-12).scale(1.0));
            CHECK(tm.cn == doctest::Approx(t.cn).epsilon(1e-12).scale(1.0));
            CHECK(tm.dn == doctest::Approx(t.dn).epsilon(1e-12).scale(1.0));
            CHECK(jacobi_am(-u, m) == doctest::Approx(-jacobi_am(u, m)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("d am / du = dn (central differences)") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> U(-8.0, 8.0);
    for (double m : {0.0, 0.3, 0.7, 1.0, 2.0}) {
        for (int i = 0; i < 25; ++i) {
            const double u = U(rng);
            const double fd = oracle::derivative([m](double x) { return jacobi_am(x, m); }, u, 1e-5);
            CHECK(fd == doctest::Approx(jacobi_sn_cn_dn(u, m).dn).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("am is continuous across period boundaries (m < 1)") {
    const double m = 0.7;
    const double K = complete_elliptic_k(m);
    for (double center : {K, 2 * K, 3 * K, 7 * K, -2 * K}) {
        const double left = jacobi_am(center - 1e-9, m);
        const double right = jacobi_am(center + 1e-9, m);
        CHECK(std::abs(right - left) < 1e-6);
    }
    // one full period advances the amplitude by exactly pi
    CHECK(jacobi_am(1.3 + 2 * K, m) == doctest::Approx(jacobi_am(1.3, m) + M_PI).epsilon(1e-12));
}
