#include "elastica/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

constexpr int kMaxAgmIterations = 32;
constexpr double kAgmTol = 1e-15; // relative agreement of the two means

void require_valid_parameter(double m) {
    if (!(m >= 0.0)) {
        std::ostringstream os;
        os << "elliptic parameter m must be >= 0, got " << m;
        throw DomainError(os.str());
    }
}

// Carlson symmetric integral R_F(x, y, z), x,y,z >= 0 with at most one zero.
// Standard duplication iteration followed by the degree-5 series.
double carlson_rf(double x, double y, double z) {
    constexpr double kErrTol = 2.5e-13;
    double xt = x, yt = y, zt = z;
    double mu = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
    for (int it = 0; it < 100; ++it) {
        mu = (xt + yt + zt) / 3.0;
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kErrTol) break;
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
    }
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

// F on the principal branch |phi| <= pi/2, 0 <= m < 1.
double incomplete_f_principal(double phi, double m) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return s * carlson_rf(c * c, 1.0 - m * s * s, 1.0);
}

// am(u, m) for 0 < m < 1 and |u| <= K(m), via the AGM descent.
double am_principal(double u, double m) {
    std::array<double, kMaxAgmIterations + 1> a{}, c{};
    a[0] = 1.0;
    double b = std::sqrt(1.0 - m);
    c[0] = std::sqrt(m);
    int n = 0;
    while (n < kMaxAgmIterations) {
        if (std::abs(c[n]) <= kAgmTol * a[n]) break;
        const double an = 0.5 * (a[n] + b);
        const double bn = std::sqrt(a[n] * b);
        c[n + 1] = 0.5 * (a[n] - b);
        a[n + 1] = an;
        b = bn;
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i > 0; --i) {
        const double t = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(t));
    }
    return phi;
}

} // namespace

double complete_elliptic_k(double m) {
    require_valid_parameter(m);
    if (!(m < 1.0)) {
        std::ostringstream os;
        os << "K(m) requires m < 1, got " << m;
        throw DomainError(os.str());
    }
    double a = 1.0, b = std::sqrt(1.0 - m);
    for (int i = 0; i < kMaxAgmIterations && std::abs(a - b) > kAgmTol * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

double incomplete_elliptic_f(double phi, double m) {
    require_valid_parameter(m);
    if (m == 0.0) return phi;
    if (phi == 0.0) return 0.0;
    if (m > 1.0) {
        // F(phi, m) = F(asin(sqrt(m) sin phi), 1/m) / sqrt(m); real only while
        // sqrt(m) |sin phi| <= 1.
        const double rm = std::sqrt(m);
        const double s = rm * std::sin(phi);
        if (std::abs(s) > 1.0 + 1e-12) {
            std::ostringstream os;
            os << "F(phi, m): integrand not real for m=" << m << ", phi=" << phi;
            throw DomainError(os.str());
        }
        return incomplete_elliptic_f(std::asin(std::clamp(s, -1.0, 1.0)), 1.0 / m) / rm;
    }
    if (m == 1.0) {
        const double s = std::sin(phi);
        if (std::abs(s) >= 1.0) {
            throw DomainError("F(phi, 1) diverges at |sin phi| = 1");
        }
        return std::atanh(s);
    }
    // 0 < m < 1: shift phi into [-pi/2, pi/2], using F(phi + k pi) = F(phi) + 2kK.
    const double k = std::round(phi / M_PI);
    const double r = phi - k * M_PI;
    double f = incomplete_f_principal(r, m);
    if (k != 0.0) f += 2.0 * k * complete_elliptic_k(m);
    return f;
}

double jacobi_am(double u, double m) {
    require_valid_parameter(m);
    if (m == 0.0) return u;
    if (m == 1.0) return std::asin(std::tanh(u)); // gudermannian
    if (m > 1.0) {
        const double rm = std::sqrt(m);
        const JacobiTriple std_triple = jacobi_sn_cn_dn(rm * u, 1.0 / m);
        return std::asin(std::clamp(std_triple.sn / rm, -1.0, 1.0));
    }
    // Quadrant tracking: am(u + 2K) = am(u) + pi; reduce u to |r| <= K so the
    // AGM descent stays on the principal branch.
    const double K = complete_elliptic_k(m);
    const double q = std::round(u / (2.0 * K));
    const double r = u - 2.0 * K * q;
    return am_principal(r, m) + q * M_PI;
}

JacobiTriple jacobi_sn_cn_dn(double u, double m) {
    require_valid_parameter(m);
    if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
    if (m == 1.0) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }
    if (m > 1.0) {
        const double rm = std::sqrt(m);
        const JacobiTriple t = jacobi_sn_cn_dn(rm * u, 1.0 / m);
        return {t.sn / rm, t.dn, t.cn};
    }
    const double K = complete_elliptic_k(m);
    const double q = std::round(u / (2.0 * K));
    const double r = u - 2.0 * K * q;
    const double phi = am_principal(r, m);
    // sn and cn flip sign every half period 2K; dn has period 2K.
    const double sign = (std::fmod(q, 2.0) == 0.0) ? 1.0 : -1.0;
    const double sn = std::sin(phi);
    return {sign * sn, sign * std::cos(phi), std::sqrt(1.0 - m * sn * sn)};
}

} // namespace elastica
