#include "elastica/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

constexpr int kReconstructionPanels = 8; // Simpson panels per output step

// Basic composite Simpson of f over [lo, hi] with `panels` parabolic panels.
Vec2 simpson_tangent_increment(const std::function<double(double)>& theta,
                               double lo, double hi, int panels) {
    const int steps = 2 * panels;
    const double dh = (hi - lo) / steps;
    double sx = 0.0, sy = 0.0;
    for (int j = 0; j <= steps; ++j) {
        const double w = (j == 0 || j == steps) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        const double th = theta(lo + j * dh);
        sx += w * std::cos(th);
        sy += w * std::sin(th);
    }
    return Vec2(sx, sy) * (dh / 3.0);
}

} // namespace

double QuadratureWeights::sum() const {
    double s = 0.0;
    for (double v : q) s += v;
    return s;
}

QuadratureWeights simpson_weights(int n, double h) {
    if (n < 2 || n % 2 != 0) {
        std::ostringstream os;
        os << "composite Simpson needs an even subdivision count >= 2, got " << n;
        throw OddSubdivision(os.str());
    }
    if (!(h > 0.0)) {
        throw InvalidInput("step h must be positive");
    }
    QuadratureWeights w;
    w.h = h;
    w.q.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double base = (j == 0 || j == n) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        w.q[static_cast<std::size_t>(j)] = base * h / 3.0;
    }
    return w;
}

Vec2 tangent_closure(std::span<const double> phi, const QuadratureWeights& w) {
    if (phi.size() != w.q.size()) {
        std::ostringstream os;
        os << "closure needs " << w.q.size() << " headings, got " << phi.size();
        throw LengthMismatch(os.str());
    }
    double sx = 0.0, sy = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        sx += w.q[j] * std::cos(phi[j]);
        sy += w.q[j] * std::sin(phi[j]);
    }
    return Vec2(sx, sy);
}

std::vector<Vec2> integrate_unit_tangent(const std::function<double(double)>& theta,
                                         double a, double b, const Vec2& xa, int n_out) {
    if (n_out < 2) {
        throw LengthMismatch("integrate_unit_tangent needs n_out >= 2");
    }
    const double dt = (b - a) / n_out;
    std::vector<Vec2> x;
    x.reserve(static_cast<std::size_t>(n_out) + 1);
    x.push_back(xa);
    for (int j = 0; j < n_out; ++j) {
        const double lo = a + j * dt;
        const double hi = (j + 1 == n_out) ? b : a + (j + 1) * dt;
        x.push_back(x.back() + simpson_tangent_increment(theta, lo, hi, kReconstructionPanels));
    }
    return x;
}

CurveSamples integrate_heading(const HeadingProfile& theta, const Vec2& xa, int n_out) {
    const double a = theta.t_begin();
    const double b = theta.t_end();
    CurveSamples out;
    out.position = integrate_unit_tangent([&theta](double t) { return theta.eval(t); },
                                          a, b, xa, n_out);
    const double dt = (b - a) / n_out;
    out.t.reserve(out.position.size());
    out.heading.reserve(out.position.size());
    out.curvature.reserve(out.position.size());
    for (int j = 0; j <= n_out; ++j) {
        const double t = (j == n_out) ? b : a + j * dt;
        out.t.push_back(t);
        out.heading.push_back(theta.eval(t, 0));
        out.curvature.push_back(theta.eval(t, 1));
    }
    return out;
}

} // namespace elastica
