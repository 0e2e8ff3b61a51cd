#pragma once

#include <functional>
#include <span>
#include <vector>

#include "elastica/geometry.hpp"
#include "elastica/problem.hpp"
#include "elastica/spline.hpp"

namespace elastica {

// Composite Simpson weights q = h(1,4,2,4,...,2,4,1)/3 over n subintervals.
struct QuadratureWeights {
    std::vector<double> q; // length n+1
    double h = 0.0;

    double sum() const;
};

// n must be even and >= 2; OddSubdivision tells the caller to round n up.
QuadratureWeights simpson_weights(int n, double h);

// S(phi) = sum q_j (cos phi_j, sin phi_j), the quadrature approximation of
// the integral of the unit tangent; equals xb - xa on a closed solution.
Vec2 tangent_closure(std::span<const double> phi, const QuadratureWeights& w);

// Integrates x' = (cos theta, sin theta) from x(a) = xa and returns the
// positions at the n_out+1 uniform output nodes. Each output step is
// internally subdivided into 8 Simpson panels, which keeps the quadrature
// error far below the solver tolerances without adaptive machinery.
std::vector<Vec2> integrate_unit_tangent(const std::function<double(double)>& theta,
                                         double a, double b, const Vec2& xa, int n_out);

// Reconstruction of a full curve from a heading profile: positions by the
// refined Simpson rule above, headings by spline evaluation and curvature by
// the spline's analytic derivative.
CurveSamples integrate_heading(const HeadingProfile& theta, const Vec2& xa, int n_out);

} // namespace elastica
