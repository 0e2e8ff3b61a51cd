#pragma once

#include <array>
#include <span>
#include <vector>

namespace elastica {

// C^2 heading profile theta : [t.front(), t.back()] -> R stored as a natural
// cubic spline. Outside the knot range the boundary interval's cubic is
// extended, so evaluation never throws.
struct HeadingProfile {
    std::vector<double> t;                    // knots, strictly ascending
    std::vector<double> theta;                // values at the knots
    std::vector<std::array<double, 4>> coef;  // per interval, powers of (t - t_j)

    double t_begin() const { return t.front(); }
    double t_end() const { return t.back(); }

    // order 0 -> theta, 1 -> theta' (curvature of the implied curve),
    // 2 -> theta''.
    double eval(double at, int order = 0) const;

    // Same profile with a constant added (a rotated frame's lifting).
    HeadingProfile shifted(double delta) const;
};

// Unique natural cubic interpolant (second derivative zero at both ends).
// Thomas solve of the tridiagonal moment system; needs >= 3 knots.
// Throws TooFewKnots / NonAscendingKnots.
HeadingProfile natural_cubic_fit(std::span<const double> t, std::span<const double> y);

} // namespace elastica
