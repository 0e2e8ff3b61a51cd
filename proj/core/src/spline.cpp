#include "elastica/spline.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "elastica/errors.hpp"

namespace elastica {

double HeadingProfile::eval(double at, int order) const {
    // Locate the interval; outside the range the boundary cubic extends.
    std::size_t i;
    if (at <= t.front()) {
        i = 0;
    } else if (at >= t.back()) {
        i = coef.size() - 1;
    } else {
        i = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), at) - t.begin()) - 1;
        i = std::min(i, coef.size() - 1);
    }
    const double s = at - t[i];
    const auto& c = coef[i];
    switch (order) {
        case 0: return c[0] + s * (c[1] + s * (c[2] + s * c[3]));
        case 1: return c[1] + s * (2.0 * c[2] + s * 3.0 * c[3]);
        case 2: return 2.0 * c[2] + 6.0 * s * c[3];
        default: return 0.0;
    }
}

HeadingProfile HeadingProfile::shifted(double delta) const {
    HeadingProfile out = *this;
    for (double& v : out.theta) v += delta;
    for (auto& c : out.coef) c[0] += delta;
    return out;
}

HeadingProfile natural_cubic_fit(std::span<const double> t, std::span<const double> y) {
    const std::size_t n = t.size();
    if (n < 3 || y.size() != n) {
        throw TooFewKnots("natural cubic fit needs at least 3 knots");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(t[i] > t[i - 1])) {
            std::ostringstream os;
            os << "knots must be strictly ascending (violation at index " << i << ")";
            throw NonAscendingKnots(os.str());
        }
    }

    // Second-derivative (moment) system, natural ends M_0 = M_{n-1} = 0:
    //   h_{i-1} M_{i-1} + 2(h_{i-1}+h_i) M_i + h_i M_{i+1}
    //     = 6 ((y_{i+1}-y_i)/h_i - (y_i-y_{i-1})/h_{i-1}).
    // Diagonally dominant, so the Thomas sweep needs no pivoting.
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = t[i + 1] - t[i];

    std::vector<double> m(n, 0.0);
    if (n > 2) {
        const std::size_t k = n - 2; // interior unknowns
        std::vector<double> diag(k), upper(k), rhs(k);
        for (std::size_t i = 0; i < k; ++i) {
            diag[i] = 2.0 * (h[i] + h[i + 1]);
            upper[i] = h[i + 1];
            rhs[i] = 6.0 * ((y[i + 2] - y[i + 1]) / h[i + 1] - (y[i + 1] - y[i]) / h[i]);
        }
        for (std::size_t i = 1; i < k; ++i) {
            const double w = h[i] / diag[i - 1]; // lower entry is h_i
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        m[k] = rhs[k - 1] / diag[k - 1];
        for (std::size_t i = k - 1; i > 0; --i) {
            m[i] = (rhs[i - 1] - upper[i - 1] * m[i + 1]) / diag[i - 1];
        }
    }

    HeadingProfile out;
    out.t.assign(t.begin(), t.end());
    out.theta.assign(y.begin(), y.end());
    out.coef.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double hi = h[i];
        out.coef[i][0] = y[i];
        out.coef[i][1] = (y[i + 1] - y[i]) / hi - hi * (2.0 * m[i] + m[i + 1]) / 6.0;
        out.coef[i][2] = 0.5 * m[i];
        out.coef[i][3] = (m[i + 1] - m[i]) / (6.0 * hi);
    }
    return out;
}

} // namespace elastica
