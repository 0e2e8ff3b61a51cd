#include "elastica/closed_form.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"
#include "elastica/quadrature.hpp"

namespace elastica {

namespace {

constexpr double kHeadingQuadTol = 1e-10;

// Recursive adaptive Simpson with Richardson acceptance.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double flo, double fmid, double fhi, double whole, double tol,
                        int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double split = left + right;
    if (depth <= 0 || std::abs(split - whole) <= 15.0 * tol) {
        return split + (split - whole) / 15.0;
    }
    return adaptive_simpson(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
    if (lo == hi) return 0.0;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return adaptive_simpson(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

// Cumulative heading evaluation for the families without an amplitude closed
// form. Integrated stretches are cached as (t -> theta) anchors so that
// sweeps over many nearby times (reconstruction, sampling) cost one short
// panel each instead of restarting from a.
class HeadingAccumulator {
public:
    HeadingAccumulator(const ClosedFormParams& cp, double a) : cp_(cp) {
        anchors_[a] = 0.0;
    }

    double operator()(double t) {
        auto it = anchors_.lower_bound(t);
        if (it != anchors_.end() && it->first == t) return it->second;
        // nearest anchor, either side
        double t0, th0;
        if (it == anchors_.begin()) {
            t0 = it->first;
            th0 = it->second;
        } else if (it == anchors_.end()) {
            t0 = std::prev(it)->first;
            th0 = std::prev(it)->second;
        } else {
            const auto lo = std::prev(it);
            if (t - lo->first <= it->first - t) {
                t0 = lo->first;
                th0 = lo->second;
            } else {
                t0 = it->first;
                th0 = it->second;
            }
        }
        const double th = th0 + integrate_adaptive(
                                    [this](double s) { return curvature_at(cp_, s); },
                                    t0, t, kHeadingQuadTol);
        anchors_[t] = th;
        return th;
    }

private:
    ClosedFormParams cp_;
    std::map<double, double> anchors_;
};

} // namespace

std::string_view to_string(ElasticaFamily f) {
    switch (f) {
        case ElasticaFamily::wavelike: return "wavelike";
        case ElasticaFamily::orbitlike: return "orbitlike";
        case ElasticaFamily::borderline: return "borderline";
    }
    return "unknown";
}

double ClosedFormParams::argument_scale() const {
    switch (family) {
        case ElasticaFamily::wavelike: return kappa0 / (2.0 * std::sqrt(p));
        case ElasticaFamily::orbitlike: return kappa0 / 2.0;
        case ElasticaFamily::borderline: return kappa0 / 2.0;
    }
    return 0.0;
}

double ClosedFormParams::ode_constant() const {
    switch (family) {
        case ElasticaFamily::wavelike: return kappa0 * kappa0 * (2.0 * p - 1.0) / (2.0 * p);
        case ElasticaFamily::orbitlike: return kappa0 * kappa0 * (2.0 - p) / 2.0;
        case ElasticaFamily::borderline: return kappa0 * kappa0 / 2.0;
    }
    return 0.0;
}

ClosedFormParams validate_params(const ClosedFormParams& cp) {
    if (!(cp.kappa0 > 0.0)) {
        std::ostringstream os;
        os << "kappa0 must be positive, got " << cp.kappa0;
        throw DomainError(os.str());
    }
    ClosedFormParams out = cp;
    switch (cp.family) {
        case ElasticaFamily::wavelike:
            if (!(cp.p > 0.0)) throw DomainError("wavelike requires p > 0");
            break;
        case ElasticaFamily::orbitlike:
            if (!(cp.p >= 0.0)) throw DomainError("orbitlike requires p >= 0");
            break;
        case ElasticaFamily::borderline:
            out.p = 1.0;
            break;
    }
    return out;
}

double curvature_at(const ClosedFormParams& cp, double t) {
    const double u = cp.argument_scale() * (t - cp.t0);
    switch (cp.family) {
        case ElasticaFamily::wavelike: return cp.kappa0 * jacobi_sn_cn_dn(u, cp.p).cn;
        case ElasticaFamily::orbitlike: return cp.kappa0 * jacobi_sn_cn_dn(u, cp.p).dn;
        case ElasticaFamily::borderline: return cp.kappa0 / std::cosh(u);
    }
    return 0.0;
}

double heading_at(const ClosedFormParams& cp, double t, double a) {
    if (cp.family == ElasticaFamily::orbitlike) {
        const double s = cp.argument_scale();
        return 2.0 * (jacobi_am(s * (t - cp.t0), cp.p) - jacobi_am(s * (a - cp.t0), cp.p));
    }
    HeadingAccumulator acc(cp, a);
    return acc(t);
}

CurveSamples sample_reference(const ClosedFormParams& cp, double a, double b, int n,
                              const Vec2& xa) {
    const ClosedFormParams vp = validate_params(cp);
    if (!(b > a) || n < 2) {
        throw DomainError("sample_reference needs b > a and n >= 2");
    }
    std::function<double(double)> theta;
    HeadingAccumulator acc(vp, a);
    if (vp.family == ElasticaFamily::orbitlike) {
        const double s = vp.argument_scale();
        const double base = jacobi_am(s * (a - vp.t0), vp.p);
        theta = [vp, s, base](double t) {
            return 2.0 * (jacobi_am(s * (t - vp.t0), vp.p) - base);
        };
    } else {
        theta = [&acc](double t) { return acc(t); };
    }

    CurveSamples out;
    out.position = integrate_unit_tangent(theta, a, b, xa, n);
    const double dt = (b - a) / n;
    for (int j = 0; j <= n; ++j) {
        const double t = (j == n) ? b : a + j * dt;
        out.t.push_back(t);
        out.heading.push_back(theta(t));
        out.curvature.push_back(curvature_at(vp, t));
    }
    return out;
}

double elastica_ode_residual(const ClosedFormParams& cp, double t) {
    constexpr double eps = 1e-4;
    const double km2 = curvature_at(cp, t - 2.0 * eps);
    const double km1 = curvature_at(cp, t - eps);
    const double k0 = curvature_at(cp, t);
    const double kp1 = curvature_at(cp, t + eps);
    const double kp2 = curvature_at(cp, t + 2.0 * eps);
    const double kdd = (-km2 + 16.0 * km1 - 30.0 * k0 + 16.0 * kp1 - kp2) / (12.0 * eps * eps);
    return 2.0 * kdd - cp.ode_constant() * k0 + k0 * k0 * k0;
}

} // namespace elastica
