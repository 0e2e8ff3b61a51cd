#include "elastica/problem.hpp"

#include <cmath>
#include <sstream>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

// Published boundary data is rounded to six significant digits, which puts
// tangent norms ~1e-7 off unit; the renormalization window must admit that.
constexpr double kUnitTangentTol = 1e-6;   // inputs renormalized below this
constexpr double kFeasibilitySlack = 1e-12; // relative slack on the chord test

Vec2 renormalized_tangent(const Vec2& v, const char* name) {
    const double n = v.norm();
    if (std::abs(n - 1.0) > kUnitTangentTol) {
        std::ostringstream os;
        os << name << " has norm " << n << ", more than 1e-6 away from 1";
        throw NonUnitTangent(os.str());
    }
    return v / n;
}

} // namespace

BoundaryProblem validate_problem(const BoundaryProblem& p) {
    if (!(p.b > p.a)) {
        std::ostringstream os;
        os << "need b > a, got a=" << p.a << ", b=" << p.b;
        throw DegenerateInterval(os.str());
    }
    BoundaryProblem out = p;
    out.va = renormalized_tangent(p.va, "va");
    out.vb = renormalized_tangent(p.vb, "vb");
    const double L = out.length();
    if (out.chord() > L * (1.0 + kFeasibilitySlack)) {
        std::ostringstream os;
        os << "chord " << out.chord() << " exceeds arc length " << L;
        throw InfeasibleChord(os.str());
    }
    return out;
}

std::pair<BoundaryProblem, PlanarIsometry> canonical_pose(const BoundaryProblem& p) {
    const BoundaryProblem v = validate_problem(p);
    PlanarIsometry iso;
    iso.rotation = std::atan2(v.va.y(), v.va.x());
    iso.translation = v.xa;
    const PlanarIsometry inv = iso.inverse();

    BoundaryProblem c = v;
    c.xa = Vec2::Zero();
    c.va = Vec2::UnitX();
    c.xb = inv.apply(v.xb);
    c.vb = inv.rotate(v.vb);
    return {c, iso};
}

void CurveSamples::validate() const {
    const std::size_t n = t.size();
    if (n < 2 || position.size() != n || heading.size() != n || curvature.size() != n) {
        throw InvalidSamples("sample arrays must share one length >= 2");
    }
    for (std::size_t j = 1; j < n; ++j) {
        if (!(t[j] > t[j - 1])) {
            throw InvalidSamples("sample times must be strictly increasing");
        }
        if (!(std::abs(heading[j] - heading[j - 1]) < M_PI)) {
            throw InvalidSamples("heading is not a continuous lifting (jump >= pi)");
        }
    }
}

CurveSamples apply_isometry(const CurveSamples& c, const PlanarIsometry& iso) {
    c.validate();
    CurveSamples out;
    out.t = c.t;
    out.position.reserve(c.size());
    for (const Vec2& x : c.position) out.position.push_back(iso.apply(x));
    out.heading.reserve(c.size());
    for (double th : c.heading) out.heading.push_back(th + iso.rotation);
    out.curvature = c.curvature;
    return out;
}

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::max_iterations: return "max_iterations";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::failed: return "failed";
    }
    return "unknown";
}

double discrete_bending_energy(std::span<const double> phi, double h) {
    double acc = 0.0;
    for (std::size_t j = 1; j < phi.size(); ++j) {
        const double d = phi[j] - phi[j - 1];
        acc += d * d;
    }
    return acc / (2.0 * h);
}

} // namespace elastica
