#pragma once

#include <string>
#include <vector>

#include "elastica/closed_form.hpp"
#include "elastica/geometry.hpp"
#include "elastica/problem.hpp"

namespace elastica {

// On-disk problem format (schema 1):
//   {"a": num, "b": num, "xa": [x,y], "xb": [x,y], "va": [x,y], "vb": [x,y]}
// An optional "schema" field must equal 1 when present.
BoundaryProblem problem_from_json(const std::string& text);
BoundaryProblem read_problem_file(const std::string& path);
std::string problem_to_json(const BoundaryProblem& p);

// Reference-curve parameters (schema 1):
//   {"family": "wavelike"|"orbitlike"|"borderline", "kappa0": num, "p": num,
//    "t0": num, "a": num, "b": num, "xa": [x,y]?, "n": int?}
struct ReferenceSpec {
    ClosedFormParams params;
    double a = 0.0;
    double b = 1.0;
    Vec2 xa = Vec2::Zero();
    int n = 200;
};
ReferenceSpec reference_from_json(const std::string& text);
ReferenceSpec read_reference_file(const std::string& path);

// CSV with header t,x,y,theta,kappa and 17-significant-digit values; the
// encoding round-trips doubles exactly, so reload + re-emit is
// byte-identical.
std::string curve_to_csv(const CurveSamples& c);
CurveSamples curve_from_csv(const std::string& text);

// Deterministic SVG rendering of one or more curves as polyline paths.
// The viewBox is fitted with a 5% margin, the stroke width is 1% of the
// bounding-box diagonal, and the curves are distinguished by dash pattern
// (solid / dashed / dotted) as well as color.
struct SvgCurve {
    const CurveSamples* samples = nullptr;
    std::string label;
};
std::string curves_to_svg(const std::vector<SvgCurve>& curves);

// Heading graphs (t on the horizontal axis, theta vertical) in the same
// deterministic style.
struct SvgGraph {
    const std::vector<double>* t = nullptr;
    const std::vector<double>* value = nullptr;
    std::string label;
};
std::string graphs_to_svg(const std::vector<SvgGraph>& graphs);

std::string format_g17(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace elastica
