#include "elastica/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        std::ostringstream os;
        os << what << ": not valid JSON";
        throw InvalidInput(os.str());
    }
    return j;
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        std::ostringstream os;
        os << "missing or non-numeric field \"" << key << "\"";
        throw InvalidInput(os.str());
    }
    return j[key].get<double>();
}

Vec2 vec_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
        !j[key][0].is_number() || !j[key][1].is_number()) {
        std::ostringstream os;
        os << "field \"" << key << "\" must be a [x, y] number pair";
        throw InvalidInput(os.str());
    }
    return Vec2(j[key][0].get<double>(), j[key][1].get<double>());
}

void check_schema(const json& j) {
    if (j.contains("schema") && !(j["schema"].is_number_integer() && j["schema"] == 1)) {
        throw InvalidInput("unsupported schema version (expected 1)");
    }
}

} // namespace

BoundaryProblem problem_from_json(const std::string& text) {
    const json j = parse_or_throw(text, "problem");
    check_schema(j);
    BoundaryProblem p;
    p.a = number_field(j, "a");
    p.b = number_field(j, "b");
    p.xa = vec_field(j, "xa");
    p.xb = vec_field(j, "xb");
    p.va = vec_field(j, "va");
    p.vb = vec_field(j, "vb");
    return p;
}

BoundaryProblem read_problem_file(const std::string& path) {
    return problem_from_json(read_text_file(path));
}

std::string problem_to_json(const BoundaryProblem& p) {
    json j;
    j["schema"] = 1;
    j["a"] = p.a;
    j["b"] = p.b;
    j["xa"] = {p.xa.x(), p.xa.y()};
    j["xb"] = {p.xb.x(), p.xb.y()};
    j["va"] = {p.va.x(), p.va.y()};
    j["vb"] = {p.vb.x(), p.vb.y()};
    return j.dump(2) + "\n";
}

ReferenceSpec reference_from_json(const std::string& text) {
    const json j = parse_or_throw(text, "reference parameters");
    check_schema(j);
    ReferenceSpec r;
    if (!j.contains("family") || !j["family"].is_string()) {
        throw InvalidInput("missing \"family\" (wavelike | orbitlike | borderline)");
    }
    const std::string fam = j["family"].get<std::string>();
    if (fam == "wavelike") {
        r.params.family = ElasticaFamily::wavelike;
    } else if (fam == "orbitlike") {
        r.params.family = ElasticaFamily::orbitlike;
    } else if (fam == "borderline") {
        r.params.family = ElasticaFamily::borderline;
    } else {
        throw InvalidInput("unknown family \"" + fam + "\"");
    }
    r.params.kappa0 = number_field(j, "kappa0");
    if (j.contains("p")) r.params.p = number_field(j, "p");
    if (j.contains("t0")) r.params.t0 = number_field(j, "t0");
    r.a = number_field(j, "a");
    r.b = number_field(j, "b");
    if (j.contains("xa")) r.xa = vec_field(j, "xa");
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw InvalidInput("\"n\" must be an integer");
        r.n = j["n"].get<int>();
    }
    return r;
}

ReferenceSpec read_reference_file(const std::string& path) {
    return reference_from_json(read_text_file(path));
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string curve_to_csv(const CurveSamples& c) {
    std::string out = "t,x,y,theta,kappa\n";
    for (std::size_t j = 0; j < c.size(); ++j) {
        out += format_g17(c.t[j]);
        out += ',';
        out += format_g17(c.position[j].x());
        out += ',';
        out += format_g17(c.position[j].y());
        out += ',';
        out += format_g17(c.heading[j]);
        out += ',';
        out += format_g17(c.curvature[j]);
        out += '\n';
    }
    return out;
}

CurveSamples curve_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "t,x,y,theta,kappa") {
        throw InvalidInput("curve CSV: expected header \"t,x,y,theta,kappa\"");
    }
    CurveSamples c;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double v[5];
        const char* s = line.c_str();
        char* end = nullptr;
        for (int k = 0; k < 5; ++k) {
            v[k] = std::strtod(s, &end);
            if (end == s || (k < 4 && *end != ',')) {
                std::ostringstream os;
                os << "curve CSV line " << lineno << ": malformed number in column " << k + 1;
                throw InvalidInput(os.str());
            }
            s = (k < 4) ? end + 1 : end;
        }
        c.t.push_back(v[0]);
        c.position.emplace_back(v[1], v[2]);
        c.heading.push_back(v[3]);
        c.curvature.push_back(v[4]);
    }
    return c;
}

namespace {

struct Box {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool any = false;

    void add(double x, double y) {
        if (!any) {
            xmin = xmax = x;
            ymin = ymax = y;
            any = true;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
};

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

// Okabe-Ito palette; dash patterns carry the distinction for monochrome
// reproduction.
constexpr const char* kColors[] = {"#0072b2", "#d55e00", "#009e73", "#cc79a7"};

std::string dash_for(std::size_t idx, double sw) {
    switch (idx % 3) {
        case 0: return "";
        case 1: return " stroke-dasharray=\"" + fmt_coord(4.0 * sw) + " " + fmt_coord(2.5 * sw) + "\"";
        default: return " stroke-dasharray=\"" + fmt_coord(sw) + " " + fmt_coord(2.0 * sw) + "\"";
    }
}

std::string render_paths(const std::vector<std::vector<std::pair<double, double>>>& polys,
                         const std::vector<std::string>& labels) {
    Box box;
    for (const auto& poly : polys) {
        for (const auto& [x, y] : poly) box.add(x, y);
    }
    if (!box.any) box.add(0, 0);
    const double w = box.xmax - box.xmin, hgt = box.ymax - box.ymin;
    const double diag = std::max(std::hypot(w, hgt), 1e-9);
    const double margin = 0.05 * diag;
    const double sw = 0.01 * diag;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << fmt_coord(box.xmin - margin) << " " << fmt_coord(-box.ymax - margin) << " "
        << fmt_coord(w + 2 * margin) << " " << fmt_coord(hgt + 2 * margin) << "\">\n";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        svg << "  <path fill=\"none\" stroke=\"" << kColors[i % 4] << "\" stroke-width=\""
            << fmt_coord(sw) << "\"" << dash_for(i, sw);
        if (!labels[i].empty()) svg << " id=\"" << labels[i] << "\"";
        svg << " d=\"";
        for (std::size_t j = 0; j < polys[i].size(); ++j) {
            svg << (j == 0 ? "M" : " L") << fmt_coord(polys[i][j].first) << " "
                << fmt_coord(-polys[i][j].second); // SVG y axis points down
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace

std::string curves_to_svg(const std::vector<SvgCurve>& curves) {
    std::vector<std::vector<std::pair<double, double>>> polys;
    std::vector<std::string> labels;
    for (const auto& c : curves) {
        std::vector<std::pair<double, double>> poly;
        if (c.samples != nullptr) {
            poly.reserve(c.samples->size());
            for (const Vec2& p : c.samples->position) poly.emplace_back(p.x(), p.y());
        }
        polys.push_back(std::move(poly));
        labels.push_back(c.label);
    }
    return render_paths(polys, labels);
}

std::string graphs_to_svg(const std::vector<SvgGraph>& graphs) {
    std::vector<std::vector<std::pair<double, double>>> polys;
    std::vector<std::string> labels;
    for (const auto& g : graphs) {
        std::vector<std::pair<double, double>> poly;
        if (g.t != nullptr && g.value != nullptr) {
            const std::size_t n = std::min(g.t->size(), g.value->size());
            poly.reserve(n);
            for (std::size_t j = 0; j < n; ++j) poly.emplace_back((*g.t)[j], (*g.value)[j]);
        }
        polys.push_back(std::move(poly));
        labels.push_back(g.label);
    }
    return render_paths(polys, labels);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open for writing: " + path);
    out << content;
    if (!out) throw InvalidInput("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace elastica
