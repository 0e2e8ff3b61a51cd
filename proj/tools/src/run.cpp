#include "run.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "elastica/baseline.hpp"
#include "elastica/closed_form.hpp"
#include "elastica/errors.hpp"
#include "elastica/io.hpp"
#include "elastica/quadrature.hpp"
#include "elastica/seed.hpp"
#include "elastica/solver.hpp"

namespace elastica::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json report_json(const SolveReport& r, bool with_timing) {
    json j;
    j["status"] = std::string(to_string(r.status));
    j["energy"] = r.energy;
    j["constraint_residual"] = r.constraint_residual;
    j["iterations"] = r.iterations;
    j["outer_iterations"] = r.outer_iterations;
    if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

// Timing is real wall time and would break byte-for-byte reproducibility of
// `solve` outputs, so it only appears in the comparison report.
json solution_json(const Solution& sol, bool with_timing) {
    json j = report_json(sol.report, with_timing);
    j["schema"] = 1;
    j["n"] = sol.n;
    j["endpoint_gap"] = (sol.curve.position.back() - sol.problem.xb).norm();
    if (sol.stage_reports.size() > 1) {
        json stages = json::array();
        for (const SolveReport& r : sol.stage_reports) stages.push_back(report_json(r, with_timing));
        j["stages"] = stages;
    }
    return j;
}

void emit_error_json(const std::string& code, const std::string& message,
                     const RunConfig& cfg) {
    json j;
    j["error"] = code;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
    if (cfg.json) {
        std::error_code ec;
        fs::create_directories(cfg.output_dir, ec);
        if (!ec) {
            try {
                write_text_file((fs::path(cfg.output_dir) / "error.json").string(),
                                j.dump(2) + "\n");
            } catch (const Error&) {
                // stderr already carries the diagnostic
            }
        }
    }
}

void say(const RunConfig& cfg, const std::string& line) {
    if (!cfg.quiet) std::cout << line << "\n";
}

std::string out_path(const RunConfig& cfg, const char* name) {
    return (fs::path(cfg.output_dir) / name).string();
}

void ensure_out_dir(const RunConfig& cfg) {
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw InvalidInput("cannot create output directory " + cfg.output_dir);
}

int run_seed(const RunConfig& cfg, const BoundaryProblem& p) {
    const SeedProfile sp = seed_profile(p);
    ensure_out_dir(cfg);

    // dense spline samples plus the 5 knots, both in the original frame
    const int n_dense = 200;
    std::vector<double> ts, theta;
    const double a = sp.heading.t_begin(), b = sp.heading.t_end();
    for (int j = 0; j <= n_dense; ++j) {
        const double t = a + (b - a) * j / n_dense;
        ts.push_back(t);
        theta.push_back(sp.heading.eval(t) + sp.pose.rotation);
    }
    if (cfg.csv) {
        std::string csv = "t,theta\n";
        for (std::size_t j = 0; j < ts.size(); ++j) {
            csv += format_g17(ts[j]);
            csv += ',';
            csv += format_g17(theta[j]);
            csv += '\n';
        }
        write_text_file(out_path(cfg, "seed.csv"), csv);

        std::string knots = "t,theta\n";
        for (std::size_t j = 0; j < sp.heading.t.size(); ++j) {
            knots += format_g17(sp.heading.t[j]);
            knots += ',';
            knots += format_g17(sp.heading.theta[j] + sp.pose.rotation);
            knots += '\n';
        }
        write_text_file(out_path(cfg, "seed_knots.csv"), knots);
    }
    if (cfg.svg) {
        write_text_file(out_path(cfg, "seed.svg"),
                        graphs_to_svg({SvgGraph{&ts, &theta, "seed-heading"}}));
    }
    if (cfg.json) {
        json j;
        j["schema"] = 1;
        j["h"] = sp.estimates.h;
        j["theta_knots"] = sp.estimates.theta_tilde;
        write_text_file(out_path(cfg, "report.json"), j.dump(2) + "\n");
    }
    say(cfg, "seed written to " + cfg.output_dir);
    return 0;
}

int run_solve(const RunConfig& cfg) {
    const BoundaryProblem p = validate_problem(read_problem_file(cfg.input_path));
    if (cfg.command == Command::seed || cfg.seed_only) return run_seed(cfg, p);

    Solution sol;
    if (cfg.n_schedule.empty()) {
        sol = solve_clamped_elastica(p, cfg.n, cfg.optimizer);
    } else {
        sol = continuation_solve(p, cfg.n_schedule, cfg.optimizer);
    }

    ensure_out_dir(cfg);
    if (cfg.csv) write_text_file(out_path(cfg, "curve.csv"), curve_to_csv(sol.curve));
    if (cfg.svg) {
        write_text_file(out_path(cfg, "curve.svg"),
                        curves_to_svg({SvgCurve{&sol.curve, "solution"}}));
    }
    if (cfg.json) {
        write_text_file(out_path(cfg, "report.json"),
                        solution_json(sol, /*with_timing=*/false).dump(2) + "\n");
    }
    std::ostringstream line;
    line << "status=" << to_string(sol.report.status) << " energy=" << sol.report.energy
         << " residual=" << sol.report.constraint_residual << " n=" << sol.n;
    say(cfg, line.str());
    return sol.report.status == SolveStatus::converged ? 0 : 1;
}

int run_reference(const RunConfig& cfg) {
    const ReferenceSpec ref = read_reference_file(cfg.input_path);
    const CurveSamples c = sample_reference(ref.params, ref.a, ref.b, ref.n, ref.xa);
    ensure_out_dir(cfg);
    if (cfg.csv) write_text_file(out_path(cfg, "curve.csv"), curve_to_csv(c));
    if (cfg.svg) {
        write_text_file(out_path(cfg, "curve.svg"),
                        curves_to_svg({SvgCurve{&c, "reference"}}));
    }
    if (cfg.json) {
        json j;
        j["schema"] = 1;
        j["family"] = std::string(to_string(ref.params.family));
        j["kappa0"] = ref.params.kappa0;
        j["p"] = ref.params.p;
        j["t0"] = ref.params.t0;
        j["a"] = ref.a;
        j["b"] = ref.b;
        j["n"] = ref.n;
        j["endpoint"] = {c.position.back().x(), c.position.back().y()};
        j["end_tangent"] = {std::cos(c.heading.back()), std::sin(c.heading.back())};
        write_text_file(out_path(cfg, "report.json"), j.dump(2) + "\n");
    }
    say(cfg, "reference written to " + cfg.output_dir);
    return 0;
}

int run_compare(const RunConfig& cfg) {
    const BoundaryProblem p = validate_problem(read_problem_file(cfg.input_path));
    ensure_out_dir(cfg);

    json j;
    j["schema"] = 1;
    bool solver_ok = false;
    Solution sol, base;
    bool have_sol = false, have_base = false;

    try {
        sol = cfg.n_schedule.empty() ? solve_clamped_elastica(p, cfg.n, cfg.optimizer)
                                     : continuation_solve(p, cfg.n_schedule, cfg.optimizer);
        have_sol = true;
        solver_ok = sol.report.status == SolveStatus::converged;
        j["solver"] = solution_json(sol, /*with_timing=*/true);
    } catch (const Error& e) {
        j["solver"] = {{"status", "failed"}, {"error", e.code()}, {"message", e.what()}};
    }
    try {
        base = standard_discretisation(p, cfg.baseline_n, cfg.optimizer);
        have_base = true;
        j["baseline"] = solution_json(base, /*with_timing=*/true);
    } catch (const Error& e) {
        j["baseline"] = {{"status", "failed"}, {"error", e.code()}, {"message", e.what()}};
    }

    if (cfg.csv) {
        if (have_sol) write_text_file(out_path(cfg, "solver_curve.csv"), curve_to_csv(sol.curve));
        if (have_base) {
            write_text_file(out_path(cfg, "baseline_curve.csv"), curve_to_csv(base.curve));
        }
        std::string table = "method,status,energy,constraint_residual,iterations,elapsed_seconds\n";
        auto row = [&table](const char* name, const SolveReport& r) {
            table += name;
            table += ',';
            table += std::string(to_string(r.status));
            table += ',';
            table += format_g17(r.energy);
            table += ',';
            table += format_g17(r.constraint_residual);
            table += ',';
            table += std::to_string(r.iterations);
            table += ',';
            table += format_g17(r.elapsed_seconds);
            table += '\n';
        };
        if (have_sol) row("seed_then_optimize", sol.report);
        if (have_base) row("standard_discretisation", base.report);
        write_text_file(out_path(cfg, "compare.csv"), table);
    }
    if (cfg.svg) {
        std::vector<SvgCurve> curves;
        if (have_sol) curves.push_back({&sol.curve, "solution"});
        if (have_base) curves.push_back({&base.curve, "baseline"});
        write_text_file(out_path(cfg, "compare.svg"), curves_to_svg(curves));
    }
    if (cfg.json) write_text_file(out_path(cfg, "compare.json"), j.dump(2) + "\n");

    std::ostringstream line;
    line << "solver=" << (have_sol ? to_string(sol.report.status) : "failed");
    if (have_sol) line << " (E=" << sol.report.energy << ")";
    line << " baseline=" << (have_base ? to_string(base.report.status) : "failed");
    if (have_base) line << " (E=" << base.report.energy << ")";
    say(cfg, line.str());
    return solver_ok ? 0 : 1;
}

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

int run_validate(const RunConfig& cfg) {
    std::vector<CheckLine> checks;
    auto add = [&checks](const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    };

    BoundaryProblem p;
    try {
        p = validate_problem(read_problem_file(cfg.input_path));
        add("problem_invariants", true);
    } catch (const Error& e) {
        add("problem_invariants", false, e.what());
        for (const auto& c : checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        }
        return 2;
    }

    {
        const auto [canon, iso] = canonical_pose(p);
        const double err = std::max((iso.apply(canon.xb) - p.xb).norm(),
                                    (iso.rotate(canon.vb) - p.vb).norm());
        add("canonical_round_trip", err < 1e-12, "max error " + std::to_string(err));
    }
    try {
        const SeedProfile sp = seed_profile(p);
        const bool ends = sp.heading.eval(sp.heading.t_begin()) == 0.0;
        add("seed_profile", ends, "theta(a) = 0");
        const auto [canon, iso] = canonical_pose(p);
        const int n = cfg.n;
        const QuadratureWeights w = simpson_weights(n, canon.length() / n);
        std::vector<double> phi;
        for (int k = 0; k <= n; ++k) {
            phi.push_back(sp.heading.eval(canon.a + k * canon.length() / n));
        }
        const Vec2 gap = tangent_closure(phi, w) - (canon.xb - canon.xa);
        add("seed_closure_gap", gap.norm() < 0.5 * std::max(1.0, canon.length()),
            "||S(seed) - chord|| = " + std::to_string(gap.norm()));
    } catch (const Error& e) {
        add("seed_profile", false, e.what());
    }

    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        all = all && c.pass;
    }
    if (cfg.json) {
        ensure_out_dir(cfg);
        json j;
        j["schema"] = 1;
        json arr = json::array();
        for (const auto& c : checks) {
            arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        j["checks"] = arr;
        write_text_file(out_path(cfg, "validate.json"), j.dump(2) + "\n");
    }
    return all ? 0 : 1;
}

} // namespace

int run(const RunConfig& config) {
    RunConfig cfg = config;
    if (const char* env = std::getenv("ELASTICA_OUT"); env != nullptr && *env != '\0') {
        cfg.output_dir = env;
    }
    try {
        switch (cfg.command) {
            case Command::solve:
            case Command::seed: return run_solve(cfg);
            case Command::reference: return run_reference(cfg);
            case Command::compare: return run_compare(cfg);
            case Command::validate: return run_validate(cfg);
        }
        return 2;
    } catch (const InvalidInput& e) {
        emit_error_json(e.code(), e.what(), cfg);
        return 2;
    } catch (const DegenerateInterval& e) {
        emit_error_json(e.code(), e.what(), cfg);
        return 2;
    } catch (const NonUnitTangent& e) {
        emit_error_json(e.code(), e.what(), cfg);
        return 2;
    } catch (const InfeasibleChord& e) {
        emit_error_json(e.code(), e.what(), cfg);
        return 2;
    } catch (const Error& e) {
        // numeric failures (seed degeneracy, optimizer trouble, endpoint miss)
        emit_error_json(e.code(), e.what(), cfg);
        return 1;
    }
}

} // namespace elastica::cli
