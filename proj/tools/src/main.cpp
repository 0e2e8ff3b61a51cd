#include <string>
#include <vector>

#include <CLI11.hpp>

#include "run.hpp"

namespace {

void add_common(CLI::App* cmd, elastica::cli::RunConfig& cfg, std::string& formats,
                std::string& schedule) {
    cmd->add_option("input", cfg.input_path, "problem/reference JSON file")->required();
    cmd->add_option("--n", cfg.n, "subdivision count (rounded up to even)");
    cmd->add_option("--schedule", schedule, "continuation schedule, e.g. 8,16,32");
    cmd->add_option("--out", cfg.output_dir, "output directory (env ELASTICA_OUT overrides)");
    cmd->add_option("--format", formats, "comma-separated subset of csv,svg,json");
    cmd->add_option("--tol-constraint", cfg.optimizer.constraint_tol, "constraint tolerance");
    cmd->add_option("--tol-grad", cfg.optimizer.gradient_tol, "projected-gradient tolerance");
    cmd->add_option("--max-iter", cfg.optimizer.max_inner, "inner iteration cap");
    cmd->add_flag("--quiet", cfg.quiet, "suppress progress output");
}

bool parse_formats(const std::string& formats, elastica::cli::RunConfig& cfg) {
    if (formats.empty()) return true;
    cfg.csv = cfg.svg = cfg.json = false;
    std::size_t pos = 0;
    while (pos <= formats.size()) {
        const std::size_t next = formats.find(',', pos);
        const std::string item = formats.substr(pos, next - pos);
        if (item == "csv") {
            cfg.csv = true;
        } else if (item == "svg") {
            cfg.svg = true;
        } else if (item == "json") {
            cfg.json = true;
        } else if (!item.empty()) {
            return false;
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return cfg.csv || cfg.svg || cfg.json;
}

bool parse_schedule(const std::string& schedule, elastica::cli::RunConfig& cfg) {
    if (schedule.empty()) return true;
    std::size_t pos = 0;
    while (pos <= schedule.size()) {
        const std::size_t next = schedule.find(',', pos);
        const std::string item = schedule.substr(pos, next - pos);
        if (!item.empty()) {
            try {
                cfg.n_schedule.push_back(std::stoi(item));
            } catch (const std::exception&) {
                return false;
            }
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return !cfg.n_schedule.empty();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clamped planar elastica: seed-then-optimize solver and tools"};
    app.require_subcommand(1);

    elastica::cli::RunConfig cfg;
    std::string formats, schedule;

    auto* solve = app.add_subcommand("solve", "solve the clamped elastica problem");
    add_common(solve, cfg, formats, schedule);
    solve->add_flag("--seed-only", cfg.seed_only, "stop after the Step-1 seed");

    auto* seed = app.add_subcommand("seed", "emit the Step-1 heading profile");
    add_common(seed, cfg, formats, schedule);

    auto* reference = app.add_subcommand("reference", "sample a closed-form reference curve");
    add_common(reference, cfg, formats, schedule);

    auto* compare = app.add_subcommand("compare", "solver vs. standard discretisation");
    add_common(compare, cfg, formats, schedule);
    compare->add_option("--baseline-n", cfg.baseline_n, "baseline segment count");

    auto* validate = app.add_subcommand("validate", "check problem invariants");
    add_common(validate, cfg, formats, schedule);

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) cfg.command = elastica::cli::Command::solve;
    if (seed->parsed()) cfg.command = elastica::cli::Command::seed;
    if (reference->parsed()) cfg.command = elastica::cli::Command::reference;
    if (compare->parsed()) cfg.command = elastica::cli::Command::compare;
    if (validate->parsed()) cfg.command = elastica::cli::Command::validate;

    if (!parse_formats(formats, cfg)) {
        std::cerr << "{\"error\":\"invalid_input\",\"message\":\"--format must be a subset of csv,svg,json\"}\n";
        return 2;
    }
    if (!parse_schedule(schedule, cfg)) {
        std::cerr << "{\"error\":\"invalid_input\",\"message\":\"--schedule must be a comma list of integers\"}\n";
        return 2;
    }
    return elastica::cli::run(cfg);
}
