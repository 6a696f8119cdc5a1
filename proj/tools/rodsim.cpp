#include <CLI11.hpp>
#include <cstdio>

#include "rodsim/experiments.hpp"

namespace {

rodsim::bench::RunSummary dispatch(const std::string& experiment,
                                   const rodsim::bench::Config& cfg, const std::string& out,
                                   int jobs) {
    using namespace rodsim::bench;
    if (experiment == "cantilever") return run_cantilever(cfg, out, jobs);
    if (experiment == "helix") return run_helix(cfg, out, jobs);
    if (experiment == "objectivity") return run_objectivity(cfg, out);
    if (experiment == "bent-helix") return run_bent_helix(cfg, out);
    if (experiment == "heavy-top") return run_heavy_top(cfg, out);
    if (experiment == "liegroup-selftest") return run_liegroup_selftest(cfg, out);
    throw rodsim::ConfigError("unknown experiment: " + experiment);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rodsim - geometrically exact rod benchmark runner"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run one experiment");
    std::string experiment;
    run->add_option("experiment", experiment,
                    "one of: cantilever, helix, objectivity, bent-helix, heavy-top, "
                    "liegroup-selftest")
        ->required();
    std::string config_path;
    run->add_option("--config", config_path, "configuration file (key = value sections)");
    std::string out_dir = "rodsim-out";
    run->add_option("--out", out_dir, "output directory for CSV and SVG artifacts");
    int jobs = 1;
    run->add_option("--jobs", jobs, "parallel sweep workers")->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list", "print experiments and the default configuration");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        std::printf("experiments:\n");
        for (const auto& [name, keys] : rodsim::bench::config_schema())
            std::printf("  %s\n", name.c_str());
        std::printf("\ndefault configuration:\n%s", rodsim::bench::default_config_text().c_str());
        return 0;
    }

    try {
        rodsim::bench::Config cfg;
        if (!config_path.empty()) {
            cfg = rodsim::bench::Config::parse_file(config_path);
            cfg.validate(rodsim::bench::config_schema());
        }
        const rodsim::bench::RunSummary summary = dispatch(experiment, cfg, out_dir, jobs);
        for (const std::string& line : summary.lines) std::printf("%s\n", line.c_str());
        if (!summary.ok) {
            std::fprintf(stderr, "experiment reported failures\n");
            return 2;
        }
    } catch (const rodsim::ConfigError& err) {
        std::fprintf(stderr, "configuration error: %s\n", err.what());
        return 3;
    } catch (const rodsim::Error& err) {
        std::fprintf(stderr, "solver failure: %s\n", err.what());
        return 2;
    }
    return 0;
}
