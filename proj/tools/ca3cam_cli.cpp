// ca3cam: runs the CAM experiments and operation scripts, writing rasters
// and reports as CSV / JSON.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ca3cam/gridmap.hpp"
#include "ca3cam/io.hpp"
#include "ca3cam/memory_ops.hpp"
#include "ca3cam/testbench.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ca3cam;

namespace {

struct RunConfig {
    std::size_t cues = 5;
    std::size_t cont = 10;
    std::uint64_t seed = 0;
    std::string out = "out";
    std::string format = "csv";
    std::vector<std::string> overrides;

    CamParams params() const {
        CamParams p;
        for (const auto& o : overrides) io::apply_param(p, o);
        return p;
    }
    CamConfig cam() const { return CamConfig{cues, cont, params()}; }
};

json metadata(const std::string& command, const RunConfig& rc, const CamParams& params, std::size_t cues,
              std::size_t cont) {
    return {
        {"command", command},
        {"cues", cues},
        {"cont", cont},
        {"seed", rc.seed},
        {"format", rc.format},
        {"overrides", rc.overrides},
        {"params", io::to_json(params)},
    };
}

void write_outputs(const RunConfig& rc, const snn::Raster& raster, const json& report) {
    fs::create_directories(rc.out);
    const auto raster_path = fs::path(rc.out) / (rc.format == "json" ? "raster.json" : "raster.csv");
    std::ofstream raster_file(raster_path);
    if (rc.format == "json")
        raster_file << io::raster_to_json(raster).dump(1) << '\n';
    else
        io::write_raster_csv(raster_file, raster);
    std::ofstream report_file(fs::path(rc.out) / "report.json");
    report_file << report.dump(2) << '\n';
    if (!raster_file || !report_file) throw std::runtime_error("cannot write outputs to '" + rc.out + "'");
}

json results_json(const std::vector<OperationResult>& results) {
    json out = json::array();
    for (const auto& r : results) out.push_back(io::to_json(r));
    return out;
}

int cmd_ops_demo(const RunConfig& rc) {
    const auto params = rc.params();
    auto run = testbench::run_operation_demo(params);
    json report = {
        {"metadata", metadata("ops-demo", rc, params, 5, 10)},
        {"results", results_json(run.results)},
        {"verdict", {{"passed", run.verdict.passed}, {"mismatches", run.verdict.mismatches}}},
    };
    write_outputs(rc, run.raster, report);
    std::cout << "ops-demo: " << run.raster.events.size() << " spikes, golden timeline "
              << (run.verdict.passed ? "MATCH" : "MISMATCH") << '\n';
    for (const auto& m : run.verdict.mismatches) std::cout << "  " << m << '\n';
    return run.verdict.passed ? 0 : 1;
}

int cmd_memtest(const RunConfig& rc) {
    const auto config = rc.cam();
    auto report = testbench::run_memtest(config);
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"sweep", c.sweep},
                          {"target", c.target},
                          {"expected", c.expected},
                          {"passed", c.passed},
                          {"result", io::to_json(c.result)}});
    json out = {
        {"metadata", metadata("memtest", rc, config.params, config.cue_count, config.cont_size)},
        {"operations", report.operations()},
        {"learns", report.learns},
        {"forgetting_learns", report.forgetting_learns},
        {"recalls_by_cue", report.recalls_by_cue},
        {"recalls_by_content", report.recalls_by_content},
        {"total_steps", report.total_steps},
        {"sweep3_matches_sweep1", report.sweep3_matches_sweep1},
        {"passed", report.passed()},
        {"mismatches", report.mismatches},
        {"checks", checks},
    };
    write_outputs(rc, report.raster, out);
    std::cout << "memtest " << config.cue_count << "x(" << config.cue_count << "+" << config.cont_size
              << "): " << report.operations() << " operations (" << report.learns << " learn, "
              << report.forgetting_learns << " with forgetting, " << report.recalls_by_cue << " recall by cue, "
              << report.recalls_by_content << " recall by content), " << report.total_steps << " steps, "
              << (report.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& m : report.mismatches) std::cout << "  " << m << '\n';
    return report.passed() ? 0 : 1;
}

int cmd_gridmap(const RunConfig& rc, const std::string& scenario_path, std::size_t width, std::size_t height) {
    gridmap::GridConfig grid{width, height, rc.params()};
    gridmap::Scenario scenario;
    if (scenario_path.empty()) {
        scenario = gridmap::reference_scenario();
    } else {
        std::ifstream in(scenario_path);
        if (!in) throw std::runtime_error("cannot open scenario '" + scenario_path + "'");
        try {
            scenario = gridmap::parse_scenario(in, grid);
        } catch (const gridmap::ScenarioError& e) {
            std::cerr << scenario_path << ':' << e.what() << '\n';
            return 2;
        }
    }
    auto run = gridmap::run_scenario(scenario, grid);

    json map = json::object();
    for (auto [position, state] : run.state_map)
        map[std::to_string(position)] = gridmap::to_string(static_cast<gridmap::CellState>(state));
    json answers = json::array();
    bool valid = true;
    for (const auto& a : run.answers) {
        answers.push_back({{"states", a.states},
                           {"positions", a.positions},
                           {"start", a.start},
                           {"answer_step", a.answer_step},
                           {"valid", a.valid}});
        valid = valid && a.valid;
    }
    for (const auto& r : run.observation_results) valid = valid && r.valid;
    json report = {
        {"metadata", metadata("gridmap", rc, grid.params, grid.positions(), gridmap::kStateCount)},
        {"scenario", scenario_path.empty() ? "reference" : scenario_path},
        {"observations_done", run.observations_done},
        {"state_map", map},
        {"answers", answers},
        {"valid", valid},
    };
    write_outputs(rc, run.raster, report);
    std::cout << "gridmap: " << scenario.observations.size() << " observations done at step "
              << run.observations_done << '\n';
    for (const auto& a : run.answers)
        std::cout << "  query " << to_string(a.states) << " -> positions " << to_string(a.positions) << " at step "
                  << a.answer_step << '\n';
    return valid ? 0 : 1;
}

int cmd_run(const RunConfig& rc, const std::string& script_path) {
    const auto config = rc.cam();
    std::ifstream in(script_path);
    if (!in) throw std::runtime_error("cannot open script '" + script_path + "'");
    CompiledProgram program;
    try {
        program = io::compile_script(io::parse_script(in), config);
    } catch (const io::ScriptError& e) {
        std::cerr << script_path << ':' << e.what() << '\n';
        return 2;
    }
    CamNetwork cam(config);
    auto raster = cam.network().run(program.schedule, program.plan.end_step);
    auto results = decode(raster, program.plan);
    bool valid = true;
    for (const auto& r : results) valid = valid && r.valid;
    json report = {
        {"metadata", metadata("run", rc, config.params, config.cue_count, config.cont_size)},
        {"script", script_path},
        {"results", results_json(results)},
        {"valid", valid},
    };
    write_outputs(rc, raster, report);
    for (const auto& r : results) {
        std::cout << to_string(r.kind) << " @" << r.start << ": ";
        if (r.kind == OperationKind::learn)
            std::cout << "forgotten " << to_string(r.forgotten);
        else
            std::cout << (r.kind == OperationKind::recall_by_cue ? "content " : "cues ") << to_string(r.answer);
        std::cout << (r.valid ? "" : " [invalid]") << '\n';
    }
    return valid ? 0 : 1;
}

int cmd_stress(const RunConfig& rc, std::size_t n_ops) {
    const auto config = rc.cam();
    auto report = testbench::run_random_stress(rc.seed, n_ops, config);
    json report_json = {
        {"metadata", metadata("stress", rc, config.params, config.cue_count, config.cont_size)},
        {"n_ops", report.n_ops},
        {"total_steps", report.total_steps},
        {"divergences", report.divergences},
        {"passed", report.passed()},
    };
    if (report.first_divergence) {
        report_json["first_divergence"] = *report.first_divergence;
        report_json["detail"] = report.detail;
    }
    fs::create_directories(rc.out);
    std::ofstream(fs::path(rc.out) / "report.json") << report_json.dump(2) << '\n';
    std::cout << "stress seed " << rc.seed << ": " << report.n_ops << " operations, " << report.divergences
              << " divergences" << (report.detail.empty() ? "" : " - " + report.detail) << '\n';
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spiking CA3 content-addressable memory: experiments and operation scripts"};
    app.require_subcommand(1);

    RunConfig rc;
    auto add_common = [&](CLI::App* cmd, bool sizes) {
        if (sizes) {
            cmd->add_option("--cues", rc.cues, "Number of cues (one-hot cue width)")->check(CLI::PositiveNumber);
            cmd->add_option("--cont", rc.cont, "Number of content neurons")->check(CLI::PositiveNumber);
        }
        cmd->add_option("--seed", rc.seed, "Seed (recorded in metadata)");
        cmd->add_option("--out", rc.out, "Output directory")->capture_default_str();
        cmd->add_option("--format", rc.format, "Raster format")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--param", rc.overrides, "Parameter override key=value (repeatable)");
    };

    auto* demo = app.add_subcommand("ops-demo", "Nine-operation demo checked against the golden timeline");
    add_common(demo, false);

    auto* memtest = app.add_subcommand("memtest", "Three-sweep MemTest86-style testbench");
    add_common(memtest, true);

    std::string scenario_path;
    std::size_t width = 4, height = 4;
    auto* grid = app.add_subcommand("gridmap", "Environment state map scenario");
    add_common(grid, false);
    grid->add_option("scenario", scenario_path, "Scenario file (reference scenario when omitted)");
    grid->add_option("--width", width, "Grid width")->check(CLI::PositiveNumber);
    grid->add_option("--height", height, "Grid height")->check(CLI::PositiveNumber);

    std::string script_path;
    auto* run = app.add_subcommand("run", "Run an operation script");
    add_common(run, true);
    run->add_option("script", script_path, "Operation script")->required();

    std::size_t n_ops = 1000;
    auto* stress = app.add_subcommand("stress", "Random operations checked against the reference model");
    add_common(stress, true);
    stress->add_option("--ops", n_ops, "Number of operations")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*demo) return cmd_ops_demo(rc);
        if (*memtest) return cmd_memtest(rc);
        if (*grid) return cmd_gridmap(rc, scenario_path, width, height);
        if (*run) return cmd_run(rc, script_path);
        if (*stress) return cmd_stress(rc, n_ops);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
