#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ca3cam/memory_ops.hpp"

namespace ca3cam::gridmap {

/// Cell states, one content neuron each.
enum class CellState : std::size_t { unknown = 0, initial = 1, goal = 2, free = 3, visited = 4, obstacle = 5 };

inline constexpr std::size_t kStateCount = 6;

const char* to_string(CellState state);

/// Grid of width x height positions numbered row-major from 0; every
/// position is a cue and every state a content neuron.
struct GridConfig {
    std::size_t width = 4;
    std::size_t height = 4;
    CamParams params{};

    std::size_t positions() const { return width * height; }
    CamConfig cam_config() const { return CamConfig{positions(), kStateCount, params}; }
};

struct Observation {
    std::size_t position = 0;
    std::size_t state = 0;
    std::size_t line = 0;  ///< source line, 0 when built in code
};

struct Query {
    IndexSet states;
    std::size_t line = 0;
};

struct Scenario {
    std::vector<Observation> observations;
    std::vector<Query> queries;
};

class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses `obs <position> <state>` / `query <state>[,<state>...]` lines;
/// `#` starts a comment. Throws ScenarioError.
Scenario parse_scenario(std::istream& in, const GridConfig& grid = {});

/// The 4x4 map used for the reference run: path 2 (initial) .. 14 (goal)
/// through 6, 10, 12, 13; free 3, 5, 11, 15; obstacles 1, 7, 9; unknown 0, 4, 8.
/// Observed in position order, then the path / free / obstacle / unknown queries.
Scenario reference_scenario();

/// Environment state map stored in a CAM.
class GridMapApp {
public:
    explicit GridMapApp(GridConfig grid = {});

    /// Learns {cue = position, content = {state}}; supersedes any earlier state.
    OperationResult record_state(std::size_t position, std::size_t state);

    /// Positions whose stored state is in `states`, from one recall by content.
    IndexSet query_positions(const IndexSet& states);

    const GridConfig& grid() const { return grid_; }
    CamMemory& memory() { return memory_; }
    const CamMemory& memory() const { return memory_; }
    const OperationResult& last_result() const { return last_; }

private:
    GridConfig grid_;
    CamMemory memory_;
    OperationResult last_;
};

struct QueryAnswer {
    IndexSet states;
    IndexSet positions;
    Step start = 0;
    Step answer_step = 0;
    bool valid = true;
};

struct ScenarioRun {
    std::map<std::size_t, std::size_t> state_map;  ///< position -> last recorded state
    std::vector<QueryAnswer> answers;
    std::vector<OperationResult> observation_results;
    Step observations_done = 0;  ///< step at which the last observation completed
    snn::Raster raster;
};

ScenarioRun run_scenario(const Scenario& scenario, const GridConfig& grid = {});

}  // namespace ca3cam::gridmap
