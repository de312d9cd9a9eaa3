#include "ca3cam/gridmap.hpp"

#include <sstream>

namespace ca3cam::gridmap {

const char* to_string(CellState state) {
    switch (state) {
        case CellState::unknown: return "unknown";
        case CellState::initial: return "initial";
        case CellState::goal: return "goal";
        case CellState::free: return "free";
        case CellState::visited: return "visited";
        case CellState::obstacle: return "obstacle";
    }
    return "?";
}

namespace {

std::size_t parse_number(const std::string& token, std::size_t line, const char* what) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (token.empty() || used != token.size() || token.front() == '-')
        throw ScenarioError(line, std::string("bad ") + what + " '" + token + "'");
    return value;
}

void check_state(std::size_t state, std::size_t line) {
    if (state >= kStateCount)
        throw ScenarioError(line, "state " + std::to_string(state) + " outside 0.." + std::to_string(kStateCount - 1));
}

}  // namespace

Scenario parse_scenario(std::istream& in, const GridConfig& grid) {
    Scenario scenario;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(w);
        if (tokens.empty()) continue;

        if (tokens[0] == "obs") {
            if (tokens.size() != 3) throw ScenarioError(line, "expected 'obs <position> <state>'");
            Observation obs{parse_number(tokens[1], line, "position"), parse_number(tokens[2], line, "state"), line};
            if (obs.position >= grid.positions())
                throw ScenarioError(line, "position " + tokens[1] + " outside the " + std::to_string(grid.width) +
                                              "x" + std::to_string(grid.height) + " grid");
            check_state(obs.state, line);
            scenario.observations.push_back(obs);
        } else if (tokens[0] == "query") {
            if (tokens.size() != 2) throw ScenarioError(line, "expected 'query <state>[,<state>...]'");
            Query query{{}, line};
            try {
                query.states = parse_index_list(tokens[1]);
            } catch (const std::invalid_argument& e) {
                throw ScenarioError(line, e.what());
            }
            for (auto s : query.states) check_state(s, line);
            scenario.queries.push_back(std::move(query));
        } else {
            throw ScenarioError(line, "unknown directive '" + tokens[0] + "'");
        }
    }
    return scenario;
}

Scenario reference_scenario() {
    using S = CellState;
    const S states[16] = {
        S::unknown, S::obstacle, S::initial, S::free,     //
        S::unknown, S::free,     S::visited, S::obstacle,  //
        S::unknown, S::obstacle, S::visited, S::free,     //
        S::visited, S::visited,  S::goal,    S::free,     //
    };
    Scenario scenario;
    for (std::size_t p = 0; p < 16; ++p) scenario.observations.push_back({p, static_cast<std::size_t>(states[p]), 0});
    scenario.queries = {
        {{static_cast<std::size_t>(S::initial), static_cast<std::size_t>(S::goal), static_cast<std::size_t>(S::visited)},
         0},
        {{static_cast<std::size_t>(S::free)}, 0},
        {{static_cast<std::size_t>(S::obstacle)}, 0},
        {{static_cast<std::size_t>(S::unknown)}, 0},
    };
    return scenario;
}

GridMapApp::GridMapApp(GridConfig grid) : grid_(grid), memory_(grid_.cam_config()) {}

OperationResult GridMapApp::record_state(std::size_t position, std::size_t state) {
    if (position >= grid_.positions()) throw std::out_of_range("position " + std::to_string(position) + " outside grid");
    if (state >= kStateCount) throw std::out_of_range("state " + std::to_string(state) + " unknown");
    last_ = memory_.learn({position, {state}});
    return last_;
}

IndexSet GridMapApp::query_positions(const IndexSet& states) {
    if (states.empty()) throw std::invalid_argument("query needs at least one state");
    last_ = memory_.recall_by_content(states);
    return last_.answer;
}

ScenarioRun run_scenario(const Scenario& scenario, const GridConfig& grid) {
    GridMapApp app(grid);
    ScenarioRun run;
    for (const auto& obs : scenario.observations) {
        run.observation_results.push_back(app.record_state(obs.position, obs.state));
        run.state_map[obs.position] = obs.state;
    }
    run.observations_done = app.memory().next_start();
    for (const auto& query : scenario.queries) {
        QueryAnswer answer;
        answer.states = query.states;
        answer.positions = app.query_positions(query.states);
        answer.start = app.last_result().start;
        answer.answer_step = answer.start + app.memory().contract().recall_latency;
        answer.valid = app.last_result().valid;
        run.answers.push_back(std::move(answer));
    }
    run.raster = app.memory().finish();
    return run;
}

}  // namespace ca3cam::gridmap
