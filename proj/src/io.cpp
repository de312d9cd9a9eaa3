#include "ca3cam/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ca3cam::io {

using nlohmann::json;

void write_raster_csv(std::ostream& out, const snn::Raster& raster) {
    out << "step,population,neuron\n";
    for (const auto& e : raster.events)
        out << e.step << ',' << raster.population_names.at(e.population) << ',' << e.neuron << '\n';
}

snn::Raster read_raster_csv(std::istream& in, const std::vector<std::string>& population_names) {
    snn::Raster raster;
    raster.population_names = population_names;
    std::string line;
    if (!std::getline(in, line) || line != "step,population,neuron")
        throw std::invalid_argument("raster CSV must start with 'step,population,neuron'");
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string step, population, neuron;
        if (!std::getline(fields, step, ',') || !std::getline(fields, population, ',') ||
            !std::getline(fields, neuron))
            throw std::invalid_argument("raster CSV line " + std::to_string(number) + " is malformed");
        raster.events.push_back({std::stoll(step), raster.population_index(population),
                                 static_cast<std::uint32_t>(std::stoul(neuron))});
    }
    if (!snn::is_well_formed(raster)) throw std::invalid_argument("raster CSV is not sorted");
    return raster;
}

json raster_to_json(const snn::Raster& raster) {
    json events = json::array();
    for (const auto& e : raster.events)
        events.push_back({{"step", e.step}, {"population", raster.population_names.at(e.population)},
                          {"neuron", e.neuron}});
    return events;
}

json to_json(const OperationResult& r) {
    json out = {
        {"kind", to_string(r.kind)},
        {"start", r.start},
        {"echo", {{"cues", r.echo.cues}, {"content", r.echo.content}}},
        {"valid", r.valid},
    };
    if (r.kind == OperationKind::learn)
        out["forgotten"] = r.forgotten;
    else if (r.kind == OperationKind::recall_by_cue)
        out["content"] = r.answer;
    else
        out["cues"] = r.answer;
    if (!r.issues.empty()) out["issues"] = r.issues;
    return out;
}

json to_json(const CamParams& p) {
    json out = {
        {"threshold", p.neuron.threshold},
        {"decay", p.neuron.decay},
        {"refractory_steps", p.neuron.refractory_steps},
        {"reset_potential", p.neuron.reset_potential},
        {"floor_potential", p.neuron.floor_potential},
        {"a_plus", p.stdp.a_plus},
        {"a_minus", p.stdp.a_minus},
        {"w_init", p.stdp.w_init},
        {"w_min", p.stdp.w_min},
        {"w_max", p.stdp.w_max},
        {"depression_window", p.stdp.depression_window},
        {"relay_weight", p.relay_weight},
        {"gate_inhibition", p.gate_inhibition},
        {"gate_release", p.gate_release},
    };
    if (p.cue_inhibition) out["cue_inhibition"] = *p.cue_inhibition;
    return out;
}

namespace {

double to_double(const std::string& key, const std::string& text) {
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument("parameter " + key + ": '" + text + "' is not a number");
    return value;
}

int to_int(const std::string& key, const std::string& text) {
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument("parameter " + key + ": '" + text + "' is not an integer");
    return value;
}

}  // namespace

void apply_param(CamParams& p, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter override must be key=value: " + assignment);
    const auto key = assignment.substr(0, eq);
    const auto value = assignment.substr(eq + 1);
    if (key == "threshold") p.neuron.threshold = to_double(key, value);
    else if (key == "decay") p.neuron.decay = to_double(key, value);
    else if (key == "refractory_steps") p.neuron.refractory_steps = to_int(key, value);
    else if (key == "reset_potential") p.neuron.reset_potential = to_double(key, value);
    else if (key == "floor_potential") p.neuron.floor_potential = to_double(key, value);
    else if (key == "a_plus") p.stdp.a_plus = to_double(key, value);
    else if (key == "a_minus") p.stdp.a_minus = to_double(key, value);
    else if (key == "w_init") p.stdp.w_init = to_double(key, value);
    else if (key == "w_min") p.stdp.w_min = to_double(key, value);
    else if (key == "w_max") p.stdp.w_max = to_double(key, value);
    else if (key == "depression_window") p.stdp.depression_window = to_int(key, value);
    else if (key == "relay_weight") p.relay_weight = to_double(key, value);
    else if (key == "gate_inhibition") p.gate_inhibition = to_double(key, value);
    else if (key == "gate_release") p.gate_release = to_double(key, value);
    else if (key == "cue_inhibition") p.cue_inhibition = to_double(key, value);
    else throw std::invalid_argument("unknown parameter '" + key + "'");
}

Script parse_script(std::istream& in) {
    Script script;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(w);
        if (tokens.empty()) continue;

        std::optional<Step> start;
        if (tokens.back().front() == '@') {
            const auto text = tokens.back().substr(1);
            Step value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || value < 0)
                throw ScriptError(line, "bad start '" + tokens.back() + "'");
            start = value;
            tokens.pop_back();
        }

        const auto& verb = tokens[0];
        try {
            Operation op;
            if (verb == "learn") {
                if (tokens.size() != 3) throw ScriptError(line, "expected 'learn <cue> <content>'");
                op = encode_operation(OperationKind::learn, parse_index_list(tokens[1]), parse_index_list(tokens[2]));
            } else if (verb == "rcue") {
                if (tokens.size() != 2) throw ScriptError(line, "expected 'rcue <cue>'");
                op = encode_operation(OperationKind::recall_by_cue, parse_index_list(tokens[1]), {});
            } else if (verb == "rcont") {
                if (tokens.size() != 2) throw ScriptError(line, "expected 'rcont <content>'");
                op = encode_operation(OperationKind::recall_by_content, {}, parse_index_list(tokens[1]));
            } else {
                throw ScriptError(line, "unknown operation '" + verb + "'");
            }
            op.start = start;
            script.ops.push_back(std::move(op));
            script.lines.push_back(line);
        } catch (const ScriptError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ScriptError(line, e.what());
        }
    }
    return script;
}

CompiledProgram compile_script(const Script& script, const CamConfig& config, const TimingContract& contract) {
    try {
        return compile(script.ops, config, contract);
    } catch (const OperationError& e) {
        throw ScriptError(script.lines.at(e.index()), e.what());
    }
}

}  // namespace ca3cam::io
