#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ca3cam/cam_network.hpp"
#include "ca3cam/memory_ops.hpp"
#include "ca3cam/raster.hpp"

namespace ca3cam::io {

// Raster CSV: header `step,population,neuron`, one event per line in raster order.
void write_raster_csv(std::ostream& out, const snn::Raster& raster);
snn::Raster read_raster_csv(std::istream& in, const std::vector<std::string>& population_names);

// Raster JSON: array of {"step", "population", "neuron"} objects, same order.
nlohmann::json raster_to_json(const snn::Raster& raster);

nlohmann::json to_json(const OperationResult& result);
nlohmann::json to_json(const CamParams& params);

/// Applies a `key=value` override to `params`; throws std::invalid_argument
/// for unknown keys or malformed values.
void apply_param(CamParams& params, const std::string& assignment);

class ScriptError : public std::runtime_error {
public:
    ScriptError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct Script {
    std::vector<Operation> ops;
    std::vector<std::size_t> lines;  ///< source line of each operation
};

/**
 * Operation script, one operation per line:
 *
 *     learn <cue> <content>     e.g. `learn 0 0,1,8,9`
 *     rcue <cue>
 *     rcont <content>
 *
 * Indices are comma separated. A trailing `@<step>` fixes the start step.
 * `#` starts a comment.
 */
Script parse_script(std::istream& in);

/// Compiles `script`, reporting operation errors against their source line.
CompiledProgram compile_script(const Script& script, const CamConfig& config, const TimingContract& contract = {});

}  // namespace ca3cam::io
