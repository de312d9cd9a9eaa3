#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ca3cam/cam_network.hpp"
#include "ca3cam/index_set.hpp"

namespace ca3cam {

/// A memory: one-hot cue plus a non-empty content bit set.
struct MemoryPattern {
    std::size_t cue = 0;
    IndexSet content;

    friend bool operator==(const MemoryPattern&, const MemoryPattern&) = default;
};

struct Learn {
    MemoryPattern pattern;
};
struct RecallByCue {
    std::size_t cue = 0;
};
struct RecallByContent {
    IndexSet fragment;
};

enum class OperationKind { learn, recall_by_cue, recall_by_content };

const char* to_string(OperationKind kind);

struct Operation {
    std::variant<Learn, RecallByCue, RecallByContent> body;
    /// Explicit start step; the compiler picks the earliest legal one when unset.
    std::optional<Step> start;

    OperationKind kind() const { return static_cast<OperationKind>(body.index()); }
};

/// Builds an operation from cue-region and content-region bits as they
/// would appear on the Input population. Rejects anything but a single cue
/// bit for Learn / RecallByCue and any cue bit for RecallByContent.
Operation encode_operation(OperationKind kind, const IndexSet& cue_bits, const IndexSet& content_bits);

/// Step costs of each operation.
struct TimingContract {
    int learn_input_repeat = 3;
    Step learn_latency = 7;
    Step learn_next_offset = 7;
    Step recall_latency = 6;
    Step recall_next_offset = 6;
    /// The injected fragment reappears on Output this many steps after start.
    Step echo_offset = 5;

    Step latency(OperationKind kind) const { return kind == OperationKind::learn ? learn_latency : recall_latency; }
    Step next_offset(OperationKind kind) const {
        return kind == OperationKind::learn ? learn_next_offset : recall_next_offset;
    }
    void validate() const;
};

/// Error tied to one operation of a compiled sequence.
class OperationError : public std::invalid_argument {
public:
    OperationError(std::size_t index, const std::string& what)
        : std::invalid_argument("operation " + std::to_string(index) + ": " + what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

struct PlannedOperation {
    Operation op;
    Step start = 0;
};

/// Where to look in an Output raster for each operation's outcome.
struct DecodePlan {
    std::size_t cue_count = 0;
    std::size_t cont_size = 0;
    TimingContract contract{};
    std::vector<PlannedOperation> ops;

    /// Last step any decode window touches (earliest - 1 when there are no ops).
    Step end_step = -1;
    /// Earliest legal start for an operation appended after this plan.
    Step next_start = 0;
};

struct CompiledProgram {
    snn::StimulusSchedule schedule;
    DecodePlan plan;
};

/// Assigns start steps (minimal legal spacing unless given) and produces the
/// Input stimulus schedule. Throws OperationError on invalid operations or
/// spacing violations.
CompiledProgram compile(const std::vector<Operation>& ops, const CamConfig& config,
                        const TimingContract& contract = {}, Step earliest = 0);

struct OperationResult {
    OperationKind kind = OperationKind::learn;
    Step start = 0;
    /// Output at start + echo_offset, split into cue and content regions.
    MemoryFrame echo;
    /// RecallByCue: recalled content. RecallByContent: recalled cues.
    IndexSet answer;
    /// Learn: superseded content that fired at start + latency - 1.
    IndexSet forgotten;
    bool valid = true;
    std::vector<std::string> issues;
};

std::vector<OperationResult> decode(const snn::Raster& raster, const DecodePlan& plan);

/**
 * Drives a CamNetwork one operation at a time under the timing contract.
 *
 * Each call returns as soon as its result is known. The step on which a
 * result appears is also the earliest start of the next operation, so that
 * final step is evaluated on a copy of the network and only committed when
 * the next operation (or `finish`) runs it for real.
 */
class CamMemory {
public:
    explicit CamMemory(CamConfig config, TimingContract contract = {});

    OperationResult learn(const MemoryPattern& pattern);
    OperationResult recall_by_cue(std::size_t cue);
    OperationResult recall_by_content(const IndexSet& fragment);
    OperationResult execute(const Operation& op);

    /// Compiles and runs a whole sequence in one pass.
    std::vector<OperationResult> execute_all(const std::vector<Operation>& ops);

    /// Runs the network through every pending decode window and returns the
    /// committed raster.
    const snn::Raster& finish();

    const snn::Raster& raster() const { return raster_; }
    Step next_start() const { return next_start_; }
    const CamConfig& config() const { return cam_.config(); }
    const TimingContract& contract() const { return contract_; }
    const CamNetwork& cam() const { return cam_; }
    snn::WeightMatrix weights(snn::PlasticId id) const { return cam_.network().weights(id); }

private:
    CamNetwork cam_;
    TimingContract contract_;
    snn::Raster raster_;
    Step next_start_ = 0;
    Step pending_until_ = -1;
};

}  // namespace ca3cam
