#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ca3cam/cam_network.hpp"
#include "ca3cam/memory_ops.hpp"
#include "ca3cam/raster.hpp"

namespace ca3cam::testbench {

// ---------------------------------------------------------------------------
// Operation demo: 5 cues x 10 content neurons, nine operations 10 steps apart.
// ---------------------------------------------------------------------------

struct GoldenEvent {
    Step step = 0;
    std::string population;
    IndexSet neurons;  ///< exact set of neurons of `population` firing at `step`
};

/// Hand-entered firings that the demo must reproduce verbatim.
const std::vector<GoldenEvent>& golden_anchors();

/// The complete demo raster, generated once and frozen.
snn::Raster golden_raster();

/// The nine demo operations with their explicit starts (0, 10, ..., 80).
std::vector<Operation> operation_demo_ops();

inline constexpr Step kDemoUntil = 86;

struct Verdict {
    bool passed = true;
    std::vector<std::string> mismatches;

    void fail(std::string why) {
        passed = false;
        mismatches.push_back(std::move(why));
    }
};

struct DemoRun {
    snn::Raster raster;
    std::vector<OperationResult> results;
    Verdict verdict;
};

DemoRun run_operation_demo(const CamParams& params = {});

// ---------------------------------------------------------------------------
// MemTest86-style sweeps.
// ---------------------------------------------------------------------------

/// Content bits of `value` in binary (bit k set -> content neuron k).
IndexSet binary_content(std::uint64_t value, std::size_t cont_size);

struct MemtestCheck {
    std::size_t sweep = 0;  ///< 1-based
    OperationKind kind = OperationKind::learn;
    std::size_t target = 0;  ///< cue (learn, recall by cue) or content bit (recall by content)
    IndexSet expected;       ///< answer, or forgotten content for learns
    OperationResult result;
    bool passed = false;
};

struct MemtestReport {
    std::size_t cue_count = 0;
    std::size_t cont_size = 0;
    std::vector<MemtestCheck> checks;
    std::size_t learns = 0;
    std::size_t forgetting_learns = 0;
    std::size_t recalls_by_cue = 0;
    std::size_t recalls_by_content = 0;
    Step total_steps = 0;
    bool sweep3_matches_sweep1 = false;
    std::vector<std::string> mismatches;
    snn::Raster raster;

    std::size_t operations() const { return learns + recalls_by_cue + recalls_by_content; }
    bool passed() const { return mismatches.empty() && sweep3_matches_sweep1; }
    /// Recall answers of one sweep, in execution order.
    std::vector<IndexSet> recall_table(std::size_t sweep) const;
};

/// Throws std::invalid_argument when the binary encoding (or its complement)
/// cannot be represented in `cont_size` bits.
MemtestReport run_memtest(const CamConfig& config);

// ---------------------------------------------------------------------------
// Randomized equivalence against the reference oracle.
// ---------------------------------------------------------------------------

/// Seeded stream of valid operations with heavily overlapping contents.
std::vector<Operation> random_operations(std::uint64_t seed, std::size_t n_ops, const CamConfig& config);

struct StressReport {
    std::uint64_t seed = 0;
    std::size_t n_ops = 0;
    std::size_t cue_count = 0;
    std::size_t cont_size = 0;
    std::size_t divergences = 0;
    std::optional<std::size_t> first_divergence;
    std::vector<Operation> failing_prefix;
    std::string detail;
    Step total_steps = 0;

    bool passed() const { return divergences == 0; }
};

StressReport run_random_stress(std::uint64_t seed, std::size_t n_ops, const CamConfig& config);

/// Empty string when `actual` decodes to the same outcome as `expected`.
std::string compare_results(const OperationResult& actual, const OperationResult& expected);

}  // namespace ca3cam::testbench
