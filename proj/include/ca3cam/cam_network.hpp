#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ca3cam/index_set.hpp"
#include "ca3cam/network.hpp"

namespace ca3cam {

using snn::Step;

/// Population names of the CAM network.
namespace pop {
inline constexpr const char* kInput = "Input";
inline constexpr const char* kS1Cue = "S1Cue";
inline constexpr const char* kS1Cont = "S1Cont";
inline constexpr const char* kS2Int = "S2Int";
inline constexpr const char* kS2Cond = "S2Cond";
inline constexpr const char* kS2Cue = "S2Cue";
inline constexpr const char* kS2Cont = "S2Cont";
inline constexpr const char* kMergeCue = "MergeCue";
inline constexpr const char* kMergeCont = "MergeCont";
inline constexpr const char* kOutput = "Output";
}  // namespace pop

/// Weights and dynamics of the CAM. Defaults are the reference parameterization.
struct CamParams {
    snn::NeuronParams neuron{};
    snn::StdpRule stdp{};
    double relay_weight = 1.0;
    /// Magnitude of the delayed S1Cue -> S2Cond inhibition.
    double gate_inhibition = 0.5;
    /// S2Int -> S2Cond excitation; cancels the gate inhibition during learning.
    double gate_release = 0.5;
    /// Magnitude of the S2Cue recurrent inhibition; cont_size * w_max when unset.
    std::optional<double> cue_inhibition;

    friend bool operator==(const CamParams&, const CamParams&) = default;
};

struct CamConfig {
    std::size_t cue_count = 5;
    std::size_t cont_size = 10;
    CamParams params{};

    std::size_t width() const { return cue_count + cont_size; }
    double cue_inhibition() const;
    void validate() const;
};

struct CamWiring {
    std::vector<snn::PopulationSpec> populations;
    std::vector<snn::StaticProjection> statics;
    std::vector<snn::PlasticProjection> plastics;  // [0] S1Cue=>S1Cont, [1] S2Cont=>S2Cue
};

/// The full population and projection table for a configuration.
CamWiring cam_wiring(const CamConfig& config);

/**
 * The CA3-style content-addressable memory network.
 *
 * Input and Output are `cue_count + cont_size` wide: index i < cue_count is
 * cue neuron i, index i >= cue_count is content neuron i - cue_count.
 */
class CamNetwork {
public:
    explicit CamNetwork(CamConfig config);

    const CamConfig& config() const { return config_; }
    snn::Network& network() { return network_; }
    const snn::Network& network() const { return network_; }

    static constexpr snn::PlasticId kCueToContent{0};
    static constexpr snn::PlasticId kContentToCue{1};

    /// Fires `input_neurons` of the Input population at start .. start+repeat-1.
    snn::StimulusSchedule inject(Step start, const IndexSet& input_neurons, int repeat) const;

private:
    CamConfig config_;
    snn::Network network_;
};

inline CamNetwork build_cam(CamConfig config) { return CamNetwork(std::move(config)); }

/// Input firings for `input_neurons` at start .. start+repeat-1 on a memory of `width` neurons.
snn::StimulusSchedule input_schedule(std::size_t width, Step start, const IndexSet& input_neurons, int repeat);

/// Output population firings grouped by step, one entry per step of [first, last].
std::map<Step, IndexSet> read_output(const snn::Raster& raster, Step first, Step last);

/// Splits Output / Input indices into the cue and content regions.
struct MemoryFrame {
    IndexSet cues;
    IndexSet content;

    friend bool operator==(const MemoryFrame&, const MemoryFrame&) = default;
};
MemoryFrame split_frame(const IndexSet& neurons, std::size_t cue_count);
IndexSet join_frame(const MemoryFrame& frame, std::size_t cue_count);

}  // namespace ca3cam
