#include "ca3cam/cam_network.hpp"

#include <stdexcept>
#include <utility>

namespace ca3cam {

using snn::PopulationKind;
using snn::PopulationSpec;
using snn::StaticProjection;
namespace connect = snn::connect;

double CamConfig::cue_inhibition() const {
    return params.cue_inhibition.value_or(static_cast<double>(cont_size) * params.stdp.w_max);
}

void CamConfig::validate() const {
    if (cue_count < 1) throw std::invalid_argument("cue_count must be at least 1");
    if (cont_size < 1) throw std::invalid_argument("cont_size must be at least 1");
    params.neuron.validate();
    params.stdp.validate();
}

CamWiring cam_wiring(const CamConfig& config) {
    config.validate();
    const auto cues = config.cue_count;
    const auto cont = config.cont_size;
    const auto& p = config.params;
    const double relay = p.relay_weight;

    auto lif = [&](const char* name, std::size_t size) {
        return PopulationSpec{name, size, PopulationKind::lif, p.neuron, true};
    };

    CamWiring w;
    w.populations = {
        PopulationSpec{pop::kInput, config.width(), PopulationKind::spike_source, {}, true},
        lif(pop::kS1Cue, cues),
        lif(pop::kS1Cont, cont),
        lif(pop::kS2Int, 1),
        lif(pop::kS2Cond, cont),
        lif(pop::kS2Cue, cues),
        lif(pop::kS2Cont, cont),
        lif(pop::kMergeCue, cues),
        lif(pop::kMergeCont, cont),
        lif(pop::kOutput, config.width()),
    };

    connect::ExplicitPairs input_cue, input_cont, merge_cue_out, merge_cont_out;
    for (std::size_t i = 0; i < cues; ++i) {
        input_cue.pairs.emplace_back(i, i);
        merge_cue_out.pairs.emplace_back(i, i);
    }
    for (std::size_t j = 0; j < cont; ++j) {
        input_cont.pairs.emplace_back(cues + j, j);
        merge_cont_out.pairs.emplace_back(j, cues + j);
    }

    const double cue_inhibition = -config.cue_inhibition();
    w.statics = {
        // S1: recall by cue
        StaticProjection{pop::kInput, pop::kS1Cue, input_cue, relay, 1},
        StaticProjection{pop::kInput, pop::kS1Cont, input_cont, relay, 1},
        // S2: recall by content, fed from S1
        StaticProjection{pop::kS1Cue, pop::kS2Cue, connect::OneToOne{}, relay, 2},
        StaticProjection{pop::kS1Cue, pop::kS2Cond, connect::AllToAll{}, -p.gate_inhibition, 2},
        StaticProjection{pop::kS1Cont, pop::kS2Cond, connect::OneToOne{}, relay, 1},
        StaticProjection{pop::kS1Cont, pop::kS2Int, connect::AllToOne{}, relay, 1},
        StaticProjection{pop::kS2Int, pop::kS2Cond, connect::OneToAll{}, p.gate_release, 1},
        StaticProjection{pop::kS2Cond, pop::kS2Cont, connect::OneToOne{}, relay, 1},
        // Recurrent S2Cue collaterals. The one-step group includes self so a
        // learned cue cannot re-fire on its own plastic drive after the
        // second learning presentation.
        StaticProjection{pop::kS2Cue, pop::kS2Cue, connect::AllToAll{true}, cue_inhibition, 1},
        StaticProjection{pop::kS2Cue, pop::kS2Cue, connect::AllToAll{false}, cue_inhibition, 2},
        // Merge
        StaticProjection{pop::kS2Cue, pop::kMergeCue, connect::OneToOne{}, relay, 1},
        StaticProjection{pop::kS1Cue, pop::kMergeCue, connect::OneToOne{}, relay, 3},
        StaticProjection{pop::kS2Cont, pop::kMergeCont, connect::OneToOne{}, relay, 1},
        StaticProjection{pop::kS1Cont, pop::kMergeCont, connect::OneToOne{}, relay, 3},
        StaticProjection{pop::kMergeCue, pop::kOutput, merge_cue_out, relay, 1},
        StaticProjection{pop::kMergeCont, pop::kOutput, merge_cont_out, relay, 1},
    };
    w.plastics = {
        snn::PlasticProjection{pop::kS1Cue, pop::kS1Cont, 1, p.stdp},
        snn::PlasticProjection{pop::kS2Cont, pop::kS2Cue, 1, p.stdp},
    };
    return w;
}

namespace {
snn::Network make_network(const CamConfig& config) {
    auto wiring = cam_wiring(config);
    return snn::build_network(std::move(wiring.populations), std::move(wiring.statics), std::move(wiring.plastics));
}
}  // namespace

CamNetwork::CamNetwork(CamConfig config) : config_(std::move(config)), network_(make_network(config_)) {}

snn::StimulusSchedule CamNetwork::inject(Step start, const IndexSet& input_neurons, int repeat) const {
    return input_schedule(config_.width(), start, input_neurons, repeat);
}

snn::StimulusSchedule input_schedule(std::size_t width, Step start, const IndexSet& input_neurons, int repeat) {
    if (repeat < 1) throw std::invalid_argument("inject repeat must be at least 1");
    if (start < 0) throw std::invalid_argument("inject start must be non-negative");
    for (auto n : input_neurons)
        if (n >= width)
            throw std::out_of_range("input neuron " + std::to_string(n) + " outside memory width " +
                                    std::to_string(width));
    snn::StimulusSchedule schedule;
    for (int k = 0; k < repeat; ++k) schedule.entries.push_back({start + k, pop::kInput, input_neurons});
    return schedule;
}

std::map<Step, IndexSet> read_output(const snn::Raster& raster, Step first, Step last) {
    std::map<Step, IndexSet> out;
    const auto output = raster.population_index(pop::kOutput);
    for (Step t = first; t <= last; ++t) out[t] = raster.fired(t, output);
    return out;
}

MemoryFrame split_frame(const IndexSet& neurons, std::size_t cue_count) {
    MemoryFrame frame;
    for (auto n : neurons) {
        if (n < cue_count)
            frame.cues.insert(n);
        else
            frame.content.insert(n - cue_count);
    }
    return frame;
}

IndexSet join_frame(const MemoryFrame& frame, std::size_t cue_count) {
    IndexSet out = frame.cues;
    for (auto c : frame.content) out.insert(c + cue_count);
    return out;
}

}  // namespace ca3cam
