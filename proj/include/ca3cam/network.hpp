#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ca3cam/index_set.hpp"
#include "ca3cam/neuron.hpp"
#include "ca3cam/raster.hpp"
#include "ca3cam/stdp.hpp"

namespace ca3cam::snn {

enum class PopulationKind { spike_source, lif };

struct PopulationSpec {
    std::string name;
    std::size_t size = 1;
    PopulationKind kind = PopulationKind::lif;
    NeuronParams params{};
    bool record = true;
};

namespace connect {
struct OneToOne {};
struct AllToAll {
    bool include_self = true;
};
struct AllToOne {};
struct OneToAll {};
struct ExplicitPairs {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
}  // namespace connect

using Connectivity =
    std::variant<connect::OneToOne, connect::AllToAll, connect::AllToOne, connect::OneToAll, connect::ExplicitPairs>;

/// Fixed-weight synapse group. The sign of `weight` decides excitation or inhibition.
struct StaticProjection {
    std::string pre;
    std::string post;
    Connectivity pattern;
    double weight = 1.0;
    Step delay = 1;
};

/// All-to-all synapse group whose weights follow an STDP rule.
struct PlasticProjection {
    std::string pre;
    std::string post;
    Step delay = 1;
    StdpRule rule{};
};

struct PlasticId {
    std::uint32_t value = 0;
};

/// Scheduled firing of spike-source neurons.
struct Stimulus {
    Step step = 0;
    std::string population;
    IndexSet neurons;
};

struct StimulusSchedule {
    std::vector<Stimulus> entries;

    void append(const StimulusSchedule& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
};

/// Dense row-major pre x post weight snapshot.
struct WeightMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    double at(std::size_t pre, std::size_t post) const { return values[pre * cols + post]; }

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

/// Synapse-level delivery counters.
struct DeliveryStats {
    std::uint64_t enqueued = 0;   ///< out-degree summed over every fire
    std::uint64_t delivered = 0;  ///< synaptic events applied to a target
};

/**
 * Synchronous discrete-time spiking network.
 *
 * Topology is fixed at construction; the object then owns all mutable
 * state (potentials, refractoriness, plastic weights, in-flight spikes).
 * A spike fired at step t reaches its targets at t + delay, and plastic
 * synapses contribute the weight they hold at arrival time. STDP runs at the
 * end of each step once every firing of that step is known.
 *
 * Copies are independent simulations.
 */
class Network {
public:
    Network(std::vector<PopulationSpec> populations, std::vector<StaticProjection> statics,
            std::vector<PlasticProjection> plastics);

    /// The next step `step()` will simulate.
    Step current_step() const { return now_; }

    /// Simulates one step with the given spike-source firings (all for the
    /// current step) and returns every firing of that step.
    std::vector<SpikeEvent> step(std::span<const Stimulus> stimuli = {});

    /// Simulates from `current_step()` through `until` inclusive and returns
    /// the firings of recorded populations.
    Raster run(const StimulusSchedule& schedule, Step until);

    std::uint32_t population(std::string_view name) const;
    const PopulationSpec& population_spec(std::uint32_t id) const { return populations_.at(id).spec; }
    std::size_t population_count() const { return populations_.size(); }
    std::vector<std::string> population_names() const;

    std::size_t plastic_count() const { return plastics_.size(); }
    WeightMatrix weights(PlasticId id) const;
    double potential(std::uint32_t population, std::size_t neuron) const;
    std::size_t out_degree(std::uint32_t population, std::size_t neuron) const;
    std::size_t static_projection_count() const { return statics_.size(); }
    const DeliveryStats& delivery_stats() const { return stats_; }

private:
    struct PopulationState {
        PopulationSpec spec;
        std::vector<double> potential;
        std::vector<Step> last_fire;  // kNever when the neuron has not fired
        std::vector<std::size_t> out_degree;
    };
    struct StaticGroup {
        std::uint32_t pre;
        std::uint32_t post;
        double weight;
        Step delay;
        std::vector<std::size_t> offsets;  // CSR over presynaptic neurons
        std::vector<std::size_t> targets;
    };
    struct PlasticGroup {
        std::uint32_t pre;
        std::uint32_t post;
        Step delay;
        StdpRule rule;
        std::size_t cols;
        std::vector<double> weights;
    };
    struct HistorySlot {
        Step step = -1;
        std::vector<std::uint32_t> fired;
    };

    static constexpr Step kNever = std::numeric_limits<Step>::min();

    const HistorySlot* fired_at(std::uint32_t population, Step t) const;

    std::vector<PopulationState> populations_;
    std::vector<StaticGroup> statics_;
    std::vector<PlasticGroup> plastics_;
    std::vector<std::vector<HistorySlot>> history_;  // ring per population
    Step ring_ = 1;
    Step now_ = 0;
    DeliveryStats stats_;
    std::vector<std::vector<double>> input_;  // scratch, per population
};

inline Network build_network(std::vector<PopulationSpec> populations, std::vector<StaticProjection> statics,
                             std::vector<PlasticProjection> plastics) {
    return Network(std::move(populations), std::move(statics), std::move(plastics));
}

}  // namespace ca3cam::snn
