#pragma once

#include <cstdint>

namespace ca3cam::snn {

/// Simulation time in whole steps.
using Step = std::int64_t;

/**
 * Discrete leaky integrate-and-fire constants.
 *
 * Each step the membrane potential decays multiplicatively, then the summed
 * synaptic input of that step is added. A neuron fires when the result
 * reaches `threshold` (equality fires) and it is not refractory; it then
 * resets and stays refractory for `refractory_steps` steps, during which it
 * keeps integrating input but cannot fire. Potentials never drop below
 * `floor_potential`.
 */
struct NeuronParams {
    double threshold = 1.0;
    double decay = 0.5;
    int refractory_steps = 1;
    double reset_potential = 0.0;
    double floor_potential = 0.0;

    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;

    friend bool operator==(const NeuronParams&, const NeuronParams&) = default;
};

struct LifUpdate {
    double potential;
    bool fired;
};

/// One step of the LIF recurrence for a single neuron.
LifUpdate lif_update(const NeuronParams& params, double previous, double input, bool refractory);

}  // namespace ca3cam::snn
