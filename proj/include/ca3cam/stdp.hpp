#pragma once

#include <optional>

#include "ca3cam/neuron.hpp"

namespace ca3cam::snn {

/**
 * Pair-based, pre-centric nearest-neighbour STDP.
 *
 * The rule is evaluated once per synapse whenever its presynaptic neuron
 * fires, at the end of that step, against the most recent postsynaptic
 * firing (same-step firings included). A coincident post spike potentiates
 * by `a_plus`; a post spike 1..`depression_window` steps earlier depresses
 * by `a_minus`. Everything else leaves the weight alone.
 */
struct StdpRule {
    double a_plus = 0.6;
    double a_minus = 1.2;
    double w_init = 0.0;
    double w_min = 0.0;
    double w_max = 1.2;
    int depression_window = 3;

    void validate() const;

    friend bool operator==(const StdpRule&, const StdpRule&) = default;
};

double stdp_on_pre(Step t_pre, std::optional<Step> last_post, double weight, const StdpRule& rule);

}  // namespace ca3cam::snn
