#include "ca3cam/neuron.hpp"

#include <algorithm>
#include <stdexcept>

#include "ca3cam/stdp.hpp"

namespace ca3cam::snn {

void NeuronParams::validate() const {
    if (!(decay >= 0.0 && decay <= 1.0)) throw std::invalid_argument("neuron decay must lie in [0, 1]");
    if (!(floor_potential <= reset_potential)) throw std::invalid_argument("floor potential exceeds reset potential");
    if (!(reset_potential < threshold)) throw std::invalid_argument("reset potential must be below threshold");
    if (refractory_steps < 0) throw std::invalid_argument("refractory steps must be non-negative");
}

LifUpdate lif_update(const NeuronParams& params, double previous, double input, bool refractory) {
    const double raw = params.decay * previous + input;
    if (!refractory && raw >= params.threshold) return {params.reset_potential, true};
    return {std::max(params.floor_potential, raw), false};
}

void StdpRule::validate() const {
    if (!(w_min <= w_init && w_init <= w_max)) throw std::invalid_argument("STDP weights must satisfy w_min <= w_init <= w_max");
    if (!(a_plus > 0.0)) throw std::invalid_argument("STDP a_plus must be positive");
    if (!(a_minus > 0.0)) throw std::invalid_argument("STDP a_minus must be positive");
    if (depression_window < 1) throw std::invalid_argument("STDP depression window must be at least 1 step");
}

double stdp_on_pre(Step t_pre, std::optional<Step> last_post, double weight, const StdpRule& rule) {
    if (!last_post) return weight;
    const Step distance = t_pre - *last_post;
    if (distance == 0) return std::min(weight + rule.a_plus, rule.w_max);
    if (distance >= 1 && distance <= rule.depression_window) return std::max(weight - rule.a_minus, rule.w_min);
    return weight;
}

}  // namespace ca3cam::snn
