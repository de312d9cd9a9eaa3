#include "ca3cam/network.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ca3cam::snn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Expands a connectivity pattern into (pre -> posts) adjacency lists.
std::vector<std::vector<std::size_t>> expand(const Connectivity& pattern, std::size_t pre_size, std::size_t post_size,
                                             bool same_population, const std::string& label) {
    std::vector<std::vector<std::size_t>> adjacency(pre_size);
    auto mismatch = [&](const char* why) {
        return std::invalid_argument("projection " + label + ": " + why + " (pre size " + std::to_string(pre_size) +
                                     ", post size " + std::to_string(post_size) + ")");
    };
    std::visit(overloaded{
                   [&](const connect::OneToOne&) {
                       if (pre_size != post_size) throw mismatch("one-to-one needs equal sizes");
                       for (std::size_t i = 0; i < pre_size; ++i) adjacency[i].push_back(i);
                   },
                   [&](const connect::AllToAll& all) {
                       for (std::size_t i = 0; i < pre_size; ++i)
                           for (std::size_t j = 0; j < post_size; ++j)
                               if (all.include_self || !same_population || i != j) adjacency[i].push_back(j);
                   },
                   [&](const connect::AllToOne&) {
                       if (post_size != 1) throw mismatch("all-to-one needs a single post neuron");
                       for (auto& targets : adjacency) targets.push_back(0);
                   },
                   [&](const connect::OneToAll&) {
                       if (pre_size != 1) throw mismatch("one-to-all needs a single pre neuron");
                       for (std::size_t j = 0; j < post_size; ++j) adjacency[0].push_back(j);
                   },
                   [&](const connect::ExplicitPairs& explicit_pairs) {
                       for (auto [i, j] : explicit_pairs.pairs) {
                           if (i >= pre_size || j >= post_size) throw mismatch("explicit pair out of range");
                           adjacency[i].push_back(j);
                       }
                   },
               },
               pattern);
    return adjacency;
}

}  // namespace

Network::Network(std::vector<PopulationSpec> populations, std::vector<StaticProjection> statics,
                 std::vector<PlasticProjection> plastics) {
    std::map<std::string, std::uint32_t, std::less<>> ids;
    for (auto& spec : populations) {
        if (spec.size == 0) throw std::invalid_argument("population '" + spec.name + "' is empty");
        if (spec.kind == PopulationKind::lif) spec.params.validate();
        if (!ids.emplace(spec.name, static_cast<std::uint32_t>(populations_.size())).second)
            throw std::invalid_argument("duplicate population '" + spec.name + "'");
        PopulationState state;
        state.potential.assign(spec.size, spec.params.reset_potential);
        state.last_fire.assign(spec.size, kNever);
        state.out_degree.assign(spec.size, 0);
        state.spec = std::move(spec);
        populations_.push_back(std::move(state));
    }

    auto lookup = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it == ids.end()) throw std::invalid_argument("unknown population '" + name + "'");
        return it->second;
    };
    auto check_target = [&](std::uint32_t post, const std::string& label) {
        if (populations_[post].spec.kind == PopulationKind::spike_source)
            throw std::invalid_argument("projection " + label + " targets a spike source");
    };

    Step max_delay = 1;
    for (const auto& proj : statics) {
        const std::string label = proj.pre + "->" + proj.post;
        const auto pre = lookup(proj.pre);
        const auto post = lookup(proj.post);
        check_target(post, label);
        if (proj.delay < 1) throw std::invalid_argument("projection " + label + ": delay must be at least 1");
        auto adjacency = expand(proj.pattern, populations_[pre].spec.size, populations_[post].spec.size, pre == post,
                                label);
        StaticGroup group{pre, post, proj.weight, proj.delay, {0}, {}};
        for (std::size_t i = 0; i < adjacency.size(); ++i) {
            group.targets.insert(group.targets.end(), adjacency[i].begin(), adjacency[i].end());
            group.offsets.push_back(group.targets.size());
            populations_[pre].out_degree[i] += adjacency[i].size();
        }
        max_delay = std::max(max_delay, proj.delay);
        statics_.push_back(std::move(group));
    }
    for (const auto& proj : plastics) {
        const std::string label = proj.pre + "=>" + proj.post;
        const auto pre = lookup(proj.pre);
        const auto post = lookup(proj.post);
        check_target(post, label);
        if (proj.delay < 1) throw std::invalid_argument("projection " + label + ": delay must be at least 1");
        proj.rule.validate();
        const auto rows = populations_[pre].spec.size;
        const auto cols = populations_[post].spec.size;
        for (auto& degree : populations_[pre].out_degree) degree += cols;
        max_delay = std::max(max_delay, proj.delay);
        plastics_.push_back(PlasticGroup{pre, post, proj.delay, proj.rule, cols,
                                         std::vector<double>(rows * cols, proj.rule.w_init)});
    }

    ring_ = max_delay + 1;
    history_.assign(populations_.size(), std::vector<HistorySlot>(static_cast<std::size_t>(ring_)));
    input_.resize(populations_.size());
    for (std::size_t p = 0; p < populations_.size(); ++p) input_[p].assign(populations_[p].spec.size, 0.0);
}

std::uint32_t Network::population(std::string_view name) const {
    for (std::uint32_t p = 0; p < populations_.size(); ++p)
        if (populations_[p].spec.name == name) return p;
    throw std::out_of_range("unknown population '" + std::string(name) + "'");
}

std::vector<std::string> Network::population_names() const {
    std::vector<std::string> names;
    names.reserve(populations_.size());
    for (const auto& pop : populations_) names.push_back(pop.spec.name);
    return names;
}

WeightMatrix Network::weights(PlasticId id) const {
    if (id.value >= plastics_.size()) throw std::out_of_range("unknown plastic projection");
    const auto& group = plastics_[id.value];
    return WeightMatrix{populations_[group.pre].spec.size, group.cols, group.weights};
}

double Network::potential(std::uint32_t population, std::size_t neuron) const {
    return populations_.at(population).potential.at(neuron);
}

std::size_t Network::out_degree(std::uint32_t population, std::size_t neuron) const {
    return populations_.at(population).out_degree.at(neuron);
}

const Network::HistorySlot* Network::fired_at(std::uint32_t population, Step t) const {
    if (t < 0) return nullptr;
    const auto& slot = history_[population][static_cast<std::size_t>(t % ring_)];
    return slot.step == t ? &slot : nullptr;
}

std::vector<SpikeEvent> Network::step(std::span<const Stimulus> stimuli) {
    const Step t = now_;

    for (auto& buffer : input_) std::fill(buffer.begin(), buffer.end(), 0.0);

    for (const auto& group : statics_) {
        const auto* slot = fired_at(group.pre, t - group.delay);
        if (!slot) continue;
        auto& input = input_[group.post];
        for (auto i : slot->fired) {
            for (auto k = group.offsets[i]; k < group.offsets[i + 1]; ++k) input[group.targets[k]] += group.weight;
            stats_.delivered += group.offsets[i + 1] - group.offsets[i];
        }
    }
    for (const auto& group : plastics_) {
        const auto* slot = fired_at(group.pre, t - group.delay);
        if (!slot) continue;
        auto& input = input_[group.post];
        for (auto i : slot->fired) {
            const double* row = group.weights.data() + i * group.cols;
            for (std::size_t j = 0; j < group.cols; ++j) input[j] += row[j];
            stats_.delivered += group.cols;
        }
    }

    std::vector<std::vector<std::uint32_t>> fired(populations_.size());
    for (const auto& stimulus : stimuli) {
        if (stimulus.step != t)
            throw std::invalid_argument("stimulus for step " + std::to_string(stimulus.step) + " applied at step " +
                                        std::to_string(t));
        const auto p = population(stimulus.population);
        if (populations_[p].spec.kind != PopulationKind::spike_source)
            throw std::invalid_argument("stimulus targets non-source population '" + stimulus.population + "'");
        for (auto n : stimulus.neurons) {
            if (n >= populations_[p].spec.size)
                throw std::out_of_range("stimulus neuron " + std::to_string(n) + " outside '" + stimulus.population +
                                        "'");
            fired[p].push_back(static_cast<std::uint32_t>(n));
        }
    }

    for (std::uint32_t p = 0; p < populations_.size(); ++p) {
        auto& pop = populations_[p];
        if (pop.spec.kind == PopulationKind::spike_source) {
            std::sort(fired[p].begin(), fired[p].end());
            fired[p].erase(std::unique(fired[p].begin(), fired[p].end()), fired[p].end());
            continue;
        }
        const auto& params = pop.spec.params;
        for (std::size_t n = 0; n < pop.spec.size; ++n) {
            const bool refractory = pop.last_fire[n] != kNever && t - pop.last_fire[n] <= params.refractory_steps;
            const auto update = lif_update(params, pop.potential[n], input_[p][n], refractory);
            pop.potential[n] = update.potential;
            if (update.fired) fired[p].push_back(static_cast<std::uint32_t>(n));
        }
    }

    std::vector<SpikeEvent> events;
    for (std::uint32_t p = 0; p < populations_.size(); ++p) {
        auto& pop = populations_[p];
        for (auto n : fired[p]) {
            pop.last_fire[n] = t;
            stats_.enqueued += pop.out_degree[n];
            events.push_back({t, p, n});
        }
        auto& slot = history_[p][static_cast<std::size_t>(t % ring_)];
        slot.step = t;
        slot.fired = std::move(fired[p]);
    }

    for (auto& group : plastics_) {
        const auto* slot = fired_at(group.pre, t);
        if (!slot) continue;
        const auto& post_last = populations_[group.post].last_fire;
        for (auto i : slot->fired) {
            double* row = group.weights.data() + i * group.cols;
            for (std::size_t j = 0; j < group.cols; ++j) {
                const auto last = post_last[j] == kNever ? std::nullopt : std::optional<Step>(post_last[j]);
                row[j] = stdp_on_pre(t, last, row[j], group.rule);
            }
        }
    }

    ++now_;
    return events;
}

Raster Network::run(const StimulusSchedule& schedule, Step until) {
    std::map<Step, std::vector<Stimulus>> by_step;
    for (const auto& entry : schedule.entries) {
        if (entry.step < now_)
            throw std::invalid_argument("stimulus at step " + std::to_string(entry.step) + " is in the past");
        if (entry.step > until)
            throw std::invalid_argument("stimulus at step " + std::to_string(entry.step) + " is after run end " +
                                        std::to_string(until));
        const auto p = population(entry.population);
        for (auto n : entry.neurons)
            if (n >= populations_[p].spec.size)
                throw std::out_of_range("stimulus neuron " + std::to_string(n) + " outside '" + entry.population +
                                        "'");
        by_step[entry.step].push_back(entry);
    }

    Raster raster;
    raster.population_names = population_names();
    while (now_ <= until) {
        auto it = by_step.find(now_);
        auto events = it == by_step.end() ? step() : step(it->second);
        for (const auto& event : events)
            if (populations_[event.population].spec.record) raster.events.push_back(event);
    }
    return raster;
}

}  // namespace ca3cam::snn
