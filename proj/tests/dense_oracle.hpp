#pragma once

// Random small networks and an independent dense re-simulation of them.

#include <map>
#include <optional>
#include <random>
#include <string>

#include "ca3cam/network.hpp"

namespace ca3cam::testing {

using namespace ca3cam::snn;

struct RandomNet {
    std::vector<PopulationSpec> pops;
    std::vector<StaticProjection> statics;
    std::vector<PlasticProjection> plastics;
    StimulusSchedule schedule;
    Step until = 0;
};

// Weights are multiples of 1/4 so every sum is exact regardless of order.
inline RandomNet random_net(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto quarter = [&](int lo, int hi) { return uniform(lo, hi) / 4.0; };

    RandomNet r;
    std::size_t budget = 20;
    const auto src = static_cast<std::size_t>(uniform(1, 4));
    r.pops.push_back({"src", src, PopulationKind::spike_source});
    budget -= src;
    const int lif_pops = uniform(1, 3);
    for (int k = 0; k < lif_pops && budget > 0; ++k) {
        const auto size = static_cast<std::size_t>(uniform(1, static_cast<int>(std::min<std::size_t>(budget, 6))));
        budget -= size;
        NeuronParams params;
        params.refractory_steps = uniform(0, 2);
        r.pops.push_back({"p" + std::to_string(k), size, PopulationKind::lif, params});
    }

    auto pick = [&](std::size_t lo) { return static_cast<std::size_t>(uniform(static_cast<int>(lo), static_cast<int>(r.pops.size()) - 1)); };
    const int n_static = uniform(1, 8);
    for (int k = 0; k < n_static; ++k) {
        const auto pre = pick(0);
        const auto post = pick(1);
        const auto a = r.pops[pre].size, b = r.pops[post].size;
        Connectivity pattern;
        switch (uniform(0, 4)) {
            case 0: pattern = a == b ? Connectivity{connect::OneToOne{}} : Connectivity{connect::AllToAll{}}; break;
            case 1: pattern = connect::AllToAll{uniform(0, 1) == 1}; break;
            case 2: pattern = b == 1 ? Connectivity{connect::AllToOne{}} : Connectivity{connect::AllToAll{}}; break;
            case 3: pattern = a == 1 ? Connectivity{connect::OneToAll{}} : Connectivity{connect::AllToAll{}}; break;
            default: {
                connect::ExplicitPairs pairs;
                const int n = uniform(1, 8);
                for (int i = 0; i < n; ++i)
                    pairs.pairs.emplace_back(uniform(0, static_cast<int>(a) - 1), uniform(0, static_cast<int>(b) - 1));
                pattern = pairs;
            }
        }
        r.statics.push_back({r.pops[pre].name, r.pops[post].name, pattern, quarter(-6, 6), uniform(1, 4)});
    }
    const int n_plastic = uniform(0, 2);
    for (int k = 0; k < n_plastic; ++k) {
        StdpRule rule;
        rule.a_plus = quarter(1, 4);
        rule.a_minus = quarter(1, 4);
        rule.w_max = quarter(4, 6);
        rule.w_init = quarter(0, 2);
        rule.depression_window = uniform(1, 4);
        r.plastics.push_back({r.pops[pick(0)].name, r.pops[pick(1)].name, uniform(1, 3), rule});
    }

    r.until = uniform(10, 49);
    for (Step t = 0; t <= r.until; ++t) {
        IndexSet fired;
        for (std::size_t n = 0; n < src; ++n)
            if (uniform(0, 3) == 0) fired.insert(n);
        if (!fired.empty()) r.schedule.entries.push_back({t, "src", fired});
    }
    return r;
}

// Dense re-simulation over flattened neuron indices. Keeps the full firing
// history and recomputes every input from it each step.
struct DenseOracle {
    struct Synapse {
        std::size_t pre, post;
        double weight;
        Step delay;
    };
    struct Plastic {
        std::size_t pre_base, pre_size, post_base, post_size;
        Step delay;
        StdpRule rule;
        std::vector<double> w;
    };

    std::vector<std::size_t> base;
    std::vector<const PopulationSpec*> owner;  // per flat neuron
    std::vector<Synapse> synapses;
    std::vector<Plastic> plastics;
    std::vector<std::vector<bool>> history;  // history[t][flat]
    std::vector<double> v;
    std::vector<std::optional<Step>> last;

    explicit DenseOracle(const RandomNet& r) {
        std::map<std::string, std::size_t> id;
        std::size_t total = 0;
        for (std::size_t p = 0; p < r.pops.size(); ++p) {
            id[r.pops[p].name] = p;
            base.push_back(total);
            for (std::size_t n = 0; n < r.pops[p].size; ++n) owner.push_back(&r.pops[p]);
            total += r.pops[p].size;
        }
        v.assign(total, 0.0);
        last.assign(total, std::nullopt);
        for (const auto& s : r.statics) {
            const auto a = id[s.pre], b = id[s.post];
            const auto na = r.pops[a].size, nb = r.pops[b].size;
            auto add = [&](std::size_t i, std::size_t j) { synapses.push_back({base[a] + i, base[b] + j, s.weight, s.delay}); };
            if (std::holds_alternative<connect::OneToOne>(s.pattern)) {
                for (std::size_t i = 0; i < na; ++i) add(i, i);
            } else if (auto* all = std::get_if<connect::AllToAll>(&s.pattern)) {
                for (std::size_t i = 0; i < na; ++i)
                    for (std::size_t j = 0; j < nb; ++j)
                        if (all->include_self || a != b || i != j) add(i, j);
            } else if (std::holds_alternative<connect::AllToOne>(s.pattern)) {
                for (std::size_t i = 0; i < na; ++i) add(i, 0);
            } else if (std::holds_alternative<connect::OneToAll>(s.pattern)) {
                for (std::size_t j = 0; j < nb; ++j) add(0, j);
            } else {
                for (auto [i, j] : std::get<connect::ExplicitPairs>(s.pattern).pairs) add(i, j);
            }
        }
        for (const auto& p : r.plastics) {
            const auto a = id[p.pre], b = id[p.post];
            plastics.push_back({base[a], r.pops[a].size, base[b], r.pops[b].size, p.delay, p.rule,
                                std::vector<double>(r.pops[a].size * r.pops[b].size, p.rule.w_init)});
        }
    }

    bool fired_at(Step t, std::size_t n) const { return t >= 0 && t < static_cast<Step>(history.size()) && history[t][n]; }

    std::vector<bool> step(Step t, const std::vector<bool>& stimulated) {
        std::vector<double> input(v.size(), 0.0);
        for (const auto& s : synapses)
            if (fired_at(t - s.delay, s.pre)) input[s.post] += s.weight;
        for (const auto& p : plastics)
            for (std::size_t i = 0; i < p.pre_size; ++i)
                if (fired_at(t - p.delay, p.pre_base + i))
                    for (std::size_t j = 0; j < p.post_size; ++j) input[p.post_base + j] += p.w[i * p.post_size + j];

        std::vector<bool> now(v.size(), false);
        for (std::size_t n = 0; n < v.size(); ++n) {
            const auto& spec = *owner[n];
            if (spec.kind == PopulationKind::spike_source) {
                now[n] = stimulated[n];
                continue;
            }
            const auto& q = spec.params;
            const double raw = q.decay * v[n] + input[n];
            const bool refractory = last[n] && t - *last[n] <= q.refractory_steps;
            if (!refractory && raw >= q.threshold) {
                now[n] = true;
                v[n] = q.reset_potential;
            } else {
                v[n] = raw < q.floor_potential ? q.floor_potential : raw;
            }
        }
        for (std::size_t n = 0; n < v.size(); ++n)
            if (now[n]) last[n] = t;
        history.push_back(now);

        for (auto& p : plastics)
            for (std::size_t i = 0; i < p.pre_size; ++i) {
                if (!now[p.pre_base + i]) continue;
                for (std::size_t j = 0; j < p.post_size; ++j) {
                    auto& w = p.w[i * p.post_size + j];
                    const auto post_last = last[p.post_base + j];
                    if (!post_last) continue;
                    const Step d = t - *post_last;
                    if (d == 0) w = std::min(w + p.rule.a_plus, p.rule.w_max);
                    else if (d >= 1 && d <= p.rule.depression_window) w = std::max(w - p.rule.a_minus, p.rule.w_min);
                }
            }
        return now;
    }
};

inline Network build(const RandomNet& r) { return Network(r.pops, r.statics, r.plastics); }

// Runs both simulators on random_net(seed). Empty string on agreement.
inline std::string dense_mismatch(std::uint64_t seed, std::size_t* spikes = nullptr) {
    auto r = random_net(seed);
    auto net = build(r);
    DenseOracle oracle(r);

    std::map<Step, IndexSet> stim;
    for (const auto& e : r.schedule.entries) stim[e.step] = e.neurons;

    Raster expected;
    expected.population_names = net.population_names();
    for (Step t = 0; t <= r.until; ++t) {
        std::vector<bool> s(oracle.v.size(), false);
        if (auto it = stim.find(t); it != stim.end())
            for (auto n : it->second) s[n] = true;
        auto now = oracle.step(t, s);
        for (std::uint32_t p = 0; p < r.pops.size(); ++p)
            for (std::uint32_t n = 0; n < r.pops[p].size; ++n)
                if (now[oracle.base[p] + n]) expected.events.push_back({t, p, n});
    }

    auto actual = net.run(r.schedule, r.until);
    if (spikes) *spikes += actual.events.size();
    if (actual != expected) return "raster differs";
    for (std::uint32_t p = 0; p < r.pops.size(); ++p)
        for (std::size_t n = 0; n < r.pops[p].size; ++n)
            if (net.potential(p, n) != oracle.v[oracle.base[p] + n]) return "potential differs";
    for (std::uint32_t k = 0; k < r.plastics.size(); ++k)
        if (net.weights(PlasticId{k}).values != oracle.plastics[k].w) return "weights differ";
    return {};
}

}  // namespace ca3cam::testing
