// Randomized kernel properties, including equivalence with a dense
// brute-force re-simulation written independently of Network.

#include <doctest.h>

#include <map>

#include "dense_oracle.hpp"

using namespace ca3cam;
using namespace ca3cam::snn;
using namespace ca3cam::testing;

TEST_SUITE("snn-properties") {

TEST_CASE("dense brute-force re-simulation reproduces raster, potentials and weights") {
    std::size_t total_spikes = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        CAPTURE(seed);
        CHECK(dense_mismatch(seed, &total_spikes) == "");
    }
    CHECK(total_spikes > 1000);  // the generator is not degenerate
}

TEST_CASE("repeat runs are bit-identical") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto r = random_net(seed);
        auto a = build(r), b = build(r);
        CHECK(a.run(r.schedule, r.until) == b.run(r.schedule, r.until));
        for (std::uint32_t k = 0; k < r.plastics.size(); ++k) CHECK(a.weights(PlasticId{k}) == b.weights(PlasticId{k}));
    }
}

TEST_CASE("copies of a network evolve independently") {
    auto r = random_net(7);
    auto a = build(r);
    StimulusSchedule first, rest;
    for (const auto& e : r.schedule.entries) (e.step < 5 ? first : rest).entries.push_back(e);
    a.run(first, 4);
    auto b = a;
    auto ra = a.run(rest, r.until);
    auto rb = b.run(rest, r.until);
    CHECK(ra == rb);

    auto c = b;
    c.run({{{r.until + 1, "src", {0}}}}, r.until + 6);
    auto quiet = b.run({}, r.until + 6);
    CHECK(b.current_step() == c.current_step());
    CHECK(quiet.fired(r.until + 1, "src").empty());
}

TEST_CASE("refractoriness, weight bounds, STDP locality and delivery conservation hold step by step") {
    for (std::uint64_t seed = 100; seed <= 300; ++seed) {
        CAPTURE(seed);
        auto r = random_net(seed);
        auto net = build(r);
        std::map<Step, std::vector<Stimulus>> stim;
        for (const auto& e : r.schedule.entries) stim[e.step].push_back(e);

        std::vector<WeightMatrix> before;
        for (std::uint32_t k = 0; k < r.plastics.size(); ++k) before.push_back(net.weights(PlasticId{k}));
        std::map<std::pair<std::uint32_t, std::uint32_t>, Step> last;
        std::uint64_t expected_enqueued = 0;

        for (Step t = 0; t <= r.until; ++t) {
            auto it = stim.find(t);
            auto events = it == stim.end() ? net.step() : net.step(it->second);
            IndexSet fired_by_pop[8];
            for (const auto& e : events) {
                expected_enqueued += net.out_degree(e.population, e.neuron);
                fired_by_pop[e.population].insert(e.neuron);
                const auto& spec = net.population_spec(e.population);
                auto key = std::make_pair(e.population, e.neuron);
                if (spec.kind == PopulationKind::lif && last.count(key))
                    CHECK(t - last[key] > spec.params.refractory_steps);
                last[key] = t;
            }
            for (std::uint32_t k = 0; k < r.plastics.size(); ++k) {
                auto now = net.weights(PlasticId{k});
                const auto& rule = r.plastics[k].rule;
                const auto pre = net.population(r.plastics[k].pre);
                for (std::size_t i = 0; i < now.rows; ++i)
                    for (std::size_t j = 0; j < now.cols; ++j) {
                        CHECK(now.at(i, j) >= rule.w_min);
                        CHECK(now.at(i, j) <= rule.w_max);
                        if (!fired_by_pop[pre].count(i)) CHECK(now.at(i, j) == before[k].at(i, j));
                    }
                before[k] = now;
            }
        }
        CHECK(net.delivery_stats().enqueued == expected_enqueued);
        // Drain: once the network has been silent longer than the largest
        // delay, every enqueued delivery must have landed exactly once.
        Step quiet = 0;
        for (int k = 0; k < 400; ++k) {
            auto events = net.step();
            quiet = events.empty() ? quiet + 1 : 0;
            for (const auto& e : events) expected_enqueued += net.out_degree(e.population, e.neuron);
        }
        CHECK(net.delivery_stats().enqueued == expected_enqueued);
        if (quiet > 4) CHECK(net.delivery_stats().delivered == expected_enqueued);
    }
}

}  // TEST_SUITE
