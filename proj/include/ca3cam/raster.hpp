#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ca3cam/index_set.hpp"
#include "ca3cam/neuron.hpp"

namespace ca3cam::snn {

struct SpikeEvent {
    Step step = 0;
    std::uint32_t population = 0;
    std::uint32_t neuron = 0;

    friend auto operator<=>(const SpikeEvent&, const SpikeEvent&) = default;
};

/**
 * Recorded firings, sorted by (step, population, neuron) with no duplicates.
 * Population numbers index `population_names`, which follows the declaration
 * order of the network that produced the raster.
 */
struct Raster {
    std::vector<std::string> population_names;
    std::vector<SpikeEvent> events;

    /// Neurons of `population` that fired at `step`.
    IndexSet fired(Step step, std::uint32_t population) const;
    IndexSet fired(Step step, const std::string& population) const;

    /// Index of a population name; throws std::out_of_range if absent.
    std::uint32_t population_index(const std::string& name) const;

    /// Appends a later raster of the same network. Throws if the populations
    /// differ or the result would not stay sorted.
    void append(const Raster& later);

    bool empty() const { return events.empty(); }

    friend bool operator==(const Raster&, const Raster&) = default;
};

/// True when events are strictly increasing (sorted, duplicate free).
bool is_well_formed(const Raster& raster);

}  // namespace ca3cam::snn
