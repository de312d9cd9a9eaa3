#include "ca3cam/raster.hpp"

#include <algorithm>
#include <stdexcept>

namespace ca3cam::snn {

IndexSet Raster::fired(Step step, std::uint32_t population) const {
    IndexSet out;
    auto lo = std::lower_bound(events.begin(), events.end(), SpikeEvent{step, population, 0});
    for (auto it = lo; it != events.end() && it->step == step && it->population == population; ++it)
        out.insert(out.end(), it->neuron);
    return out;
}

IndexSet Raster::fired(Step step, const std::string& population) const {
    return fired(step, population_index(population));
}

std::uint32_t Raster::population_index(const std::string& name) const {
    auto it = std::find(population_names.begin(), population_names.end(), name);
    if (it == population_names.end()) throw std::out_of_range("raster has no population '" + name + "'");
    return static_cast<std::uint32_t>(it - population_names.begin());
}

void Raster::append(const Raster& later) {
    if (population_names.empty() && events.empty()) population_names = later.population_names;
    if (later.population_names != population_names) throw std::invalid_argument("appending raster of another network");
    if (!events.empty() && !later.events.empty() && !(events.back() < later.events.front()))
        throw std::invalid_argument("appended raster overlaps in time");
    events.insert(events.end(), later.events.begin(), later.events.end());
}

bool is_well_formed(const Raster& raster) {
    return std::adjacent_find(raster.events.begin(), raster.events.end(),
                              [](const SpikeEvent& a, const SpikeEvent& b) { return !(a < b); }) == raster.events.end();
}

}  // namespace ca3cam::snn
