#pragma once

// Ordered sets of neuron / cue / content indices.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace ca3cam {

using IndexSet = std::set<std::size_t>;

/// True when the two sets share at least one element.
bool intersects(const IndexSet& a, const IndexSet& b);

/// Elements of `a` that are not in `b`.
IndexSet difference(const IndexSet& a, const IndexSet& b);

/// Renders as "{0,1,8,9}".
std::string to_string(const IndexSet& set);

/// Parses a comma-separated list such as "0,1,8,9". Throws std::invalid_argument
/// on malformed tokens or an empty list.
IndexSet parse_index_list(std::string_view text);

/// {0, 1, ..., n-1}
IndexSet iota_set(std::size_t n);

}  // namespace ca3cam
