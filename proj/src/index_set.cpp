#include "ca3cam/index_set.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <stdexcept>

namespace ca3cam {

bool intersects(const IndexSet& a, const IndexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return false;
}

IndexSet difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::string to_string(const IndexSet& set) {
    std::string out = "{";
    bool first = true;
    for (auto i : set) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

IndexSet parse_index_list(std::string_view text) {
    IndexSet out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = text.substr(pos, comma - pos);
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw std::invalid_argument("malformed index list '" + std::string(text) + "'");
        out.insert(value);
        pos = comma + 1;
    }
    return out;
}

IndexSet iota_set(std::size_t n) {
    IndexSet out;
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), i);
    return out;
}

}  // namespace ca3cam
