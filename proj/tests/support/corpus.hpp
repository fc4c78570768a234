#pragma once

#include "hamclass/generate.hpp"

#include <vector>

namespace corpus {

/// Every connected graph of order 1..max_n, one per isomorphism class.
inline const std::vector<hamclass::Graph> &up_to(int max_n)
{
    static std::vector<std::vector<hamclass::Graph>> cache;
    static int built = 0;
    if (cache.empty()) cache.emplace_back();
    while (built < max_n) {
        ++built;
        std::vector<hamclass::Graph> next = cache.back();
        for (auto &g : hamclass::generate_small(built)) next.push_back(std::move(g));
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(max_n)];
}

} // namespace corpus
