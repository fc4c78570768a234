#pragma once

#include "hamclass/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace hamclass {

inline constexpr int kMaxGeneratedOrder = 10;

struct GenerationConstraints {
    /// Applied during augmentation: degrees only grow as vertices are added.
    std::optional<int> max_degree;
    /// Applied to completed graphs only.
    std::optional<int> min_degree;
    std::optional<int> min_connectivity;
};

/// Streams one representative of every isomorphism class of connected graphs
/// of order n (1 <= n <= 10) meeting the constraints. Graphs are built by
/// canonical augmentation: a new vertex is accepted only when it lies in the
/// canonically chosen orbit of minimum-degree vertices, so no class repeats.
/// Throws GeneratorSize for n outside [1, 10].
void generate_small(int n, const GenerationConstraints &constraints, const std::function<void(const Graph &)> &visit);

std::vector<Graph> generate_small(int n, const GenerationConstraints &constraints = {});

} // namespace hamclass
