#pragma once

#include "hamclass/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hamclass {

/// Isomorphism-invariant encoding of a (vertex-coloured) graph: the adjacency
/// rows under the canonical labelling, preceded by the colour of every position.
struct CanonicalForm {
    int order = 0;
    std::vector<int> colors;
    std::vector<std::uint64_t> rows;

    auto operator<=>(const CanonicalForm &) const = default;
};

struct CanonicalLabelling {
    CanonicalForm form;
    std::vector<Vertex> order; // order[p] = vertex placed at canonical position p
};

/// Canonical labelling by partition refinement and individualisation with
/// automorphism pruning. `colors`, when given, assigns one integer per vertex;
/// only colour-preserving isomorphisms are considered.
CanonicalLabelling canonical_labelling(const Graph &g, std::span<const int> colors = {});

inline CanonicalForm canonical_form(const Graph &g, std::span<const int> colors = {})
{
    return canonical_labelling(g, colors).form;
}

/// Canonical form of g with vertex `v` distinguished from all others.
CanonicalForm rooted_form(const Graph &g, Vertex v);

bool are_isomorphic(const Graph &a, const Graph &b);

/// Graph whose vertex p is old vertex order[p].
Graph relabel(const Graph &g, std::span<const Vertex> order);

} // namespace hamclass
