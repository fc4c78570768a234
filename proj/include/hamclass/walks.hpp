#pragma once

#include "hamclass/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hamclass {

/// A cycle given as a cyclic vertex sequence; the closing edge back.front() is implied.
struct CycleWitness {
    std::vector<Vertex> vertices;
    [[nodiscard]] int length() const noexcept { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWitness &) const = default;
};

struct PathWitness {
    std::vector<Vertex> vertices;
    [[nodiscard]] int order() const noexcept { return static_cast<int>(vertices.size()); }
    bool operator==(const PathWitness &) const = default;
};

struct Circumference {
    int length = 0; // 0 for acyclic graphs
    std::optional<CycleWitness> witness;
};

struct Detour {
    int order = 0;
    PathWitness witness;
};

// Structural validity of witnesses: distinct in-range vertices, consecutive
// pairs adjacent (and, for cycles, at least 3 vertices with the closing edge present).
bool is_valid_cycle(const Graph &g, std::span<const Vertex> seq);
bool is_valid_path(const Graph &g, std::span<const Vertex> seq);

std::optional<CycleWitness> hamilton_cycle(const Graph &g);
std::optional<PathWitness> hamilton_path(const Graph &g);

/// Exact longest cycle by branch and bound, seeded with a greedily extended cycle.
Circumference circumference(const Graph &g);

/// Exact longest path by branch and bound.
Detour detour_order(const Graph &g);

/// Subset dynamic program over (vertex set, endpoint) with the cycle anchored at
/// its smallest vertex. Independent of the branch-and-bound search; n <= 20.
int circumference_dp_oracle(const Graph &g);

/// Maximum-order induced path with endpoint v; ties broken by the
/// lexicographically smallest vertex sequence.
PathWitness longest_induced_path_from(const Graph &g, Vertex v);

/// Whether some induced path of at least `order` vertices starts at v.
bool has_induced_path_from(const Graph &g, Vertex v, int order);

/// Lexicographically smallest induced path of exactly `order` vertices starting at v.
std::optional<PathWitness> first_induced_path_from(const Graph &g, Vertex v, int order);

/// Replaces one cycle edge with a path through vertices off the cycle, giving a
/// strictly longer cycle. Absent when no such detour exists or c is spanning.
/// Throws InvalidWitness when c is not a cycle of g.
std::optional<CycleWitness> extend_cycle(const Graph &g, const CycleWitness &c);

} // namespace hamclass
