#pragma once

#include "hamclass/bounds.hpp"
#include "hamclass/graph.hpp"
#include "hamclass/membership.hpp"
#include "hamclass/params.hpp"
#include "hamclass/walks.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace hamclass {

/// Decomposition of a graph into an induced path P = u1..uk and a spanning
/// cycle (Gamma) or path (Pi) of g - V(P), with everything measured along the
/// spine. Indices into `attach_points` are 0-based; the 1-based label of
/// attach_points[j] is j + 1.
struct AttachmentConfig {
    Graph graph{1};
    ClassKind kind = ClassKind::Gamma;
    PathWitness path;               // u1 .. uk, u1 first
    std::vector<Vertex> spine;      // oriented; cyclic for Gamma, y0 first for Pi
    std::vector<Vertex> attach_points;
    std::vector<int> eps;           // 1 if u1 ~ attach point
    std::vector<int> d_pprime;      // neighbours among u2..uk
    /// Gamma: s entries, segments[j] lies between attach j and j+1 (cyclically).
    /// Pi: s + 1 entries, segments[0] before the first attach point,
    /// segments[s] after the last one.
    std::vector<std::vector<Vertex>> segments;
    std::vector<int> r;             // u1-neighbours per segment
    /// (m, M): smallest and largest 1-based path index adjacent to each attach point.
    std::vector<std::pair<int, int>> min_max_indices;

    [[nodiscard]] int k() const noexcept { return path.order(); }
    [[nodiscard]] int s() const noexcept { return static_cast<int>(attach_points.size()); }
    [[nodiscard]] Vertex u1() const noexcept { return path.vertices.front(); }
};

struct ClaimRecord {
    int index = 0; // 1-based label: 1..s for Gamma, 0..s for Pi (W0 and Ws at the ends)
    int segment_size = 0;
    Rational required_bound;
    bool satisfied = true;
    /// Present for violated indices: a walk longer than the spine.
    std::optional<Walk> improvement;
};

struct ClaimReport {
    std::vector<ClaimRecord> per_index;
    int edge_count_pprime_spine = 0;
    int edge_count_lower_bound = 0;
    /// Sum of d_P'(attach) equals |E(P', spine)|.
    bool edge_identity_holds = true;
    /// d(u1) = 1 + sum(r) + sum(eps); absent when u1 is not of maximum degree.
    std::optional<bool> delta_identity_holds;
    /// |spine| >= sum d_P' + 2 d(u1) - 2 (Gamma), k + sum d_P' + 2 d(u1) - 2 (Pi).
    bool summation_holds = true;
    /// n - k - 2 Delta + 2 >= k^2 - k + 1 (Gamma), n - 2k - 2 Delta + 2 >= k + (k-2)(k-1) (Pi).
    bool degree_chain_holds = true;
    /// Improvement of the first violated index.
    std::optional<Walk> improvement;

    [[nodiscard]] bool all_satisfied() const;
};

/// Builds a config from explicit parts; checks only that `path` is an induced
/// path, `spine` spans g - V(path) as a cycle/path, and k >= 1.
/// For k = 1 (P' empty) the attach points are the neighbours of u1 instead.
/// Throws Structure or Spine on malformed input.
AttachmentConfig make_config(const Graph &g, ClassKind kind, std::vector<Vertex> path, std::vector<Vertex> spine);

/// u1 defaults to the smallest maximum-degree vertex; P is the lexicographically
/// smallest induced path of order k from u1; the spine comes from the exact
/// spanning-walk solver and is normalised to its lexicographically smallest form.
/// Throws Structure if the connectivity requirement fails or no induced path
/// exists, Spine if g - V(P) lacks the spanning walk.
AttachmentConfig build_config(const Graph &g, int k, ClassKind kind, std::optional<Vertex> u1 = std::nullopt);

/// Segment inequality for every Q_i. Empty report when k < 2.
/// Throws Parameter for a Pi config.
ClaimReport verify_gamma_claim(const AttachmentConfig &cfg);

/// Interior W_i inequalities followed by the W_0 and W_s end inequalities.
/// Empty report when k < 2. Throws Parameter for a Gamma config.
ClaimReport verify_pi_claims(const AttachmentConfig &cfg);

/// Edge-count and degree identities plus the closing degree chain.
/// Throws Parameter when k < 2.
ClaimReport degree_chain_audit(const AttachmentConfig &cfg);

/// k^2 - k + 1 (Gamma), k + (k-2)(k-1) (Pi).
int edge_count_lower_bound(int k, ClassKind kind);

/// If two consecutive spine vertices are both adjacent to u1, the spine with
/// u1 inserted between them. Gamma configs only.
std::optional<CycleWitness> consecutive_neighbor_check(const AttachmentConfig &cfg);

/// {"kind": "cycle"|"path", "vertices": [...]}
nlohmann::json to_json(const Walk &walk);
nlohmann::json to_json(const AttachmentConfig &cfg);
nlohmann::json to_json(const ClaimReport &report);

} // namespace hamclass
