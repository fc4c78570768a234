#pragma once

#include "hamclass/graph.hpp"
#include "hamclass/params.hpp"
#include "hamclass/walks.hpp"

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace hamclass {

using Walk = std::variant<CycleWitness, PathWitness>;

const std::vector<Vertex> &walk_vertices(const Walk &w);

enum class VerdictStatus { Member, Refuted };
enum class RefutationReason { None, WrongLongestWalkLength, BadDeletionSet };

struct MembershipVerdict {
    VerdictStatus status = VerdictStatus::Refuted;
    RefutationReason reason = RefutationReason::None;
    /// c(G) for Gamma, p(G) for Pi, as computed by the exact solver.
    int found_length = 0;
    /// The first k-set (lexicographic order) whose deletion lacks the spanning walk.
    std::optional<VertexSet> bad_set;
    /// A longest cycle/path of g, when one exists.
    std::optional<Walk> longest;
    /// For members: one spanning walk of g - S per k-set S, in lexicographic
    /// order of S, in the original vertex labels. Empty unless requested.
    std::vector<Walk> deletion_walks;

    [[nodiscard]] bool member() const noexcept { return status == VerdictStatus::Member; }
};

struct MembershipOptions {
    bool collect_deletion_walks = true;
};

/// Member iff c(g) = n - k and every induced subgraph on n - k vertices is Hamiltonian.
/// Throws Parameter unless k >= 1 and n - k >= 3.
MembershipVerdict gamma_membership(const Graph &g, int k, MembershipOptions options = {});

/// Member iff p(g) = n - k and every k-vertex deletion is traceable.
/// Throws Parameter unless 1 <= k <= n - 1.
MembershipVerdict pi_membership(const Graph &g, int k, MembershipOptions options = {});

MembershipVerdict membership(const Graph &g, ClassParams params, MembershipOptions options = {});

bool is_hypohamiltonian(const Graph &g);
bool is_hypotraceable(const Graph &g);

/// Non-Hamiltonian with every vertex-deleted subgraph Hamiltonian, checked directly.
bool hypohamiltonian_by_definition(const Graph &g);

/// Smallest vertex that is not the endpoint of an induced path of order >= k + 1.
std::optional<Vertex> check_induced_path_property(const Graph &g, int k);

/// kappa(g) >= k + 2 for Gamma, kappa(g) >= k + 1 for Pi.
bool connectivity_requirement(const Graph &g, ClassParams params);

/// Calls visit(S) for every k-subset of {0..n-1} in lexicographic order of the
/// sorted member tuples; stops early when visit returns false.
void for_each_k_subset(int n, int k, const std::function<bool(VertexSet)> &visit);

} // namespace hamclass
