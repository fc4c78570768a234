#include "hamclass/membership.hpp"

#include "hamclass/bounds.hpp"
#include "hamclass/error.hpp"

#include <numeric>

namespace hamclass {

const std::vector<Vertex> &walk_vertices(const Walk &w)
{
    return std::visit([](const auto &x) -> const std::vector<Vertex> & { return x.vertices; }, w);
}

void for_each_k_subset(int n, int k, const std::function<bool(VertexSet)> &visit)
{
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet s{};
        for (int v : idx) s.insert(v);
        if (!visit(s)) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

std::vector<Vertex> to_original(const std::vector<Vertex> &local, VertexSet kept)
{
    const std::vector<Vertex> labels = kept.members();
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
}

MembershipVerdict decide(const Graph &g, ClassParams params, MembershipOptions options)
{
    const int n = g.order();
    validate_params(n, params);
    const int target = n - params.k;
    const bool gamma = params.kind == ClassKind::Gamma;

    MembershipVerdict verdict;
    if (gamma) {
        Circumference c = circumference(g);
        verdict.found_length = c.length;
        if (c.witness) verdict.longest = std::move(*c.witness);
    } else {
        Detour d = detour_order(g);
        verdict.found_length = d.order;
        verdict.longest = std::move(d.witness);
    }
    if (verdict.found_length != target) {
        verdict.reason = RefutationReason::WrongLongestWalkLength;
        return verdict;
    }

    for_each_k_subset(n, params.k, [&](VertexSet removed) {
        const VertexSet kept = g.vertices() - removed;
        const Graph h = induced_subgraph(g, kept);
        if (gamma) {
            auto cycle = hamilton_cycle(h);
            if (!cycle) {
                verdict.bad_set = removed;
                return false;
            }
            if (options.collect_deletion_walks)
                verdict.deletion_walks.emplace_back(CycleWitness{to_original(cycle->vertices, kept)});
        } else {
            auto path = hamilton_path(h);
            if (!path) {
                verdict.bad_set = removed;
                return false;
            }
            if (options.collect_deletion_walks)
                verdict.deletion_walks.emplace_back(PathWitness{to_original(path->vertices, kept)});
        }
        return true;
    });

    if (verdict.bad_set) {
        verdict.reason = RefutationReason::BadDeletionSet;
        verdict.deletion_walks.clear();
        return verdict;
    }
    verdict.status = VerdictStatus::Member;
    return verdict;
}

} // namespace

MembershipVerdict gamma_membership(const Graph &g, int k, MembershipOptions options)
{
    return decide(g, {k, ClassKind::Gamma}, options);
}

MembershipVerdict pi_membership(const Graph &g, int k, MembershipOptions options)
{
    return decide(g, {k, ClassKind::Pi}, options);
}

MembershipVerdict membership(const Graph &g, ClassParams params, MembershipOptions options)
{
    return decide(g, params, options);
}

bool is_hypohamiltonian(const Graph &g)
{
    if (g.order() < 4) return false;
    return gamma_membership(g, 1, {.collect_deletion_walks = false}).member();
}

bool is_hypotraceable(const Graph &g)
{
    if (g.order() < 4) return false;
    return pi_membership(g, 1, {.collect_deletion_walks = false}).member();
}

bool hypohamiltonian_by_definition(const Graph &g)
{
    if (g.order() < 4 || hamilton_cycle(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet kept = g.vertices();
        kept.erase(v);
        if (!hamilton_cycle(induced_subgraph(g, kept))) return false;
    }
    return true;
}

std::optional<Vertex> check_induced_path_property(const Graph &g, int k)
{
    if (k < 1) throw Error(ErrorKind::Parameter, "induced path property needs k >= 1");
    for (Vertex v = 0; v < g.order(); ++v)
        if (!has_induced_path_from(g, v, k + 1)) return v;
    return std::nullopt;
}

bool connectivity_requirement(const Graph &g, ClassParams params)
{
    if (g.order() < 2) throw Error(ErrorKind::UnsupportedOrder, "connectivity requirement needs n >= 2");
    return vertex_connectivity(g) >= structural_floor(params);
}

} // namespace hamclass
