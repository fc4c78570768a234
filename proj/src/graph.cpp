#include "hamclass/graph.hpp"

#include "hamclass/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hamclass {

const char *to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnsupportedOrder: return "unsupported-order";
    case ErrorKind::EmptySet: return "empty-set";
    case ErrorKind::InvalidSequence: return "invalid-sequence";
    case ErrorKind::InvalidWitness: return "invalid-witness";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Spine: return "spine";
    case ErrorKind::OracleSize: return "oracle-size";
    case ErrorKind::GeneratorSize: return "generator-size";
    }
    return "unknown";
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int order) : order_(order)
{
    if (order < 1 || order > kMaxOrder)
        throw Error(ErrorKind::UnsupportedOrder, "graph order " + std::to_string(order) + " outside [1, 64]");
}

Graph::Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(order)
{
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n)
{
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::star(int n)
{
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph Graph::petersen()
{
    // Vertices are the 2-subsets of {0..4} in lexicographic order; adjacent iff disjoint.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    Graph g(10);
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) {
            auto [a, b] = pairs[static_cast<std::size_t>(u)];
            auto [c, d] = pairs[static_cast<std::size_t>(v)];
            if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
        }
    return g;
}

int Graph::edge_count() const noexcept
{
    int twice = 0;
    for (Vertex v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
}

Graph Graph::with_vertex(VertexSet neighbors) const
{
    Graph g(order_ + 1);
    g.adj_ = adj_;
    const Vertex v = order_;
    g.adj_[static_cast<std::size_t>(v)] = (neighbors & vertices()).bits();
    for (Vertex w : neighbors & vertices()) g.adj_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << v;
    return g;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u == v || u < 0 || v < 0 || u >= order_ || v >= order_)
        throw Error(ErrorKind::InvalidSequence,
                    "edge " + std::to_string(u) + "-" + std::to_string(v) + " invalid for order " + std::to_string(order_));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) noexcept
{
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

bool Graph::operator==(const Graph &o) const noexcept
{
    return order_ == o.order_ && std::equal(adj_.begin(), adj_.begin() + order_, o.adj_.begin());
}

DegreeProfile degree_profile(const Graph &g)
{
    DegreeProfile p;
    p.degree_sequence.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) p.degree_sequence.push_back(g.degree(v));
    std::sort(p.degree_sequence.begin(), p.degree_sequence.end());
    p.min_degree = p.degree_sequence.front();
    p.max_degree = p.degree_sequence.back();
    return p;
}

VertexSet reachable(const Graph &g, Vertex from, VertexSet within)
{
    VertexSet seen{};
    seen.insert(from);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next{};
        for (Vertex v : frontier) next |= g.neighbors(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const Graph &g, VertexSet within)
{
    if (within.empty()) return true;
    return reachable(g, within.first(), within) == within;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, s and t non-adjacent.
// Unit-capacity flow on the split graph: node 2v is v_in, 2v+1 is v_out.
int local_connectivity(const Graph &g, Vertex s, Vertex t, int stop_at)
{
    const int n = g.order();
    const int nodes = 2 * n;
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
    auto at = [&](int a, int b) -> int & { return cap[static_cast<std::size_t>(a * nodes + b)]; };
    for (Vertex v = 0; v < n; ++v) {
        at(2 * v, 2 * v + 1) = (v == s || v == t) ? inf : 1;
        for (Vertex w : g.neighbors(v)) at(2 * v + 1, 2 * w) = inf;
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::vector<int> queue(static_cast<std::size_t>(nodes));
    while (flow < stop_at) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<std::size_t>(source)] = source;
        std::size_t head = 0, tail = 0;
        queue[tail++] = source;
        while (head < tail && parent[static_cast<std::size_t>(sink)] < 0) {
            int a = queue[head++];
            for (int b = 0; b < nodes; ++b) {
                if (parent[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
                    parent[static_cast<std::size_t>(b)] = a;
                    queue[tail++] = b;
                }
            }
        }
        if (parent[static_cast<std::size_t>(sink)] < 0) break;
        for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
            int a = parent[static_cast<std::size_t>(b)];
            at(a, b) -= 1;
            at(b, a) += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

int vertex_connectivity(const Graph &g)
{
    const int n = g.order();
    if (n < 2) throw Error(ErrorKind::UnsupportedOrder, "vertex connectivity needs at least 2 vertices");
    if (!is_connected(g)) return 0;
    int best = n - 1;
    for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
    // Some vertex among the first best+1 avoids a minimum separator.
    for (Vertex s = 0; s < n && s <= best; ++s) {
        for (Vertex t = 0; t < n; ++t) {
            if (t == s || g.adjacent(s, t)) continue;
            best = std::min(best, local_connectivity(g, s, t, best));
        }
    }
    return best;
}

Graph induced_subgraph(const Graph &g, VertexSet keep)
{
    keep &= g.vertices();
    if (keep.empty()) throw Error(ErrorKind::EmptySet, "induced subgraph of an empty vertex set");
    std::array<int, kMaxOrder> label{};
    int next = 0;
    for (Vertex v : keep) label[static_cast<std::size_t>(v)] = next++;
    Graph h(next);
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v) & keep)
            if (w > v) h.add_edge(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(w)]);
    return h;
}

bool is_induced_path(const Graph &g, std::span<const Vertex> seq)
{
    VertexSet seen{};
    for (Vertex v : seq) {
        if (v < 0 || v >= g.order()) throw Error(ErrorKind::InvalidSequence, "vertex out of range");
        if (seen.contains(v)) throw Error(ErrorKind::InvalidSequence, "repeated vertex " + std::to_string(v));
        seen.insert(v);
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
    return true;
}

bool is_well_formed(const Graph &g)
{
    const VertexSet all = g.vertices();
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet row = g.neighbors(v);
        if (row.contains(v) || !(row - all).empty()) return false;
        for (Vertex w : row)
            if (!g.adjacent(w, v)) return false;
    }
    return true;
}

} // namespace hamclass
