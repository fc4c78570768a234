#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hamclass {

using Vertex = int;
inline constexpr int kMaxOrder = 64;

/// A set of vertices of a graph of order at most 64, one bit per vertex.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs) insert(v);
    }

    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    /// Smallest member; undefined on the empty set.
    [[nodiscard]] constexpr Vertex first() const noexcept { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet &operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet &operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet &operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet &) const noexcept = default;

    [[nodiscard]] std::vector<Vertex> members() const;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator &operator++() noexcept { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator &) const noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };

    [[nodiscard]] constexpr iterator begin() const noexcept { return iterator(bits_); }
    [[nodiscard]] constexpr iterator end() const noexcept { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degree_sequence; // ascending
};

/// Simple undirected graph on vertices 0..n-1, n in [1, 64], stored as adjacency bitrows.
class Graph {
public:
    /// Edgeless graph of the given order. Throws UnsupportedOrder outside [1, 64].
    explicit Graph(int order);
    Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph star(int n); // centre 0, leaves 1..n-1
    static Graph petersen();  // Kneser graph K(5,2)

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] VertexSet vertices() const noexcept { return VertexSet::range(order_); }
    [[nodiscard]] VertexSet neighbors(Vertex v) const noexcept { return VertexSet(adj_[v]); }
    [[nodiscard]] std::uint64_t row(Vertex v) const noexcept { return adj_[v]; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept { return (adj_[u] >> v) & 1U; }
    [[nodiscard]] int degree(Vertex v) const noexcept { return std::popcount(adj_[v]); }
    [[nodiscard]] int edge_count() const noexcept;

    /// Copy of this graph with one more vertex (label order()) adjacent to `neighbors`.
    [[nodiscard]] Graph with_vertex(VertexSet neighbors) const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v) noexcept;

    bool operator==(const Graph &o) const noexcept;

private:
    int order_;
    std::array<std::uint64_t, kMaxOrder> adj_{};
};

DegreeProfile degree_profile(const Graph &g);

/// Minimum number of vertices whose removal disconnects g or leaves one vertex;
/// n - 1 for complete graphs. Throws UnsupportedOrder when n < 2.
int vertex_connectivity(const Graph &g);

/// True when every pair of vertices in `within` is joined by a path inside `within`.
bool is_connected(const Graph &g, VertexSet within);
inline bool is_connected(const Graph &g) { return is_connected(g, g.vertices()); }

/// Vertices of `within` reachable from `from` using only vertices of `within`.
VertexSet reachable(const Graph &g, Vertex from, VertexSet within);

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in ascending original order.
Graph induced_subgraph(const Graph &g, VertexSet keep);

/// True iff consecutive entries are adjacent and no other pair is. Throws on repeats.
bool is_induced_path(const Graph &g, std::span<const Vertex> seq);

/// Checks the representation invariants (symmetry, no loops, clean high bits).
bool is_well_formed(const Graph &g);

} // namespace hamclass
