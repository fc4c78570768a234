#include "hamclass/canon.hpp"

#include "hamclass/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

namespace hamclass {

namespace {

using Cells = std::vector<std::uint64_t>;

// Refines an ordered partition to the coarsest equitable refinement. Every
// split depends only on cell positions and neighbour counts, so the result is
// invariant under relabelling.
void refine(const Graph &g, Cells &cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size(); ++w) {
            const std::uint64_t splitter = cells[w];
            for (std::size_t x = 0; x < cells.size(); ++x) {
                const std::uint64_t cell = cells[x];
                if (std::has_single_bit(cell)) continue;
                std::array<std::uint64_t, kMaxOrder + 1> by_count{};
                int lo = kMaxOrder, hi = 0;
                for (Vertex v : VertexSet(cell)) {
                    const int c = std::popcount(g.row(v) & splitter);
                    by_count[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) continue;
                Cells fragments;
                for (int c = lo; c <= hi; ++c)
                    if (by_count[static_cast<std::size_t>(c)]) fragments.push_back(by_count[static_cast<std::size_t>(c)]);
                cells[x] = fragments[0];
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x) + 1, fragments.begin() + 1, fragments.end());
                x += fragments.size() - 1;
                changed = true;
            }
        }
    }
}

struct UnionFind {
    std::array<int, kMaxOrder> parent{};
    explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

class Search {
public:
    explicit Search(const Graph &g) : g_(g), n_(g.order()) {}

    void run(Cells cells)
    {
        refine(g_, cells);
        std::vector<Vertex> prefix;
        descend(cells, prefix);
    }

    std::vector<std::uint64_t> best_cert;
    std::vector<Vertex> best_order;

private:
    void leaf(const Cells &cells)
    {
        std::vector<Vertex> order(static_cast<std::size_t>(n_));
        std::array<int, kMaxOrder> pos{};
        for (int p = 0; p < n_; ++p) {
            order[static_cast<std::size_t>(p)] = std::countr_zero(cells[static_cast<std::size_t>(p)]);
            pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
        }
        std::vector<std::uint64_t> cert(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) {
            std::uint64_t row = 0;
            for (Vertex w : g_.neighbors(order[static_cast<std::size_t>(p)]))
                row |= std::uint64_t{1} << pos[static_cast<std::size_t>(w)];
            cert[static_cast<std::size_t>(p)] = row;
        }
        if (best_order.empty() || cert > best_cert) {
            best_cert = std::move(cert);
            best_order = std::move(order);
        } else if (cert == best_cert) {
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            for (int p = 0; p < n_; ++p)
                gamma[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = best_order[static_cast<std::size_t>(p)];
            autos_.push_back(std::move(gamma));
        }
    }

    bool same_orbit_as_explored(Vertex x, std::uint64_t explored, const std::vector<Vertex> &prefix)
    {
        if (explored == 0) return false;
        UnionFind uf(n_);
        for (const auto &gamma : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex v) { return gamma[static_cast<std::size_t>(v)] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) uf.unite(v, gamma[static_cast<std::size_t>(v)]);
        }
        const int root = uf.find(x);
        for (Vertex y : VertexSet(explored))
            if (uf.find(y) == root) return true;
        return false;
    }

    void descend(const Cells &cells, std::vector<Vertex> &prefix)
    {
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells);
            return;
        }
        std::size_t target = cells.size();
        int target_size = kMaxOrder + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const int sz = std::popcount(cells[i]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }
        std::uint64_t explored = 0;
        for (Vertex x : VertexSet(cells[target])) {
            if (same_orbit_as_explored(x, explored, prefix)) continue;
            explored |= std::uint64_t{1} << x;
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(std::uint64_t{1} << x);
            child.push_back(cells[target] & ~(std::uint64_t{1} << x));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            refine(g_, child);
            prefix.push_back(x);
            descend(child, prefix);
            prefix.pop_back();
        }
    }

    const Graph &g_;
    int n_;
    std::vector<std::vector<int>> autos_;
};

} // namespace

CanonicalLabelling canonical_labelling(const Graph &g, std::span<const int> colors)
{
    const int n = g.order();
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw Error(ErrorKind::Parameter, "colour vector length differs from graph order");

    Cells cells;
    std::vector<int> color_of_cell;
    if (colors.empty()) {
        cells.push_back(g.vertices().bits());
        color_of_cell.push_back(0);
    } else {
        std::map<int, std::uint64_t> by_color;
        for (Vertex v = 0; v < n; ++v) by_color[colors[static_cast<std::size_t>(v)]] |= std::uint64_t{1} << v;
        for (auto [c, bits] : by_color) {
            cells.push_back(bits);
            color_of_cell.push_back(c);
        }
    }

    CanonicalLabelling out;
    out.form.order = n;
    for (std::size_t i = 0; i < cells.size(); ++i)
        out.form.colors.insert(out.form.colors.end(), static_cast<std::size_t>(std::popcount(cells[i])), color_of_cell[i]);

    Search search(g);
    search.run(std::move(cells));
    out.form.rows = std::move(search.best_cert);
    out.order = std::move(search.best_order);
    return out;
}

CanonicalForm rooted_form(const Graph &g, Vertex v)
{
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
    colors[static_cast<std::size_t>(v)] = 0;
    return canonical_form(g, colors);
}

bool are_isomorphic(const Graph &a, const Graph &b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (degree_profile(a).degree_sequence != degree_profile(b).degree_sequence) return false;
    return canonical_form(a) == canonical_form(b);
}

Graph relabel(const Graph &g, std::span<const Vertex> order)
{
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) throw Error(ErrorKind::InvalidSequence, "relabelling has wrong length");
    std::array<int, kMaxOrder> pos{};
    VertexSet seen{};
    for (int p = 0; p < n; ++p) {
        const Vertex v = order[static_cast<std::size_t>(p)];
        if (v < 0 || v >= n || seen.contains(v)) throw Error(ErrorKind::InvalidSequence, "relabelling is not a permutation");
        seen.insert(v);
        pos[static_cast<std::size_t>(v)] = p;
    }
    Graph h(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            if (w > v) h.add_edge(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(w)]);
    return h;
}

} // namespace hamclass
