#include "hamclass/walks.hpp"

#include "hamclass/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace hamclass {

namespace {

VertexSet single(Vertex v)
{
    VertexSet s{};
    s.insert(v);
    return s;
}

bool distinct_in_range(const Graph &g, std::span<const Vertex> seq)
{
    VertexSet seen{};
    for (Vertex v : seq) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    return true;
}

// Vertices surviving repeated deletion of vertices with degree < 2.
VertexSet two_core(const Graph &g)
{
    VertexSet core = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : core)
            if ((g.neighbors(v) & core).size() < 2) {
                core.erase(v);
                changed = true;
            }
    }
    return core;
}

// A cycle inside `core` (every vertex there has at least two neighbours in it):
// walk without backtracking until a vertex repeats.
CycleWitness some_cycle(const Graph &g, VertexSet core)
{
    std::array<int, kMaxOrder> at{};
    at.fill(-1);
    std::vector<Vertex> walk;
    Vertex prev = -1;
    Vertex cur = core.first();
    while (at[static_cast<std::size_t>(cur)] < 0) {
        at[static_cast<std::size_t>(cur)] = static_cast<int>(walk.size());
        walk.push_back(cur);
        VertexSet next = g.neighbors(cur) & core;
        if (prev >= 0) next.erase(prev);
        prev = cur;
        cur = next.first();
    }
    return CycleWitness{{walk.begin() + at[static_cast<std::size_t>(cur)], walk.end()}};
}

// Vertex sets of the 2-connected blocks with at least three vertices; every
// cycle lies inside one of them.
class CyclicBlocks {
public:
    explicit CyclicBlocks(const Graph &g) : g_(g)
    {
        disc_.fill(-1);
        for (Vertex v = 0; v < g.order(); ++v)
            if (disc_[static_cast<std::size_t>(v)] < 0) visit(v, -1);
        std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    }

    [[nodiscard]] const std::vector<VertexSet> &blocks() const noexcept { return blocks_; }

private:
    void visit(Vertex v, Vertex parent)
    {
        disc_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = clock_++;
        for (Vertex w : g_.neighbors(v)) {
            if (w == parent) continue;
            if (disc_[static_cast<std::size_t>(w)] < 0) {
                edges_.emplace_back(v, w);
                visit(w, v);
                low_[static_cast<std::size_t>(v)] = std::min(low_[static_cast<std::size_t>(v)], low_[static_cast<std::size_t>(w)]);
                if (low_[static_cast<std::size_t>(w)] >= disc_[static_cast<std::size_t>(v)]) pop_block(v, w);
            } else if (disc_[static_cast<std::size_t>(w)] < disc_[static_cast<std::size_t>(v)]) {
                edges_.emplace_back(v, w);
                low_[static_cast<std::size_t>(v)] = std::min(low_[static_cast<std::size_t>(v)], disc_[static_cast<std::size_t>(w)]);
            }
        }
    }

    void pop_block(Vertex v, Vertex w)
    {
        VertexSet block{};
        while (true) {
            const auto [a, b] = edges_.back();
            edges_.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == w) break;
        }
        if (block.size() >= 3) blocks_.push_back(block);
    }

    const Graph &g_;
    std::array<int, kMaxOrder> disc_{};
    std::array<int, kMaxOrder> low_{};
    int clock_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<VertexSet> blocks_;
};

class HamiltonCycleSearch {
public:
    explicit HamiltonCycleSearch(const Graph &g) : g_(g) {}

    std::optional<CycleWitness> run()
    {
        const int n = g_.order();
        if (n < 3) return std::nullopt;
        for (Vertex v = 0; v < n; ++v)
            if (g_.degree(v) < 2) return std::nullopt;
        if (!is_connected(g_)) return std::nullopt;
        path_.assign(1, start_);
        if (!extend(start_, g_.vertices() - single(start_))) return std::nullopt;
        return CycleWitness{path_};
    }

private:
    bool extend(Vertex cur, VertexSet remaining)
    {
        if (remaining.empty()) return g_.adjacent(cur, start_) && (path_.size() < 3 || cur > path_[1]);

        const bool at_start = cur == start_;
        VertexSet open = remaining;
        open.insert(cur);
        open.insert(start_);
        std::array<int, kMaxOrder> mandatory{};
        int forced_at_cur = 0;
        int forced_at_start = 0;
        Vertex forced = -1;
        for (Vertex w : remaining) {
            const VertexSet avail = g_.neighbors(w) & open;
            const int d = avail.size();
            if (d < 2) return false;
            if (d > 2) continue;
            // Both remaining edges of w are forced.
            if (!at_start && avail.contains(cur) && avail.contains(start_) && remaining.size() > 1) return false;
            for (Vertex a : avail) {
                if (a == cur) {
                    ++forced_at_cur;
                    forced = w;
                } else if (a == start_) {
                    ++forced_at_start;
                } else if (++mandatory[static_cast<std::size_t>(a)] > 2) {
                    return false;
                }
            }
        }
        if (at_start ? forced_at_cur > 2 : (forced_at_cur > 1 || forced_at_start > 1)) return false;

        VertexSet cur_and_rest = remaining;
        cur_and_rest.insert(cur);
        if ((reachable(g_, cur, cur_and_rest) & remaining) != remaining) return false;

        // Each cycle is reported once: the vertex closing to start exceeds the second vertex.
        if (!at_start) {
            const std::uint64_t above = ~((std::uint64_t{2} << path_[1]) - 1);
            if (((g_.neighbors(start_) & remaining).bits() & above) == 0) return false;
        }

        VertexSet candidates = (!at_start && forced_at_cur == 1) ? single(forced) : (g_.neighbors(cur) & remaining);
        for (Vertex x : candidates) {
            path_.push_back(x);
            if (extend(x, remaining - single(x))) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph &g_;
    Vertex start_ = 0;
    std::vector<Vertex> path_;
};

class HamiltonPathSearch {
public:
    explicit HamiltonPathSearch(const Graph &g) : g_(g) {}

    std::optional<PathWitness> run()
    {
        const int n = g_.order();
        if (!is_connected(g_)) return std::nullopt;
        VertexSet leaves{};
        for (Vertex v = 0; v < n; ++v)
            if (g_.degree(v) <= 1) leaves.insert(v);
        if (leaves.size() > 2) return std::nullopt;
        const VertexSet starts = leaves.empty() ? g_.vertices() : leaves;
        for (Vertex s : starts) {
            path_.assign(1, s);
            if (extend(s, g_.vertices() - single(s))) return PathWitness{path_};
        }
        return std::nullopt;
    }

private:
    bool extend(Vertex cur, VertexSet remaining)
    {
        if (remaining.empty()) return true;
        if (remaining.size() > 1) {
            VertexSet open = remaining;
            open.insert(cur);
            int dead_ends = 0;
            for (Vertex w : remaining)
                if ((g_.neighbors(w) & open).size() <= 1 && ++dead_ends > 1) return false;
            if ((reachable(g_, cur, open) & remaining) != remaining) return false;
        }
        for (Vertex x : g_.neighbors(cur) & remaining) {
            path_.push_back(x);
            if (extend(x, remaining - single(x))) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph &g_;
    std::vector<Vertex> path_;
};

class LongestCycleSearch {
public:
    LongestCycleSearch(const Graph &g, CycleWitness incumbent, int upper)
        : g_(g), best_(std::move(incumbent)), upper_(upper)
    {
    }

    CycleWitness run(VertexSet core)
    {
        for (Vertex s : core) {
            if (best_.length() >= upper_) break;
            allowed_ = VertexSet(core.bits() & ~((std::uint64_t{1} << s) - 1));
            if (allowed_.size() <= best_.length()) break;
            start_ = s;
            path_.assign(1, s);
            dfs(s, allowed_ - single(s));
        }
        return best_;
    }

private:
    void dfs(Vertex cur, VertexSet avail)
    {
        const int depth = static_cast<int>(path_.size());
        if (depth >= 3 && g_.adjacent(cur, start_) && depth > best_.length() && path_[1] < cur) {
            best_.vertices = path_;
            if (depth >= upper_) return;
        }
        VertexSet cur_and_avail = avail;
        cur_and_avail.insert(cur);
        const VertexSet reach = reachable(g_, cur, cur_and_avail) - single(cur);
        if (depth + reach.size() <= best_.length()) return;
        if ((reach & g_.neighbors(start_)).empty()) return;
        for (Vertex x : g_.neighbors(cur) & avail) {
            path_.push_back(x);
            dfs(x, avail - single(x));
            path_.pop_back();
            if (best_.length() >= upper_) return;
        }
    }

    const Graph &g_;
    CycleWitness best_;
    int upper_;
    VertexSet allowed_;
    Vertex start_ = 0;
    std::vector<Vertex> path_;
};

class LongestPathSearch {
public:
    LongestPathSearch(const Graph &g, int upper) : g_(g), upper_(upper) {}

    PathWitness run()
    {
        for (Vertex s = 0; s < g_.order() && best_.order() < upper_; ++s) {
            path_.assign(1, s);
            dfs(s, g_.vertices() - single(s));
        }
        return best_;
    }

private:
    void dfs(Vertex cur, VertexSet remaining)
    {
        const int depth = static_cast<int>(path_.size());
        if (depth > best_.order()) best_.vertices = path_;
        if (best_.order() >= upper_) return;
        VertexSet open = remaining;
        open.insert(cur);
        if (depth + (reachable(g_, cur, open).size() - 1) <= best_.order()) return;
        for (Vertex x : g_.neighbors(cur) & remaining) {
            path_.push_back(x);
            dfs(x, remaining - single(x));
            path_.pop_back();
            if (best_.order() >= upper_) return;
        }
    }

    const Graph &g_;
    int upper_;
    PathWitness best_;
    std::vector<Vertex> path_;
};

class InducedPathSearch {
public:
    InducedPathSearch(const Graph &g, int target, bool stop_at_target)
        : g_(g), target_(target), stop_at_target_(stop_at_target)
    {
    }

    PathWitness run(Vertex v)
    {
        path_.assign(1, v);
        dfs(v, g_.vertices() - g_.neighbors(v) - single(v));
        return best_;
    }

    [[nodiscard]] bool reached() const noexcept { return best_.order() >= target_; }

private:
    // `free` holds vertices not on the path and not adjacent to any path vertex.
    void dfs(Vertex end, VertexSet free)
    {
        const int depth = static_cast<int>(path_.size());
        if (depth > best_.order()) best_.vertices = path_;
        if (stop_at_target_ && reached()) return;
        const VertexSet next = g_.neighbors(end) - VertexSet(path_set());
        VertexSet region = free | next;
        region.insert(end);
        if (depth + (reachable(g_, end, region).size() - 1) <= best_.order()) return;
        for (Vertex x : next) {
            path_.push_back(x);
            dfs(x, free - g_.neighbors(x));
            path_.pop_back();
            if (stop_at_target_ && reached()) return;
        }
    }

    // Vertices the next step may not use: the path itself and the
    // neighbourhoods of all path vertices except the current end.
    [[nodiscard]] std::uint64_t path_set() const
    {
        std::uint64_t blocked = 0;
        for (std::size_t i = 0; i < path_.size(); ++i) {
            blocked |= std::uint64_t{1} << path_[i];
            if (i + 1 < path_.size()) blocked |= g_.row(path_[i]);
        }
        return blocked;
    }

    const Graph &g_;
    int target_;
    bool stop_at_target_;
    PathWitness best_;
    std::vector<Vertex> path_;
};

constexpr std::uint64_t kDeletionBudget = 50000;

std::uint64_t binomial(int n, int k)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// A cycle through every vertex of `block` except some d of them.
std::optional<CycleWitness> spanning_cycle_missing(const Graph &g, VertexSet block, int d)
{
    const std::vector<Vertex> members = block.members();
    const int m = static_cast<int>(members.size());
    std::vector<int> pick(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet part = block;
        for (int i : pick) part.erase(members[static_cast<std::size_t>(i)]);
        if (auto ham = hamilton_cycle(induced_subgraph(g, part))) {
            const auto labels = part.members();
            for (Vertex &v : ham->vertices) v = labels[static_cast<std::size_t>(v)];
            return ham;
        }
        int i = d - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - d + i) --i;
        if (i < 0) return std::nullopt;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

bool is_valid_cycle(const Graph &g, std::span<const Vertex> seq)
{
    if (seq.size() < 3 || !distinct_in_range(g, seq)) return false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
    return true;
}

bool is_valid_path(const Graph &g, std::span<const Vertex> seq)
{
    if (seq.empty() || !distinct_in_range(g, seq)) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[i + 1])) return false;
    return true;
}

std::optional<CycleWitness> hamilton_cycle(const Graph &g)
{
    return HamiltonCycleSearch(g).run();
}

std::optional<PathWitness> hamilton_path(const Graph &g)
{
    return HamiltonPathSearch(g).run();
}

Circumference circumference(const Graph &g)
{
    const VertexSet core = two_core(g);
    if (core.empty()) return {};

    CycleWitness best = some_cycle(g, core);
    while (auto longer = extend_cycle(g, best)) best = std::move(*longer);

    const CyclicBlocks blocks(g);
    for (VertexSet block : blocks.blocks()) {
        if (block.size() <= best.length()) break;
        // Cycles missing exactly d block vertices, for d = 0, 1, ... while the
        // subsets stay few, use the pruned Hamiltonian search; plain
        // enumeration finishes whatever remains.
        const int m = block.size();
        int d = 0;
        for (std::uint64_t budget = kDeletionBudget; d <= m - 3 && m - d > best.length(); ++d) {
            const std::uint64_t subsets = binomial(m, d);
            if (subsets > budget) break;
            budget -= subsets;
            if (auto cycle = spanning_cycle_missing(g, block, d)) {
                best = std::move(*cycle);
                break;
            }
        }
        if (m - d > best.length()) best = LongestCycleSearch(g, std::move(best), m - d).run(block);
    }
    return {best.length(), std::move(best)};
}

Detour detour_order(const Graph &g)
{
    int upper = 0;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        const VertexSet comp = reachable(g, unseen.first(), unseen);
        upper = std::max(upper, comp.size());
        unseen -= comp;
    }
    if (upper == g.order())
        if (auto ham = hamilton_path(g)) return {ham->order(), std::move(*ham)};
    PathWitness best = LongestPathSearch(g, upper).run();
    return {best.order(), std::move(best)};
}

int circumference_dp_oracle(const Graph &g)
{
    const int n = g.order();
    if (n > 20) throw Error(ErrorKind::OracleSize, "subset DP oracle supports n <= 20, got " + std::to_string(n));
    // ends[mask] = endpoints v such that a path from min(mask) through exactly mask ends at v.
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const std::uint32_t reach = ends[mask];
        if (reach == 0) continue;
        const int anchor = std::countr_zero(mask);
        const int size = std::popcount(mask);
        const auto anchor_row = static_cast<std::uint32_t>(g.row(anchor));
        if (size >= 3 && (reach & anchor_row) != 0) best = std::max(best, size);
        const std::uint32_t above_anchor = ~((2U << anchor) - 1);
        for (std::uint32_t r = reach; r; r &= r - 1) {
            const int v = std::countr_zero(r);
            std::uint32_t ext = static_cast<std::uint32_t>(g.row(v)) & ~mask & above_anchor;
            for (; ext; ext &= ext - 1) {
                const int w = std::countr_zero(ext);
                ends[mask | (1U << w)] |= 1U << w;
            }
        }
    }
    return best;
}

PathWitness longest_induced_path_from(const Graph &g, Vertex v)
{
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::InvalidSequence, "vertex out of range");
    return InducedPathSearch(g, g.order() + 1, false).run(v);
}

bool has_induced_path_from(const Graph &g, Vertex v, int order)
{
    InducedPathSearch search(g, order, true);
    search.run(v);
    return search.reached();
}

std::optional<PathWitness> first_induced_path_from(const Graph &g, Vertex v, int order)
{
    InducedPathSearch search(g, order, true);
    PathWitness p = search.run(v);
    if (p.order() < order) return std::nullopt;
    p.vertices.resize(static_cast<std::size_t>(order));
    return p;
}

std::optional<CycleWitness> extend_cycle(const Graph &g, const CycleWitness &c)
{
    if (!is_valid_cycle(g, c.vertices)) throw Error(ErrorKind::InvalidWitness, "extend_cycle given a non-cycle");
    VertexSet on_cycle{};
    for (Vertex v : c.vertices) on_cycle.insert(v);
    const VertexSet outside = g.vertices() - on_cycle;
    if (outside.empty()) return std::nullopt;

    const std::size_t len = c.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Vertex a = c.vertices[i];
        const Vertex b = c.vertices[(i + 1) % len];
        const VertexSet sources = g.neighbors(a) & outside;
        const VertexSet targets = g.neighbors(b) & outside;
        if (sources.empty() || targets.empty()) continue;

        // Shortest outside path from a neighbour of a to a neighbour of b.
        std::array<int, kMaxOrder> parent{};
        parent.fill(-2);
        std::deque<Vertex> queue;
        for (Vertex x : sources) {
            parent[static_cast<std::size_t>(x)] = -1;
            queue.push_back(x);
        }
        Vertex hit = -1;
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            if (targets.contains(x)) {
                hit = x;
                break;
            }
            for (Vertex y : g.neighbors(x) & outside)
                if (parent[static_cast<std::size_t>(y)] == -2) {
                    parent[static_cast<std::size_t>(y)] = x;
                    queue.push_back(y);
                }
        }
        if (hit < 0) continue;

        std::vector<Vertex> detour;
        for (Vertex x = hit; x >= 0; x = parent[static_cast<std::size_t>(x)]) detour.push_back(x);
        std::reverse(detour.begin(), detour.end());
        CycleWitness longer;
        longer.vertices.assign(c.vertices.begin(), c.vertices.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        longer.vertices.insert(longer.vertices.end(), detour.begin(), detour.end());
        longer.vertices.insert(longer.vertices.end(), c.vertices.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                               c.vertices.end());
        return longer;
    }
    return std::nullopt;
}

} // namespace hamclass
