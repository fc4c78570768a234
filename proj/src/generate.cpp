#include "hamclass/generate.hpp"

#include "hamclass/canon.hpp"
#include "hamclass/error.hpp"

#include <set>
#include <string>
#include <utility>

namespace hamclass {

namespace {

class Augmenter {
public:
    Augmenter(int n, const GenerationConstraints &c, const std::function<void(const Graph &)> &visit)
        : n_(n), c_(c), visit_(visit)
    {
    }

    void run()
    {
        if (c_.max_degree && *c_.max_degree < 0) return;
        extend(Graph(1));
    }

private:
    // Cheap isomorphism invariant used to narrow the candidate orbit before canonical forms.
    static std::pair<int, int> vertex_key(const Graph &g, Vertex v)
    {
        int sum = 0, squares = 0;
        for (Vertex w : g.neighbors(v)) {
            const int d = g.degree(w);
            sum += d;
            squares += d * d;
        }
        return {sum, squares};
    }

    bool complete_ok(const Graph &g) const
    {
        if (!is_connected(g)) return false;
        if (c_.min_degree) {
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.degree(v) < *c_.min_degree) return false;
        }
        return true;
    }

    void extend(const Graph &g)
    {
        const int m = g.order();
        if (m == n_) {
            if (!complete_ok(g)) return;
            if (c_.min_connectivity && m >= 2 && vertex_connectivity(g) < *c_.min_connectivity) return;
            if (c_.min_connectivity && m < 2 && *c_.min_connectivity > 0) return;
            visit_(g);
            return;
        }
        const int cap = c_.max_degree.value_or(m);
        std::set<CanonicalForm> seen;
        const std::uint64_t limit = std::uint64_t{1} << m;
        for (std::uint64_t bits = 0; bits < limit; ++bits) {
            const VertexSet s(bits);
            const int d = s.size();
            if (d > cap) continue;
            bool ok = true;
            for (Vertex u = 0; u < m && ok; ++u) {
                const int du = g.degree(u);
                if (s.contains(u)) ok = du + 1 <= cap && du + 1 >= d;
                else ok = du >= d;
            }
            if (!ok) continue;

            Graph child = g.with_vertex(s);
            const Vertex fresh = m;
            if (m + 1 == n_ && !complete_ok(child)) continue;

            const auto own = vertex_key(child, fresh);
            std::vector<Vertex> ties;
            bool beaten = false;
            for (Vertex v = 0; v < m && !beaten; ++v) {
                if (child.degree(v) != d) continue;
                const auto key = vertex_key(child, v);
                if (key > own) beaten = true;
                else if (key == own) ties.push_back(v);
            }
            if (beaten) continue;

            CanonicalForm form = rooted_form(child, fresh);
            for (Vertex v : ties) {
                if (rooted_form(child, v) > form) {
                    beaten = true;
                    break;
                }
            }
            if (beaten) continue;
            if (!seen.insert(std::move(form)).second) continue;
            extend(child);
        }
    }

    int n_;
    const GenerationConstraints &c_;
    const std::function<void(const Graph &)> &visit_;
};

} // namespace

void generate_small(int n, const GenerationConstraints &constraints, const std::function<void(const Graph &)> &visit)
{
    if (n < 1 || n > kMaxGeneratedOrder)
        throw Error(ErrorKind::GeneratorSize, "generator supports orders 1..10, got " + std::to_string(n));
    Augmenter(n, constraints, visit).run();
}

std::vector<Graph> generate_small(int n, const GenerationConstraints &constraints)
{
    std::vector<Graph> out;
    generate_small(n, constraints, [&](const Graph &g) { out.push_back(g); });
    return out;
}

} // namespace hamclass
