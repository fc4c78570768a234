#include "hamclass/surgery.hpp"

#include "hamclass/error.hpp"

#include <algorithm>
#include <string>

namespace hamclass {

bool ClaimReport::all_satisfied() const
{
    return std::all_of(per_index.begin(), per_index.end(), [](const ClaimRecord &r) { return r.satisfied; });
}

int edge_count_lower_bound(int k, ClassKind kind)
{
    return kind == ClassKind::Gamma ? k * k - k + 1 : k + (k - 2) * (k - 1);
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

std::vector<Vertex> normalise_cycle(std::vector<Vertex> c)
{
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return c;
}

std::vector<Vertex> normalise_path(std::vector<Vertex> p)
{
    std::vector<Vertex> rev(p.rbegin(), p.rend());
    return std::min(p, rev);
}

// Spine positions and traversal helpers.
class Spine {
public:
    explicit Spine(const std::vector<Vertex> &seq) : seq_(seq), pos_(kMaxOrder, -1)
    {
        for (std::size_t i = 0; i < seq.size(); ++i) pos_[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
    }

    [[nodiscard]] int size() const { return static_cast<int>(seq_.size()); }
    [[nodiscard]] int pos(Vertex v) const { return pos_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] Vertex at(int i) const
    {
        const int n = size();
        return seq_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

    /// Cyclic forward walk from `from` to `to`, both included.
    [[nodiscard]] std::vector<Vertex> forward(Vertex from, Vertex to) const
    {
        std::vector<Vertex> out;
        for (int i = pos(from);; ++i) {
            out.push_back(at(i));
            if (at(i) == to) break;
        }
        return out;
    }

    /// Cyclic backward walk from `from` to `to`, both included.
    [[nodiscard]] std::vector<Vertex> backward(Vertex from, Vertex to) const
    {
        std::vector<Vertex> out;
        for (int i = pos(from);; --i) {
            out.push_back(at(i));
            if (at(i) == to) break;
        }
        return out;
    }

    /// Linear slice [from, to] of the sequence by position; empty when from > to.
    [[nodiscard]] std::vector<Vertex> slice(int from, int to) const
    {
        if (from > to) return {};
        return {seq_.begin() + from, seq_.begin() + to + 1};
    }

private:
    std::vector<Vertex> seq_;
    std::vector<int> pos_;
};

// u_from .. u_to along P, 1-based, either direction.
std::vector<Vertex> path_part(const AttachmentConfig &cfg, int from, int to)
{
    std::vector<Vertex> out;
    const int step = from <= to ? 1 : -1;
    for (int i = from;; i += step) {
        out.push_back(cfg.path.vertices[static_cast<std::size_t>(i - 1)]);
        if (i == to) break;
    }
    return out;
}

std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> parts)
{
    std::vector<Vertex> out;
    for (const auto &p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Longest candidate; earlier candidates win ties.
std::vector<Vertex> longest(const std::vector<std::vector<Vertex>> &candidates)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].size() > candidates[best].size()) best = i;
    return candidates[best];
}

// First t with seg[t] and seg[t + 1] both adjacent to u1.
std::optional<std::size_t> consecutive_pair(const AttachmentConfig &cfg, const std::vector<Vertex> &seg)
{
    for (std::size_t t = 0; t + 1 < seg.size(); ++t)
        if (cfg.graph.adjacent(cfg.u1(), seg[t]) && cfg.graph.adjacent(cfg.u1(), seg[t + 1])) return t;
    return std::nullopt;
}

std::pair<Vertex, Vertex> extreme_neighbors(const AttachmentConfig &cfg, const std::vector<Vertex> &seg)
{
    Vertex first = -1, last = -1;
    for (Vertex v : seg) {
        if (!cfg.graph.adjacent(cfg.u1(), v)) continue;
        if (first < 0) first = v;
        last = v;
    }
    return {first, last};
}

Rational interior_bound(const AttachmentConfig &cfg, int a, int b, int r)
{
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    return Rational(cfg.d_pprime[ua] + cfg.d_pprime[ub] + cfg.eps[ua] + cfg.eps[ub], 2) + 2 * r;
}

void fill_chain(const AttachmentConfig &cfg, ClaimReport &report)
{
    const Graph &g = cfg.graph;
    const int n = g.order(), k = cfg.k();
    const bool gamma = cfg.kind == ClassKind::Gamma;
    VertexSet spine{};
    for (Vertex v : cfg.spine) spine.insert(v);
    int edges = 0;
    for (std::size_t j = 1; j < cfg.path.vertices.size(); ++j) edges += (g.neighbors(cfg.path.vertices[j]) & spine).size();
    int sum_d = 0, sum_eps = 0, sum_r = 0;
    for (int d : cfg.d_pprime) sum_d += d;
    for (int e : cfg.eps) sum_eps += e;
    for (int r : cfg.r) sum_r += r;
    const int du1 = g.degree(cfg.u1());
    const int delta = degree_profile(g).max_degree;

    report.edge_count_pprime_spine = edges;
    report.edge_count_lower_bound = edge_count_lower_bound(k, cfg.kind);
    report.edge_identity_holds = sum_d == edges;
    if (du1 == delta) report.delta_identity_holds = du1 == 1 + sum_r + sum_eps;
    const int spine_order = static_cast<int>(cfg.spine.size());
    report.summation_holds = spine_order >= (gamma ? 0 : k) + sum_d + 2 * du1 - 2;
    report.degree_chain_holds = gamma ? n - k - 2 * delta + 2 >= report.edge_count_lower_bound
                                      : n - 2 * k - 2 * delta + 2 >= report.edge_count_lower_bound;
}

void require_kind(const AttachmentConfig &cfg, ClassKind kind)
{
    if (cfg.kind != kind)
        throw Error(ErrorKind::Parameter, "config built for " + std::string(to_string(cfg.kind)) + ", claim needs " +
                                              std::string(to_string(kind)));
}

void set_first_improvement(ClaimReport &report)
{
    for (const auto &rec : report.per_index)
        if (rec.improvement) {
            report.improvement = rec.improvement;
            return;
        }
}

// W_0 (or W_s after reversing the spine): the segment before attach point y,
// which sits at attach index `j`.
ClaimRecord end_record(const AttachmentConfig &cfg, const Spine &sp, int j, const std::vector<Vertex> &seg, int r,
                       int label)
{
    const auto uj = static_cast<std::size_t>(j);
    const Vertex y = cfg.attach_points[uj];
    const int k = cfg.k();
    const auto [m, M] = cfg.min_max_indices[uj];
    ClaimRecord rec;
    rec.index = label;
    rec.segment_size = static_cast<int>(seg.size());
    rec.required_bound = Rational(cfg.d_pprime[uj] + k + cfg.eps[uj], 2) + 2 * r;
    rec.satisfied = Rational(rec.segment_size) >= rec.required_bound;
    if (rec.satisfied) return rec;

    const std::vector<Vertex> tail = sp.slice(sp.pos(y), sp.size() - 1);
    std::vector<std::vector<Vertex>> candidates;
    if (r == 0) {
        candidates.push_back(concat({path_part(cfg, k, m), tail}));
        candidates.push_back(concat({path_part(cfg, 1, M), tail}));
    } else {
        const auto [w, w2] = extreme_neighbors(cfg, seg);
        candidates.push_back(concat({path_part(cfg, k, 1), sp.slice(sp.pos(w), sp.size() - 1)}));
        if (auto t = consecutive_pair(cfg, seg)) {
            const int at = sp.pos(seg[*t]);
            candidates.push_back(concat({sp.slice(0, at), {cfg.u1()}, sp.slice(at + 1, sp.size() - 1)}));
        }
        candidates.push_back(concat({sp.slice(0, sp.pos(w2)), path_part(cfg, 1, M), tail}));
    }
    rec.improvement = PathWitness{longest(candidates)};
    return rec;
}

} // namespace

AttachmentConfig make_config(const Graph &g, ClassKind kind, std::vector<Vertex> path, std::vector<Vertex> spine)
{
    const bool gamma = kind == ClassKind::Gamma;
    if (path.empty()) throw Error(ErrorKind::Structure, "empty induced path");
    if (!is_induced_path(g, path)) throw Error(ErrorKind::Structure, "path is not an induced path");
    VertexSet on_path{};
    for (Vertex v : path) on_path.insert(v);
    VertexSet on_spine{};
    for (Vertex v : spine) {
        if (v < 0 || v >= g.order() || on_spine.contains(v)) throw Error(ErrorKind::Spine, "spine repeats or leaves the graph");
        on_spine.insert(v);
    }
    if (on_spine != g.vertices() - on_path) throw Error(ErrorKind::Spine, "spine does not span g - V(P)");
    if (gamma ? !is_valid_cycle(g, spine) : !is_valid_path(g, spine))
        throw Error(ErrorKind::Spine, gamma ? "spine is not a cycle" : "spine is not a path");

    AttachmentConfig cfg;
    cfg.graph = g;
    cfg.kind = kind;
    cfg.path = PathWitness{std::move(path)};
    cfg.spine = std::move(spine);

    const Vertex u1 = cfg.u1();
    const VertexSet pprime = on_path - VertexSet{u1};
    const VertexSet anchor = pprime.empty() ? VertexSet{u1} : pprime;
    std::vector<int> is_attach(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : cfg.spine) {
        if ((g.neighbors(v) & anchor).empty()) continue;
        is_attach[static_cast<std::size_t>(v)] = 1;
        cfg.attach_points.push_back(v);
        cfg.eps.push_back(g.adjacent(v, u1) ? 1 : 0);
        cfg.d_pprime.push_back((g.neighbors(v) & pprime).size());
        int m = 0, M = 0;
        for (int i = 1; i <= cfg.k(); ++i) {
            if (!g.adjacent(v, cfg.path.vertices[static_cast<std::size_t>(i - 1)])) continue;
            if (m == 0) m = i;
            M = i;
        }
        cfg.min_max_indices.emplace_back(m, M);
    }

    const int s = cfg.s();
    const Spine sp(cfg.spine);
    if (gamma) {
        for (int j = 0; j < s; ++j) {
            const int from = sp.pos(cfg.attach_points[static_cast<std::size_t>(j)]);
            std::vector<Vertex> seg;
            for (int i = from + 1; !is_attach[static_cast<std::size_t>(sp.at(i))]; ++i) seg.push_back(sp.at(i));
            cfg.segments.push_back(std::move(seg));
        }
    } else {
        cfg.segments.emplace_back();
        for (Vertex v : cfg.spine) {
            if (is_attach[static_cast<std::size_t>(v)]) cfg.segments.emplace_back();
            else cfg.segments.back().push_back(v);
        }
    }
    for (const auto &seg : cfg.segments) {
        int r = 0;
        for (Vertex v : seg) r += g.adjacent(u1, v);
        cfg.r.push_back(r);
    }
    return cfg;
}

AttachmentConfig build_config(const Graph &g, int k, ClassKind kind, std::optional<Vertex> u1)
{
    const ClassParams params{k, kind};
    validate_params(g.order(), params);
    if (!connectivity_requirement(g, params))
        throw Error(ErrorKind::Structure, "connectivity below " + std::to_string(structural_floor(params)));
    if (u1 && (*u1 < 0 || *u1 >= g.order())) throw Error(ErrorKind::Parameter, "u1 out of range");
    if (!u1) {
        int best = -1;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) > best) {
                best = g.degree(v);
                u1 = v;
            }
    }
    auto path = first_induced_path_from(g, *u1, k);
    if (!path) throw Error(ErrorKind::Structure, "no induced path of order " + std::to_string(k) + " from u1");

    VertexSet kept = g.vertices();
    for (Vertex v : path->vertices) kept.erase(v);
    const Graph rest = induced_subgraph(g, kept);
    std::vector<Vertex> spine;
    if (kind == ClassKind::Gamma) {
        auto c = hamilton_cycle(rest);
        if (!c) throw Error(ErrorKind::Spine, "g - V(P) is not Hamiltonian");
        spine = normalise_cycle(to_original(c->vertices, kept));
    } else {
        auto p = hamilton_path(rest);
        if (!p) throw Error(ErrorKind::Spine, "g - V(P) is not traceable");
        spine = normalise_path(to_original(p->vertices, kept));
    }
    return make_config(g, kind, std::move(path->vertices), std::move(spine));
}

ClaimReport verify_gamma_claim(const AttachmentConfig &cfg)
{
    require_kind(cfg, ClassKind::Gamma);
    ClaimReport report;
    if (cfg.k() < 2) return report;
    const int s = cfg.s();
    if (s < 2) throw Error(ErrorKind::Structure, "segment claim needs at least two attach points");
    fill_chain(cfg, report);
    const Spine sp(cfg.spine);

    for (int j = 0; j < s; ++j) {
        const int jn = (j + 1) % s;
        const auto uj = static_cast<std::size_t>(j), un = static_cast<std::size_t>(jn);
        const Vertex a = cfg.attach_points[uj], b = cfg.attach_points[un];
        const auto &seg = cfg.segments[uj];
        const int r = cfg.r[uj];
        ClaimRecord rec;
        rec.index = j + 1;
        rec.segment_size = static_cast<int>(seg.size());
        rec.required_bound = interior_bound(cfg, j, jn, r);
        rec.satisfied = Rational(rec.segment_size) >= rec.required_bound;
        if (!rec.satisfied) {
            const auto [ma, Ma] = cfg.min_max_indices[uj];
            const auto [mb, Mb] = cfg.min_max_indices[un];
            const Vertex before_a = sp.at(sp.pos(a) - 1), after_b = sp.at(sp.pos(b) + 1);
            // b^+ .. a^-, empty when the spine is just a and b plus this segment.
            const std::vector<Vertex> rest = after_b == a ? std::vector<Vertex>{} : sp.forward(after_b, before_a);
            std::vector<std::vector<Vertex>> candidates;
            if (r == 0) {
                candidates.push_back(concat({{a}, path_part(cfg, ma, Mb), {b}, rest}));
                candidates.push_back(concat({{a}, path_part(cfg, Ma, mb), {b}, rest}));
            } else {
                const auto [w, w2] = extreme_neighbors(cfg, seg);
                if (auto t = consecutive_pair(cfg, seg)) {
                    const Vertex x = seg[*t], y = seg[*t + 1];
                    candidates.push_back(concat({sp.forward(y, x), {cfg.u1()}}));
                }
                candidates.push_back(concat({{a}, path_part(cfg, Ma, 1), sp.forward(w, before_a)}));
                candidates.push_back(concat({{b}, path_part(cfg, Mb, 1), sp.backward(w2, after_b)}));
            }
            rec.improvement = CycleWitness{longest(candidates)};
        }
        report.per_index.push_back(std::move(rec));
    }
    set_first_improvement(report);
    return report;
}

ClaimReport verify_pi_claims(const AttachmentConfig &cfg)
{
    require_kind(cfg, ClassKind::Pi);
    ClaimReport report;
    if (cfg.k() < 2) return report;
    const int s = cfg.s();
    if (s < 1) throw Error(ErrorKind::Structure, "segment claims need an attach point");
    fill_chain(cfg, report);
    const Spine sp(cfg.spine);

    for (int i = 1; i < s; ++i) {
        const auto ua = static_cast<std::size_t>(i - 1), ub = static_cast<std::size_t>(i);
        const Vertex a = cfg.attach_points[ua], b = cfg.attach_points[ub];
        const auto &seg = cfg.segments[static_cast<std::size_t>(i)];
        const int r = cfg.r[static_cast<std::size_t>(i)];
        ClaimRecord rec;
        rec.index = i;
        rec.segment_size = static_cast<int>(seg.size());
        rec.required_bound = interior_bound(cfg, i - 1, i, r);
        rec.satisfied = Rational(rec.segment_size) >= rec.required_bound;
        if (!rec.satisfied) {
            const auto [ma, Ma] = cfg.min_max_indices[ua];
            const auto [mb, Mb] = cfg.min_max_indices[ub];
            const std::vector<Vertex> head = sp.slice(0, sp.pos(a));
            const std::vector<Vertex> tail = sp.slice(sp.pos(b), sp.size() - 1);
            std::vector<std::vector<Vertex>> candidates;
            if (r == 0) {
                candidates.push_back(concat({head, path_part(cfg, ma, Mb), tail}));
                candidates.push_back(concat({head, path_part(cfg, Ma, mb), tail}));
            } else {
                const auto [w, w2] = extreme_neighbors(cfg, seg);
                if (auto t = consecutive_pair(cfg, seg)) {
                    const int at = sp.pos(seg[*t]);
                    candidates.push_back(concat({sp.slice(0, at), {cfg.u1()}, sp.slice(at + 1, sp.size() - 1)}));
                }
                candidates.push_back(concat({head, path_part(cfg, Ma, 1), sp.slice(sp.pos(w), sp.size() - 1)}));
                candidates.push_back(concat({sp.slice(0, sp.pos(w2)), path_part(cfg, 1, Mb), tail}));
            }
            rec.improvement = PathWitness{longest(candidates)};
        }
        report.per_index.push_back(std::move(rec));
    }

    report.per_index.push_back(end_record(cfg, sp, 0, cfg.segments.front(), cfg.r.front(), 0));
    // W_s is W_0 of the reversed spine.
    std::vector<Vertex> reversed(cfg.spine.rbegin(), cfg.spine.rend());
    const std::vector<Vertex> &last = cfg.segments.back();
    report.per_index.push_back(
        end_record(cfg, Spine(reversed), s - 1, std::vector<Vertex>(last.rbegin(), last.rend()), cfg.r.back(), s));
    set_first_improvement(report);
    return report;
}

ClaimReport degree_chain_audit(const AttachmentConfig &cfg)
{
    if (cfg.k() < 2) throw Error(ErrorKind::Parameter, "degree chain needs k >= 2");
    ClaimReport report;
    fill_chain(cfg, report);
    return report;
}

std::optional<CycleWitness> consecutive_neighbor_check(const AttachmentConfig &cfg)
{
    require_kind(cfg, ClassKind::Gamma);
    const Spine sp(cfg.spine);
    const Vertex u = cfg.u1();
    for (int i = 0; i < sp.size(); ++i) {
        const Vertex x = sp.at(i), y = sp.at(i + 1);
        if (cfg.graph.adjacent(u, x) && cfg.graph.adjacent(u, y)) return CycleWitness{concat({sp.forward(y, x), {u}})};
    }
    return std::nullopt;
}

nlohmann::json to_json(const Walk &walk)
{
    return {{"kind", std::holds_alternative<CycleWitness>(walk) ? "cycle" : "path"}, {"vertices", walk_vertices(walk)}};
}

nlohmann::json to_json(const AttachmentConfig &cfg)
{
    nlohmann::json mm = nlohmann::json::array();
    for (auto [m, M] : cfg.min_max_indices) mm.push_back({m, M});
    return {
        {"class", std::string(to_string(cfg.kind))},
        {"k", cfg.k()},
        {"u1", cfg.u1()},
        {"path", cfg.path.vertices},
        {"spine", cfg.spine},
        {"attach_points", cfg.attach_points},
        {"eps", cfg.eps},
        {"d_pprime", cfg.d_pprime},
        {"segments", cfg.segments},
        {"r", cfg.r},
        {"min_max_indices", mm},
    };
}

nlohmann::json to_json(const ClaimReport &report)
{
    nlohmann::json records = nlohmann::json::array();
    for (const auto &rec : report.per_index) {
        records.push_back({
            {"index", rec.index},
            {"segment_size", rec.segment_size},
            {"required_bound", format_rational(rec.required_bound)},
            {"satisfied", rec.satisfied},
            {"improvement", rec.improvement ? to_json(*rec.improvement) : nlohmann::json(nullptr)},
        });
    }
    return {
        {"per_index", records},
        {"edge_count_pprime_spine", report.edge_count_pprime_spine},
        {"edge_count_lower_bound", report.edge_count_lower_bound},
        {"edge_identity_holds", report.edge_identity_holds},
        {"delta_identity_holds",
         report.delta_identity_holds ? nlohmann::json(*report.delta_identity_holds) : nlohmann::json(nullptr)},
        {"summation_holds", report.summation_holds},
        {"degree_chain_holds", report.degree_chain_holds},
        {"improvement", report.improvement ? to_json(*report.improvement) : nlohmann::json(nullptr)},
    };
}

} // namespace hamclass
