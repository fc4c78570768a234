#include "hamclass/certificate.hpp"

#include "hamclass/error.hpp"
#include "hamclass/graph6.hpp"
#include "hamclass/walks.hpp"

#include <algorithm>

namespace hamclass {

std::string_view to_string(RefutationReason reason) noexcept
{
    switch (reason) {
    case RefutationReason::WrongLongestWalkLength: return "wrong_length";
    case RefutationReason::BadDeletionSet: return "bad_deletion_set";
    case RefutationReason::None: break;
    }
    return "none";
}

namespace {

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

bool spans(const Graph &g, const std::vector<Vertex> &walk, VertexSet expected, ClassKind kind)
{
    VertexSet seen{};
    for (Vertex v : walk) {
        if (v < 0 || v >= g.order()) return false;
        seen.insert(v);
    }
    if (seen != expected || static_cast<int>(walk.size()) != expected.size()) return false;
    return kind == ClassKind::Gamma ? is_valid_cycle(g, walk) : is_valid_path(g, walk);
}

bool has_spanning_walk(const Graph &h, ClassKind kind)
{
    return kind == ClassKind::Gamma ? hamilton_cycle(h).has_value() : hamilton_path(h).has_value();
}

int exact_longest(const Graph &g, ClassKind kind)
{
    return kind == ClassKind::Gamma ? circumference(g).length : detour_order(g).order;
}

// The witness shows found_length is attained; a search is needed only when
// it is below n, to exclude anything longer.
bool longest_length_confirmed(const Graph &g, ClassKind kind, int found, const std::vector<Vertex> *walk)
{
    const int n = g.order();
    if (walk) {
        if (static_cast<int>(walk->size()) != found) return false;
        VertexSet on{};
        for (Vertex v : *walk) {
            if (v < 0 || v >= n) return false;
            on.insert(v);
        }
        if (!spans(g, *walk, on, kind)) return false;
    } else if (found != 0 || kind != ClassKind::Gamma) {
        return false;
    }
    return found == n || exact_longest(g, kind) == found;
}

} // namespace

Certificate certify(const Graph &g, ClassParams params, bool emit_witness)
{
    const MembershipVerdict verdict = membership(g, params, {.collect_deletion_walks = emit_witness});
    Certificate c;
    c.graph6 = write_graph6(g);
    c.kind = params.kind;
    c.k = params.k;
    c.member = verdict.member();
    c.reason = verdict.reason;
    c.found_length = verdict.found_length;
    if (verdict.bad_set) c.witness_set = verdict.bad_set->members();
    if (c.member) {
        c.witness_count = binomial(g.order(), params.k);
        if (emit_witness) {
            c.witness_walks.emplace();
            for (const Walk &w : verdict.deletion_walks) c.witness_walks->push_back(walk_vertices(w));
        }
    } else {
        c.witness_walks.emplace();
        if (verdict.longest) c.witness_walks->push_back(walk_vertices(*verdict.longest));
        c.witness_count = c.witness_walks->size();
    }
    return c;
}

bool verify_certificate(const Certificate &cert)
{
    const Graph g = parse_graph6(cert.graph6);
    const int n = g.order();
    const ClassParams params{cert.k, cert.kind};
    try {
        validate_params(n, params);
    } catch (const Error &) {
        return false;
    }
    const int target = n - cert.k;

    if (cert.member) {
        if (cert.reason != RefutationReason::None || cert.witness_set || cert.found_length != target) return false;
        if (cert.witness_count != binomial(n, cert.k)) return false;
        if (cert.witness_walks && cert.witness_walks->size() != cert.witness_count) return false;
        bool ok = true;
        std::size_t i = 0;
        for_each_k_subset(n, cert.k, [&](VertexSet removed) {
            const VertexSet kept = g.vertices() - removed;
            if (cert.witness_walks) ok = spans(g, (*cert.witness_walks)[i++], kept, cert.kind);
            else ok = has_spanning_walk(induced_subgraph(g, kept), cert.kind);
            return ok;
        });
        return ok && exact_longest(g, cert.kind) == target;
    }

    if (!cert.witness_walks || cert.witness_walks->size() > 1 || cert.witness_count != cert.witness_walks->size())
        return false;
    const std::vector<Vertex> *walk = cert.witness_walks->empty() ? nullptr : &cert.witness_walks->front();
    switch (cert.reason) {
    case RefutationReason::WrongLongestWalkLength:
        if (cert.witness_set || cert.found_length == target) return false;
        return longest_length_confirmed(g, cert.kind, cert.found_length, walk);
    case RefutationReason::BadDeletionSet: {
        if (!cert.witness_set || static_cast<int>(cert.witness_set->size()) != cert.k) return false;
        VertexSet removed{};
        for (Vertex v : *cert.witness_set) {
            if (v < 0 || v >= n || removed.contains(v)) return false;
            removed.insert(v);
        }
        if (cert.found_length != target) return false;
        if (has_spanning_walk(induced_subgraph(g, g.vertices() - removed), cert.kind)) return false;
        return longest_length_confirmed(g, cert.kind, cert.found_length, walk);
    }
    case RefutationReason::None: break;
    }
    return false;
}

nlohmann::json to_json(const Certificate &c)
{
    nlohmann::json j;
    j["graph6"] = c.graph6;
    j["class"] = std::string(to_string(c.kind));
    j["k"] = c.k;
    j["verdict"] = c.member ? "member" : "refuted";
    j["reason"] = c.reason == RefutationReason::None ? nlohmann::json(nullptr) : nlohmann::json(std::string(to_string(c.reason)));
    j["found_length"] = c.found_length;
    j["witness_set"] = c.witness_set ? nlohmann::json(*c.witness_set) : nlohmann::json(nullptr);
    j["witness_walks"] = c.witness_walks ? nlohmann::json(*c.witness_walks) : nlohmann::json(nullptr);
    j["witness_count"] = c.witness_count;
    return j;
}

Certificate certificate_from_json(const nlohmann::json &j)
{
    try {
        Certificate c;
        c.graph6 = j.at("graph6").get<std::string>();
        auto kind = parse_class_kind(j.at("class").get<std::string>());
        if (!kind) throw Error(ErrorKind::Parse, "unknown class");
        c.kind = *kind;
        c.k = j.at("k").get<int>();
        const std::string verdict = j.at("verdict").get<std::string>();
        if (verdict != "member" && verdict != "refuted") throw Error(ErrorKind::Parse, "unknown verdict " + verdict);
        c.member = verdict == "member";
        const auto &reason = j.at("reason");
        if (reason.is_null()) c.reason = RefutationReason::None;
        else if (reason == "wrong_length") c.reason = RefutationReason::WrongLongestWalkLength;
        else if (reason == "bad_deletion_set") c.reason = RefutationReason::BadDeletionSet;
        else throw Error(ErrorKind::Parse, "unknown reason");
        c.found_length = j.at("found_length").get<int>();
        if (!j.at("witness_set").is_null()) c.witness_set = j.at("witness_set").get<std::vector<Vertex>>();
        if (!j.at("witness_walks").is_null())
            c.witness_walks = j.at("witness_walks").get<std::vector<std::vector<Vertex>>>();
        c.witness_count = j.at("witness_count").get<std::size_t>();
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("certificate: ") + e.what());
    }
}

std::string to_line(const Certificate &cert)
{
    return to_json(cert).dump();
}

Certificate parse_certificate(std::string_view line)
{
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(ErrorKind::Parse, "certificate is not a JSON object");
    return certificate_from_json(j);
}

} // namespace hamclass
