// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria. Every comparison is exact; no tolerances apply.

#include "hamclass/bounds.hpp"
#include "hamclass/canon.hpp"
#include "hamclass/certificate.hpp"
#include "hamclass/graph6.hpp"
#include "hamclass/membership.hpp"
#include "hamclass/scan.hpp"
#include "hamclass/surgery.hpp"
#include "hamclass/walks.hpp"
#include "support/configs.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hamclass;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string &why)
    {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
};

// Members met anywhere in the suite, for the structural consequence check.
std::vector<std::pair<Graph, ClassParams>> g_members;

Graph kneser_5_2()
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

void census(Outcome &o)
{
    const ClassParams params{1, ClassKind::Gamma};
    for (int n = 4; n <= 10; ++n) {
        ScanSpec spec;
        spec.n = n;
        spec.params = params;
        spec.rules = RuleSet::all();
        const EmptinessReport fast = scan(spec);
        if (n <= 9) {
            spec.rules = RuleSet::standard();
            const EmptinessReport plain = scan(spec);
            if (plain.members_found != fast.members_found) o.fail("rule sets disagree at n=" + std::to_string(n));
            if (!fast.members_found.empty()) o.fail("member at n=" + std::to_string(n));
            o.detail << "n=" << n << ":0 ";
            continue;
        }
        if (fast.members_found.size() != 1) {
            o.fail("n=10 found " + std::to_string(fast.members_found.size()) + " members");
            continue;
        }
        const Graph member = parse_graph6(fast.members_found[0]);
        if (canonical_form(member) != canonical_form(kneser_5_2())) o.fail("n=10 member is not K(5,2)");
        g_members.emplace_back(member, params);
        o.detail << "n=10:" << fast.members_found[0] << ' ';
    }
}

void contradiction(Outcome &o)
{
    int pairs = 0;
    for (int k = 2; k <= 20; ++k)
        for (ClassKind kind : {ClassKind::Gamma, ClassKind::Pi}) {
            const ClassParams params{k, kind};
            const int threshold = k * k + 2 * k + (kind == ClassKind::Gamma ? 3 : 2);
            if (emptiness_threshold(params) != threshold) o.fail("threshold k=" + std::to_string(k));
            for (int n = 1; n < threshold; ++n) {
                ++pairs;
                const BoundReport r = parameter_bounds(n, params);
                // 2 * ceiling = n - k^2 + 1 (Gamma) or n - k^2 (Pi); floor = k + 2 or k + 1.
                const int twice_ceiling = n - k * k + (kind == ClassKind::Gamma ? 1 : 0);
                const int floor = k + (kind == ClassKind::Gamma ? 2 : 1);
                if (twice_ceiling >= 2 * floor) o.fail("oracle finds no contradiction");
                if (!(r.max_degree_allowed < Rational(r.min_degree_required)) || !r.violates(Rule::DegreeContradiction))
                    o.fail("no contradiction at k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
            // The first order at the threshold is no longer contradictory.
            if (parameter_bounds(threshold, params).violates(Rule::DegreeContradiction))
                o.fail("contradiction persists at the threshold, k=" + std::to_string(k));
        }
    o.detail << pairs << " (k,n) pairs";
}

void degree_bound(Outcome &o)
{
    std::size_t decided = 0, members = 0;
    for (const Graph &g : corpus::up_to(8)) {
        const int n = g.order();
        int delta = 0;
        for (Vertex v = 0; v < n; ++v) delta = std::max(delta, g.degree(v));
        for (int k = 1; k <= 2; ++k)
            for (ClassKind kind : {ClassKind::Gamma, ClassKind::Pi}) {
                if (kind == ClassKind::Gamma ? n - k < 3 : n - k < 1) continue;
                const MembershipVerdict v = membership(g, {k, kind}, {.collect_deletion_walks = false});
                ++decided;
                if (!v.member()) continue;
                ++members;
                g_members.emplace_back(g, ClassParams{k, kind});
                const int twice_bound = n - k * k + (kind == ClassKind::Gamma ? 1 : 0);
                if (2 * delta > twice_bound) o.fail("degree bound broken by " + write_graph6(g));
                if (k == 2) o.fail("k=2 member " + write_graph6(g));
            }
    }
    o.detail << decided << " decisions, " << members << " members";
}

void oracles(Outcome &o)
{
    std::size_t count = 0;
    for (const Graph &g : corpus::up_to(7)) {
        ++count;
        if (circumference(g).length != circumference_dp_oracle(g)) o.fail("mismatch on " + write_graph6(g));
    }
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<int> order(8, 14);
    std::uniform_real_distribution<double> density(0.1, 0.7);
    for (int i = 0; i < 500; ++i, ++count) {
        const Graph g = oracle::random_connected_graph(rng, order(rng), density(rng));
        if (circumference(g).length != circumference_dp_oracle(g)) o.fail("mismatch on " + write_graph6(g));
    }
    o.detail << count << " graphs";
}

bool walk_is_valid(const Graph &g, const Walk &w)
{
    if (const auto *c = std::get_if<CycleWitness>(&w)) return is_valid_cycle(g, c->vertices);
    return is_valid_path(g, std::get<PathWitness>(w).vertices);
}

void contrapositive(Outcome &o)
{
    std::vector<AttachmentConfig> corpus = configs::random(77, 300, 7, 12);
    for (auto &cfg : configs::tight(8)) corpus.push_back(std::move(cfg));
    std::size_t violated = 0, tight = 0;
    for (const AttachmentConfig &cfg : corpus) {
        const Graph &g = cfg.graph;
        const int n = g.order(), k = cfg.k();
        if (n > 12 || k < 2 || k > 3) o.fail("config outside n <= 12, k in {2,3}");
        const ClaimReport report = configs::claims(cfg);
        const int longest = configs::longest_walk(g, cfg.kind);
        if (longest == n - k) {
            ++tight;
            if (!report.all_satisfied()) o.fail("tight config violated on " + write_graph6(g));
        }
        bool any = false;
        for (const ClaimRecord &rec : report.per_index) {
            if (rec.satisfied) continue;
            any = true;
            if (!rec.improvement) {
                o.fail("violation without improvement");
                continue;
            }
            if (!walk_is_valid(g, *rec.improvement)) o.fail("invalid improvement on " + write_graph6(g));
            if (static_cast<int>(walk_vertices(*rec.improvement).size()) < n - k + 1) o.fail("improvement too short");
        }
        if (any) {
            ++violated;
            if (longest <= n - k) o.fail("exact solver finds no longer walk on " + write_graph6(g));
        }
    }
    if (corpus.size() < 100) o.fail("corpus too small");
    if (violated < 10) o.fail("fewer than 10 violated configs");
    o.detail << corpus.size() << " configs, " << violated << " violated, " << tight << " tight";
}

void consequences(Outcome &o)
{
    std::set<std::string> seen;
    for (const auto &[g, params] : g_members) {
        seen.insert(write_graph6(g));
        if (!connectivity_requirement(g, params)) o.fail("connectivity requirement fails on " + write_graph6(g));
        if (params.k >= 2 && check_induced_path_property(g, params.k)) o.fail("induced path property fails");
    }
    if (g_members.empty()) o.fail("no members recorded");
    o.detail << g_members.size() << " member records, " << seen.size() << " distinct graphs";
}

void formats(Outcome &o)
{
    std::vector<Graph> graphs = corpus::up_to(7);
    std::mt19937_64 rng(64);
    std::uniform_int_distribution<int> order(1, 64);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) graphs.push_back(oracle::random_graph(rng, order(rng), density(rng)));

    std::size_t certified = 0, skipped = 0;
    for (const Graph &g : graphs) {
        const std::string text = write_graph6(g);
        if (text != oracle::reference_graph6(oracle::matrix_of(g))) o.fail("encoding differs from reference");
        if (parse_graph6(text) != g) o.fail("graph6 round trip on " + text);
        const int n = g.order();
        for (ClassKind kind : {ClassKind::Gamma, ClassKind::Pi}) {
            // Longest-path certificates only over the exhaustive corpus; exact
            // detour search on large sparse random graphs is not practical.
            if (kind == ClassKind::Pi && n > 7) continue;
            if (n < (kind == ClassKind::Gamma ? 4 : 2)) {
                ++skipped; // no class at k = 1 has members this small
                continue;
            }
            const Certificate cert = certify(g, {1, kind}, true);
            ++certified;
            if (!verify_certificate(cert)) o.fail("certificate rejected for " + text);
            if (parse_certificate(to_line(cert)) != cert) o.fail("certificate line round trip for " + text);
        }
    }
    o.detail << graphs.size() << " graphs, " << certified << " certificates, " << skipped << " (graph, class) pairs below the smallest admissible order";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
        {"hypohamiltonian census n=4..10", census},
        {"emptiness by parameter contradiction k=2..20", contradiction},
        {"degree bound on the n<=8 corpus, k in {1,2}", degree_bound},
        {"circumference equals the DP oracle", oracles},
        {"segment inequality contrapositive", contrapositive},
        {"structural consequences for members", consequences},
        {"graph6 and certificate round trips", formats},
    };
    int failed = 0, index = 0;
    for (const auto &[name, run] : criteria) {
        ++index;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::printf("%s criterion %d: %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), seconds,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed;
}
