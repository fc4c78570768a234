#include "hamclass/scan.hpp"

#include "hamclass/error.hpp"
#include "hamclass/generate.hpp"
#include "hamclass/graph6.hpp"
#include "hamclass/membership.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <istream>
#include <thread>

namespace hamclass {

std::size_t EmptinessReport::pruned() const
{
    std::size_t total = 0;
    for (const auto &[rule, count] : pruned_per_rule) total += count;
    return total;
}

std::string_view to_string(Source source) noexcept
{
    return source == Source::InternalGenerator ? "gen" : "stream";
}

int scan_threads()
{
    if (const char *env = std::getenv("HAMCLASS_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::optional<int> hereditary_degree_ceiling(int n, ClassParams params, RuleSet rules)
{
    std::optional<Rational> cap;
    if (rules.max_degree()) cap = theorem_max_degree(n, params);
    if (rules.holton_sheehan() && params.kind == ClassKind::Gamma && params.k == 1) {
        const Rational hs = holton_sheehan_max_degree(n);
        cap = cap ? std::min(*cap, hs) : hs;
    }
    if (!cap) return std::nullopt;
    // floor of a rational with positive denominator
    const auto num = cap->numerator(), den = cap->denominator();
    return static_cast<int>(num >= 0 ? num / den : -((-num + den - 1) / den));
}

namespace {

struct Partial {
    std::map<Rule, std::size_t> pruned;
    std::size_t decided = 0;
    std::vector<std::string> members;
};

Partial process(const std::vector<Graph> &graphs, std::size_t begin, std::size_t end, const ScanSpec &spec)
{
    Partial p;
    for (std::size_t i = begin; i < end; ++i) {
        const Graph &g = graphs[i];
        if (auto rule = first_violation(g, spec.params, spec.rules)) {
            ++p.pruned[*rule];
            continue;
        }
        ++p.decided;
        if (membership(g, spec.params, {.collect_deletion_walks = false}).member()) p.members.push_back(write_graph6(g));
    }
    return p;
}

class Pipeline {
public:
    Pipeline(const ScanSpec &spec, EmptinessReport &report) : spec_(spec), report_(report), threads_(scan_threads()) {}

    void add(const Graph &g)
    {
        batch_.push_back(g);
        if (batch_.size() >= kBatch) flush();
    }

    void flush()
    {
        if (batch_.empty()) return;
        report_.total_examined += batch_.size();
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads_), batch_.size());
        std::vector<Partial> parts(workers);
        if (workers == 1) {
            parts[0] = process(batch_, 0, batch_.size(), spec_);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (batch_.size() + workers - 1) / workers;
            for (std::size_t w = 0; w < workers; ++w) {
                const std::size_t b = std::min(batch_.size(), w * chunk), e = std::min(batch_.size(), b + chunk);
                pool.emplace_back([&, w, b, e] { parts[w] = process(batch_, b, e, spec_); });
            }
            for (auto &t : pool) t.join();
        }
        for (auto &p : parts) {
            for (const auto &[rule, count] : p.pruned) report_.pruned_per_rule[rule] += count;
            report_.fully_decided += p.decided;
            report_.members_found.insert(report_.members_found.end(), p.members.begin(), p.members.end());
        }
        batch_.clear();
    }

private:
    static constexpr std::size_t kBatch = 8192;
    const ScanSpec &spec_;
    EmptinessReport &report_;
    int threads_;
    std::vector<Graph> batch_;
};

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

EmptinessReport scan(const ScanSpec &spec, std::istream *input)
{
    validate_params(spec.n, spec.params);
    if (spec.source == Source::InternalGenerator && (spec.n < 1 || spec.n > kMaxGeneratedOrder))
        throw Error(ErrorKind::GeneratorSize, "internal generator supports n <= 10; pipe graph6 records instead");
    if (spec.source == Source::Stream && !input) throw Error(ErrorKind::Parse, "stream scan needs an input");

    const auto start = std::chrono::steady_clock::now();
    EmptinessReport report;
    report.spec = spec;
    Pipeline pipeline(spec, report);

    if (spec.source == Source::InternalGenerator) {
        report.generator_max_degree = hereditary_degree_ceiling(spec.n, spec.params, spec.rules);
        GenerationConstraints constraints;
        constraints.max_degree = report.generator_max_degree;
        generate_small(spec.n, constraints, [&](const Graph &g) { pipeline.add(g); });
    } else {
        std::string line;
        std::size_t number = 0;
        while (std::getline(*input, line)) {
            ++number;
            std::string record = trim(line);
            if (record.rfind(">>graph6<<", 0) == 0) record = record.substr(10);
            if (record.empty()) continue;
            try {
                Graph g = parse_graph6(record);
                if (g.order() != spec.n) {
                    report.stream_errors.push_back(
                        {number, "order " + std::to_string(g.order()) + " differs from n = " + std::to_string(spec.n)});
                    continue;
                }
                pipeline.add(g);
            } catch (const Error &e) {
                report.stream_errors.push_back({number, e.what()});
            }
        }
    }
    pipeline.flush();
    std::sort(report.members_found.begin(), report.members_found.end());
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const EmptinessReport &r)
{
    nlohmann::json rules = nlohmann::json::array();
    for (auto name : r.spec.rules.names()) rules.push_back(std::string(name));
    nlohmann::json pruned = nlohmann::json::object();
    for (const auto &[rule, count] : r.pruned_per_rule) pruned[std::string(to_string(rule))] = count;
    nlohmann::json errors = nlohmann::json::array();
    for (const auto &e : r.stream_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
    return {
        {"spec",
         {{"n", r.spec.n},
          {"k", r.spec.params.k},
          {"class", std::string(to_string(r.spec.params.kind))},
          {"source", std::string(to_string(r.spec.source))},
          {"prune_rules", rules}}},
        {"total_examined", r.total_examined},
        {"pruned_per_rule", pruned},
        {"fully_decided", r.fully_decided},
        {"members_found", r.members_found},
        {"wall_seconds", r.wall_seconds},
        {"stream_errors", errors},
        {"generator_max_degree", r.generator_max_degree ? nlohmann::json(*r.generator_max_degree) : nlohmann::json(nullptr)},
    };
}

} // namespace hamclass
