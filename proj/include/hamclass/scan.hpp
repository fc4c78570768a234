#pragma once

#include "hamclass/bounds.hpp"
#include "hamclass/params.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamclass {

enum class Source { InternalGenerator, Stream };

struct ScanSpec {
    int n = 0;
    ClassParams params;
    Source source = Source::InternalGenerator;
    RuleSet rules = RuleSet::standard();
};

struct StreamError {
    std::size_t line = 0;
    std::string message;
};

struct EmptinessReport {
    ScanSpec spec;
    /// Graphs that entered the pipeline. Under the internal generator, graphs
    /// above `generator_max_degree` are never produced and are not counted.
    std::size_t total_examined = 0;
    std::map<Rule, std::size_t> pruned_per_rule;
    std::size_t fully_decided = 0;
    std::vector<std::string> members_found; // graph6, sorted
    double wall_seconds = 0.0;
    std::vector<StreamError> stream_errors;
    std::optional<int> generator_max_degree;

    [[nodiscard]] std::size_t pruned() const;
};

/// Degree ceiling the enabled, hereditary rules impose on every member; absent
/// when no such rule is enabled.
std::optional<int> hereditary_degree_ceiling(int n, ClassParams params, RuleSet rules);

/// Staged scan: first violated rule, otherwise the exact membership decision.
/// Stream input: graph6 lines, blank lines and a ">>graph6<<" header skipped;
/// malformed records and records of another order are tallied, not fatal.
/// Threads: HAMCLASS_THREADS, else hardware concurrency.
/// Throws Parameter for invalid (n, params), GeneratorSize for n > 10 with the
/// generator, Parse when a stream scan has no input.
EmptinessReport scan(const ScanSpec &spec, std::istream *input = nullptr);

int scan_threads();

std::string_view to_string(Source source) noexcept;
nlohmann::json to_json(const EmptinessReport &report);

} // namespace hamclass
