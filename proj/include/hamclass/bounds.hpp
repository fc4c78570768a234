#pragma once

#include "hamclass/graph.hpp"
#include "hamclass/params.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamclass {

using Rational = boost::rational<std::int64_t>;

/// Necessary conditions for class membership, in the order the scan applies them.
enum class Rule {
    OrderThreshold,      // n below the emptiness threshold (k >= 2)
    DegreeContradiction, // max-degree ceiling below the min-degree floor (k >= 2)
    MinDegree,
    MaxDegree,
    HoltonSheehan,       // Gamma, k = 1: max degree at most (n - 4) / 2
    Connectivity,
};

std::string_view to_string(Rule rule) noexcept;
std::optional<Rule> parse_rule(std::string_view name) noexcept; // "max_degree" etc.

/// "7/2", or "5" for integral values.
std::string format_rational(const Rational &q);

class RuleSet {
public:
    static RuleSet none() { return RuleSet(0); }
    /// Every proven rule; the Holton-Sheehan rule stays off.
    static RuleSet standard() { return RuleSet(kMinDegree | kConnectivity | kMaxDegree | kOrderThreshold | kStructuralK1); }
    static RuleSet all() { return RuleSet(standard().bits_ | kHoltonSheehan); }

    [[nodiscard]] bool min_degree() const noexcept { return bits_ & kMinDegree; }
    [[nodiscard]] bool connectivity() const noexcept { return bits_ & kConnectivity; }
    [[nodiscard]] bool max_degree() const noexcept { return bits_ & kMaxDegree; }
    [[nodiscard]] bool order_threshold() const noexcept { return bits_ & kOrderThreshold; }
    [[nodiscard]] bool holton_sheehan() const noexcept { return bits_ & kHoltonSheehan; }
    /// Applies the min-degree and connectivity floors at k = 1 as well.
    [[nodiscard]] bool structural_k1() const noexcept { return bits_ & kStructuralK1; }

    RuleSet &set_min_degree(bool on) { return flip(kMinDegree, on); }
    RuleSet &set_connectivity(bool on) { return flip(kConnectivity, on); }
    RuleSet &set_max_degree(bool on) { return flip(kMaxDegree, on); }
    RuleSet &set_order_threshold(bool on) { return flip(kOrderThreshold, on); }
    RuleSet &set_holton_sheehan(bool on) { return flip(kHoltonSheehan, on); }
    RuleSet &set_structural_k1(bool on) { return flip(kStructuralK1, on); }

    /// Names as accepted by the command line: min-degree, connectivity,
    /// max-degree, order-threshold, holton-sheehan, k1-structural.
    [[nodiscard]] std::vector<std::string_view> names() const;
    bool operator==(const RuleSet &) const = default;

private:
    enum : unsigned {
        kMinDegree = 1,
        kConnectivity = 2,
        kMaxDegree = 4,
        kOrderThreshold = 8,
        kHoltonSheehan = 16,
        kStructuralK1 = 32,
    };
    explicit RuleSet(unsigned bits) : bits_(bits) {}
    RuleSet &flip(unsigned bit, bool on)
    {
        bits_ = on ? (bits_ | bit) : (bits_ & ~bit);
        return *this;
    }
    unsigned bits_;
};

/// Largest maximum degree a class member of order n can have:
/// (n - k^2 + 1) / 2 for Gamma, (n - k^2) / 2 for Pi.
Rational theorem_max_degree(int n, ClassParams params);

/// Orders strictly below this value admit no member (proven for k >= 2):
/// k^2 + 2k + 3 for Gamma, k^2 + 2k + 2 for Pi.
int emptiness_threshold(ClassParams params);

/// Minimum degree and connectivity every member must have: k + 2 (Gamma), k + 1 (Pi).
int structural_floor(ClassParams params);

Rational holton_sheehan_max_degree(int n);

struct BoundReport {
    int min_degree_required = 0;
    Rational max_degree_allowed;
    int connectivity_required = 0;
    int order_threshold = 0;
    std::vector<Rule> violated;

    [[nodiscard]] bool prunes() const noexcept { return !violated.empty(); }
    [[nodiscard]] bool violates(Rule r) const;
};

/// Rules decidable from (n, params) alone.
BoundReport parameter_bounds(int n, ClassParams params, RuleSet rules = RuleSet::standard());

/// All enabled rules measured on g. Any violation certifies non-membership.
BoundReport bound_pipeline(const Graph &g, ClassParams params, RuleSet rules = RuleSet::standard());

/// First violated rule in scan order, evaluating the cheap rules before connectivity.
std::optional<Rule> first_violation(const Graph &g, ClassParams params, RuleSet rules);

} // namespace hamclass
