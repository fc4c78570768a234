#include "hamclass/bounds.hpp"

#include "hamclass/error.hpp"

#include <algorithm>
#include <string>

namespace hamclass {

std::string_view to_string(ClassKind kind) noexcept
{
    return kind == ClassKind::Gamma ? "gamma" : "pi";
}

std::optional<ClassKind> parse_class_kind(std::string_view text) noexcept
{
    if (text == "gamma") return ClassKind::Gamma;
    if (text == "pi") return ClassKind::Pi;
    return std::nullopt;
}

void validate_params(int n, ClassParams params)
{
    const int floor = params.kind == ClassKind::Gamma ? 3 : 1;
    if (params.k < 1 || n - params.k < floor)
        throw Error(ErrorKind::Parameter, "k = " + std::to_string(params.k) + " invalid for " +
                                              std::string(to_string(params.kind)) + " at n = " + std::to_string(n));
}

std::string_view to_string(Rule rule) noexcept
{
    switch (rule) {
    case Rule::OrderThreshold: return "order_threshold";
    case Rule::DegreeContradiction: return "degree_contradiction";
    case Rule::MinDegree: return "min_degree";
    case Rule::MaxDegree: return "max_degree";
    case Rule::HoltonSheehan: return "holton_sheehan";
    case Rule::Connectivity: return "connectivity";
    }
    return "unknown";
}

std::optional<Rule> parse_rule(std::string_view name) noexcept
{
    for (Rule r : {Rule::OrderThreshold, Rule::DegreeContradiction, Rule::MinDegree, Rule::MaxDegree, Rule::HoltonSheehan,
                   Rule::Connectivity})
        if (to_string(r) == name) return r;
    return std::nullopt;
}

std::string format_rational(const Rational &q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::vector<std::string_view> RuleSet::names() const
{
    std::vector<std::string_view> out;
    if (min_degree()) out.emplace_back("min-degree");
    if (connectivity()) out.emplace_back("connectivity");
    if (max_degree()) out.emplace_back("max-degree");
    if (order_threshold()) out.emplace_back("order-threshold");
    if (holton_sheehan()) out.emplace_back("holton-sheehan");
    if (structural_k1()) out.emplace_back("k1-structural");
    return out;
}

Rational theorem_max_degree(int n, ClassParams params)
{
    const std::int64_t k = params.k;
    const std::int64_t top = n - k * k + (params.kind == ClassKind::Gamma ? 1 : 0);
    return {top, 2};
}

int emptiness_threshold(ClassParams params)
{
    const int k = params.k;
    return k * k + 2 * k + (params.kind == ClassKind::Gamma ? 3 : 2);
}

int structural_floor(ClassParams params)
{
    return params.k + (params.kind == ClassKind::Gamma ? 2 : 1);
}

Rational holton_sheehan_max_degree(int n)
{
    return {n - 4, 2};
}

bool BoundReport::violates(Rule r) const
{
    return std::find(violated.begin(), violated.end(), r) != violated.end();
}

namespace {

bool structural_rules_apply(ClassParams params, RuleSet rules)
{
    return params.k >= 2 || rules.structural_k1();
}

bool holton_sheehan_applies(ClassParams params, RuleSet rules)
{
    return rules.holton_sheehan() && params.kind == ClassKind::Gamma && params.k == 1;
}

} // namespace

BoundReport parameter_bounds(int n, ClassParams params, RuleSet rules)
{
    BoundReport r;
    r.min_degree_required = structural_floor(params);
    r.connectivity_required = structural_floor(params);
    r.max_degree_allowed = theorem_max_degree(n, params);
    r.order_threshold = emptiness_threshold(params);
    if (params.k >= 2) {
        if (rules.order_threshold() && n < r.order_threshold) r.violated.push_back(Rule::OrderThreshold);
        if (rules.min_degree() && rules.max_degree() && r.max_degree_allowed < r.min_degree_required)
            r.violated.push_back(Rule::DegreeContradiction);
    }
    return r;
}

BoundReport bound_pipeline(const Graph &g, ClassParams params, RuleSet rules)
{
    const int n = g.order();
    BoundReport r = parameter_bounds(n, params, rules);
    const DegreeProfile degrees = degree_profile(g);
    const bool structural = structural_rules_apply(params, rules);
    if (rules.min_degree() && structural && degrees.min_degree < r.min_degree_required)
        r.violated.push_back(Rule::MinDegree);
    if (rules.max_degree() && Rational(degrees.max_degree) > r.max_degree_allowed) r.violated.push_back(Rule::MaxDegree);
    if (holton_sheehan_applies(params, rules) && Rational(degrees.max_degree) > holton_sheehan_max_degree(n))
        r.violated.push_back(Rule::HoltonSheehan);
    if (rules.connectivity() && structural && (n < 2 || vertex_connectivity(g) < r.connectivity_required))
        r.violated.push_back(Rule::Connectivity);
    return r;
}

std::optional<Rule> first_violation(const Graph &g, ClassParams params, RuleSet rules)
{
    const int n = g.order();
    if (params.k >= 2) {
        if (rules.order_threshold() && n < emptiness_threshold(params)) return Rule::OrderThreshold;
        if (rules.min_degree() && rules.max_degree() && theorem_max_degree(n, params) < structural_floor(params))
            return Rule::DegreeContradiction;
    }
    const bool structural = structural_rules_apply(params, rules);
    int lo = n, hi = 0;
    for (Vertex v = 0; v < n; ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    if (rules.min_degree() && structural && lo < structural_floor(params)) return Rule::MinDegree;
    if (rules.max_degree() && Rational(hi) > theorem_max_degree(n, params)) return Rule::MaxDegree;
    if (holton_sheehan_applies(params, rules) && Rational(hi) > holton_sheehan_max_degree(n)) return Rule::HoltonSheehan;
    if (rules.connectivity() && structural && (n < 2 || vertex_connectivity(g) < structural_floor(params)))
        return Rule::Connectivity;
    return std::nullopt;
}

} // namespace hamclass
