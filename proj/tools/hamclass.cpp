// hamclass: membership checks, scans, bounds, proof audits and exact oracles.
// Exit codes: 0 clean, 1 member found, 2 usage or input error.

#include "hamclass/bounds.hpp"
#include "hamclass/certificate.hpp"
#include "hamclass/error.hpp"
#include "hamclass/graph6.hpp"
#include "hamclass/scan.hpp"
#include "hamclass/surgery.hpp"
#include "hamclass/walks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

using namespace hamclass;

namespace {

constexpr int kClean = 0;
constexpr int kMember = 1;
constexpr int kFailure = 2;

class Reader {
public:
    explicit Reader(const std::string &path)
    {
        if (path == "-") {
            in_ = &std::cin;
        } else {
            file_ = std::make_unique<std::ifstream>(path);
            if (!*file_) throw Error(ErrorKind::Parse, "cannot open " + path);
            in_ = file_.get();
        }
    }
    std::istream &stream() { return *in_; }

    /// Calls f(line_number, record) for every graph6 record; skips blanks and headers.
    void each(const std::function<void(std::size_t, const std::string &)> &f)
    {
        std::string line;
        std::size_t number = 0;
        while (std::getline(*in_, line)) {
            ++number;
            if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
            if (line.empty()) continue;
            f(number, line);
        }
        if (in_->bad()) throw Error(ErrorKind::Parse, "read error");
    }

private:
    std::istream *in_ = nullptr;
    std::unique_ptr<std::ifstream> file_;
};

ClassKind kind_of(const std::string &name)
{
    return *parse_class_kind(name);
}

void report(std::size_t line, const std::exception &e)
{
    std::cerr << "hamclass: line " << line << ": " << e.what() << '\n';
}

RuleSet parse_rules(const std::vector<std::string> &names)
{
    RuleSet rules = RuleSet::none();
    for (const std::string &name : names) {
        if (name == "all") rules = RuleSet::all();
        else if (name == "standard") rules = RuleSet::standard();
        else if (name == "none") rules = RuleSet::none();
        else if (name == "min-degree") rules.set_min_degree(true);
        else if (name == "connectivity") rules.set_connectivity(true);
        else if (name == "max-degree") rules.set_max_degree(true);
        else if (name == "order-threshold") rules.set_order_threshold(true);
        else if (name == "holton-sheehan") rules.set_holton_sheehan(true);
        else if (name == "k1-structural") rules.set_structural_k1(true);
        else throw Error(ErrorKind::Parameter, "unknown rule " + name);
    }
    return rules;
}

int cmd_check(const std::string &path, const std::string &cls, int k, bool emit_witness)
{
    Reader reader(path);
    const ClassParams params{k, kind_of(cls)};
    bool member = false, failed = false;
    reader.each([&](std::size_t line, const std::string &record) {
        try {
            const Graph g = parse_graph6(record);
            const Certificate cert = certify(g, params, emit_witness || k == 1);
            member |= cert.member;
            std::cout << to_line(cert) << '\n';
        } catch (const Error &e) {
            report(line, e);
            failed = true;
        }
    });
    std::cout.flush();
    if (failed) return kFailure;
    return member ? kMember : kClean;
}

int cmd_scan(int n, int k, const std::string &cls, const std::string &source, const std::vector<std::string> &rules)
{
    ScanSpec spec;
    spec.n = n;
    spec.params = {k, kind_of(cls)};
    spec.rules = parse_rules(rules);
    EmptinessReport result;
    if (source == "gen") {
        spec.source = Source::InternalGenerator;
        result = scan(spec);
    } else {
        spec.source = Source::Stream;
        Reader reader(source);
        result = scan(spec, &reader.stream());
    }
    for (const auto &e : result.stream_errors)
        std::cerr << "hamclass: line " << e.line << ": " << e.message << '\n';
    std::cout << to_json(result).dump(2) << '\n';
    return result.members_found.empty() ? kClean : kMember;
}

int cmd_bounds(int k, std::optional<int> n, const std::string &cls)
{
    const ClassParams params{k, kind_of(cls)};
    nlohmann::json out{
        {"class", cls},
        {"k", k},
        {"emptiness_threshold", emptiness_threshold(params)},
        {"min_degree_required", structural_floor(params)},
        {"connectivity_required", structural_floor(params)},
        {"threshold_proven", k >= 2},
    };
    if (n) {
        const Rational ceiling = theorem_max_degree(*n, params);
        out["n"] = *n;
        out["max_degree_allowed"] = format_rational(ceiling);
        out["contradiction"] = ceiling < Rational(structural_floor(params));
        out["below_threshold"] = *n < emptiness_threshold(params);
    }
    std::cout << out.dump() << '\n';
    return kClean;
}

int cmd_audit(const std::string &path, int k, const std::string &cls)
{
    if (k < 2) throw Error(ErrorKind::Parameter, "audit needs k >= 2");
    Reader reader(path);
    const ClassKind kind = kind_of(cls);
    reader.each([&](std::size_t line, const std::string &record) {
        try {
            const Graph g = parse_graph6(record);
            const AttachmentConfig cfg = build_config(g, k, kind);
            const ClaimReport claims = kind == ClassKind::Gamma ? verify_gamma_claim(cfg) : verify_pi_claims(cfg);
            nlohmann::json out{{"graph6", record}, {"config", to_json(cfg)}, {"report", to_json(claims)}};
            std::cout << out.dump() << '\n';
        } catch (const Error &e) {
            std::cerr << "hamclass: line " << line << ": skipped: " << e.what() << '\n';
        }
    });
    return kClean;
}

int cmd_oracle(const std::string &path, const std::string &op, bool witness)
{
    Reader reader(path);
    bool failed = false;
    reader.each([&](std::size_t line, const std::string &record) {
        try {
            const Graph g = parse_graph6(record);
            long value = 0;
            std::vector<Vertex> walk;
            if (op == "circumference") {
                auto c = circumference(g);
                value = c.length;
                if (c.witness) walk = c.witness->vertices;
            } else if (op == "detour") {
                auto d = detour_order(g);
                value = d.order;
                walk = d.witness.vertices;
            } else if (op == "hamcycle") {
                auto c = hamilton_cycle(g);
                value = c.has_value();
                if (c) walk = c->vertices;
            } else if (op == "hampath") {
                auto p = hamilton_path(g);
                value = p.has_value();
                if (p) walk = p->vertices;
            } else {
                value = g.order() < 2 ? 0 : vertex_connectivity(g);
            }
            std::ostringstream out;
            out << value;
            if (witness)
                for (Vertex v : walk) out << ' ' << v;
            std::cout << out.str() << '\n';
        } catch (const Error &e) {
            report(line, e);
            failed = true;
        }
    });
    return failed ? kFailure : kClean;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact membership, bounds and search tools for the longest-cycle and longest-path classes"};
    app.require_subcommand(1);
    const std::vector<std::string> classes{"gamma", "pi"};

    std::string input = "-", cls = "gamma", source = "gen", op;
    int k = 1, n = 0;
    std::optional<int> bounds_n;
    bool emit_witness = false, with_witness = false;
    std::vector<std::string> rules{"standard"};

    auto *check = app.add_subcommand("check", "Decide membership for each graph6 record; one certificate per line");
    check->add_option("input", input, "graph6 file, - for stdin")->capture_default_str();
    check->add_option("--class", cls)->check(CLI::IsMember(classes))->capture_default_str();
    check->add_option("--k", k)->check(CLI::Range(1, kMaxOrder))->capture_default_str();
    check->add_flag("--emit-witness", emit_witness, "Include every deletion walk in member certificates for k >= 2");

    auto *scan_cmd = app.add_subcommand("scan", "Prune-then-decide scan over all graphs of order n");
    scan_cmd->add_option("--n", n)->required()->check(CLI::Range(1, kMaxOrder));
    scan_cmd->add_option("--k", k)->check(CLI::Range(1, kMaxOrder))->capture_default_str();
    scan_cmd->add_option("--class", cls)->check(CLI::IsMember(classes))->capture_default_str();
    scan_cmd->add_option("--source", source, "gen, - for stdin, or a graph6 file")->capture_default_str();
    scan_cmd->add_option("--rules", rules,
                         "standard, all, none, or any of min-degree, connectivity, max-degree, order-threshold, "
                         "holton-sheehan, k1-structural")
        ->delimiter(',')
        ->capture_default_str();

    auto *bounds = app.add_subcommand("bounds", "Emptiness threshold and degree bounds");
    bounds->add_option("--k", k)->required()->check(CLI::Range(1, kMaxOrder));
    bounds->add_option("--n", bounds_n)->check(CLI::Range(1, kMaxOrder));
    bounds->add_option("--class", cls)->check(CLI::IsMember(classes))->capture_default_str();

    auto *audit = app.add_subcommand("audit", "Build attachment configurations and check the segment inequalities");
    audit->add_option("input", input, "graph6 file, - for stdin")->capture_default_str();
    audit->add_option("--k", k)->required()->check(CLI::Range(1, kMaxOrder));
    audit->add_option("--class", cls)->check(CLI::IsMember(classes))->capture_default_str();

    auto *oracle = app.add_subcommand("oracle", "Exact invariants, one value per record");
    oracle->add_option("input", input, "graph6 file, - for stdin")->capture_default_str();
    oracle->add_option("--op", op)
        ->required()
        ->check(CLI::IsMember({"circumference", "detour", "hamcycle", "hampath", "connectivity"}));
    oracle->add_flag("--witness", with_witness, "Append the witness walk");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kFailure;
    }

    try {
        if (*check) return cmd_check(input, cls, k, emit_witness);
        if (*scan_cmd) return cmd_scan(n, k, cls, source, rules);
        if (*bounds) return cmd_bounds(k, bounds_n, cls);
        if (*audit) return cmd_audit(input, k, cls);
        if (*oracle) return cmd_oracle(input, op, with_witness);
    } catch (const Error &e) {
        std::cerr << "hamclass: " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception &e) {
        std::cerr << "hamclass: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
