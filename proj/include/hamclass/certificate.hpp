#pragma once

#include "hamclass/graph.hpp"
#include "hamclass/membership.hpp"
#include "hamclass/params.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamclass {

/// Self-contained membership verdict: the graph, the claim, and replayable witnesses.
struct Certificate {
    std::string graph6;
    ClassKind kind = ClassKind::Gamma;
    int k = 1;
    bool member = false;
    RefutationReason reason = RefutationReason::None;
    int found_length = 0;
    std::optional<std::vector<Vertex>> witness_set;
    /// Member: one spanning walk per k-set, lexicographic order of the sets.
    /// Refuted: a longest walk of the graph (empty for acyclic graphs under Gamma).
    std::optional<std::vector<std::vector<Vertex>>> witness_walks;
    /// Number of walks a full member witness holds, C(n, k); otherwise the array size.
    std::size_t witness_count = 0;

    bool operator==(const Certificate &) const = default;
};

/// Runs the membership decision. With emit_witness off, member certificates
/// carry only the witness count.
Certificate certify(const Graph &g, ClassParams params, bool emit_witness = true);

/// Checks the certificate against its own graph: walks are validated
/// structurally, bad deletion sets and longest-walk lengths are re-searched
/// exactly (skipped when a spanning witness already proves the length).
/// Throws Parse when the embedded graph6 record is malformed.
bool verify_certificate(const Certificate &cert);

std::string_view to_string(RefutationReason reason) noexcept; // "wrong_length", "bad_deletion_set", "none"

nlohmann::json to_json(const Certificate &cert);
/// Throws Parse on missing or ill-typed fields.
Certificate certificate_from_json(const nlohmann::json &j);
/// One line, no trailing newline.
std::string to_line(const Certificate &cert);
Certificate parse_certificate(std::string_view line);

} // namespace hamclass
