#pragma once

#include <optional>
#include <string_view>

namespace hamclass {

/// Gamma: longest cycle of order n - k, every (n - k)-vertex induced subgraph Hamiltonian.
/// Pi: longest path of order n - k, every k-vertex deletion traceable.
enum class ClassKind { Gamma, Pi };

struct ClassParams {
    int k = 1;
    ClassKind kind = ClassKind::Gamma;

    bool operator==(const ClassParams &) const = default;
};

std::string_view to_string(ClassKind kind) noexcept;
std::optional<ClassKind> parse_class_kind(std::string_view text) noexcept;

/// Throws Parameter unless 1 <= k and n - k >= 3 (Gamma) or n - k >= 1 (Pi).
void validate_params(int n, ClassParams params);

} // namespace hamclass
