#pragma once

#include <stdexcept>
#include <string>

namespace hamclass {

enum class ErrorKind {
    Parse,            // malformed graph6 record or certificate
    UnsupportedOrder, // n > 64, or n outside an operation's range
    EmptySet,
    InvalidSequence,
    InvalidWitness,
    Parameter,
    Structure,        // no induced path of the requested order
    Spine,            // G - V(P) lacks the required spanning walk
    OracleSize,
    GeneratorSize,
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hamclass
