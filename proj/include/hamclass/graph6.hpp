#pragma once

#include "hamclass/graph.hpp"

#include <string>
#include <string_view>

namespace hamclass {

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and trailing
/// line terminators are ignored. Throws Parse on malformed input (including
/// non-minimal length prefixes and stray padding bits) and UnsupportedOrder
/// for n = 0 or n > 64.
Graph parse_graph6(std::string_view text);

/// Encodes g using the minimal-length order prefix and zero padding.
std::string write_graph6(const Graph &g);

} // namespace hamclass
