#pragma once

#include <string>
#include <string_view>

#include "drgcay/graph.hpp"

namespace drgcay {

// graph6 encoding: N(n) followed by the upper triangle x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed six bits per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);

// Throws ParseError on bytes outside 63..126, truncated or trailing data,
// and (when strict) nonzero padding bits. A single trailing newline is
// accepted.
Graph graph6_decode(std::string_view text, bool strict = true);

}  // namespace drgcay
