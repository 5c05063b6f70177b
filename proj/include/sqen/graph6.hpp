#pragma once

// graph6 wire format: n is encoded as n+63 in one byte for n <= 62, or as
// '~' followed by three bytes holding an 18-bit big-endian value (each byte
// six bits, +63) for n <= 2^18-1, or '~~' plus six bytes for larger n.  The
// upper-triangle adjacency bits follow in column-major order -- all pairs
// (u,v) with u < v sorted by (v,u) -- packed six bits per byte MSB-first,
// each byte +63, with zero padding bits in the final byte.

#include <stdexcept>
#include <string>
#include <string_view>

#include "sqen/graph.hpp"

namespace sqen {

class Graph6Error : public std::runtime_error {
 public:
  explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

std::string encode_graph6(const Graph& g);
// Parses one graph6 line (no trailing newline).  Throws Graph6Error on empty
// input, bytes outside [63,126], truncated/overlong payload, or nonzero
// padding bits.
Graph parse_graph6(std::string_view line);

}  // namespace sqen
