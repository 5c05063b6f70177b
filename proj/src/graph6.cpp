#include "sqen/graph6.hpp"

#include <cstdint>
#include <string>

namespace sqen {

namespace {

void append_sextets(std::string& out, std::uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i)
    out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 0x3f)));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    append_sextets(out, static_cast<std::uint64_t>(n), 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    append_sextets(out, static_cast<std::uint64_t>(n), 6);
  }
  int bit = 5;
  unsigned byte = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) byte |= 1u << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(63 + byte));
        bit = 5;
        byte = 0;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(63 + byte));
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error("graph6: empty input");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      throw Graph6Error("graph6: byte " + std::to_string(i) +
                        " out of range [63,126]");
  }

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (line[0] != '~') {
    n = line[0] - 63;
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw Graph6Error("graph6: truncated vertex count");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
    pos = 4;
  } else {
    if (line.size() < 8) throw Graph6Error("graph6: truncated vertex count");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (line[i] - 63);
    pos = 8;
  }
  if (n > 100000)
    throw Graph6Error("graph6: vertex count " + std::to_string(n) +
                      " exceeds supported size");

  const std::int64_t pairs = n * (n - 1) / 2;
  const std::size_t expect = static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() - pos != expect)
    throw Graph6Error("graph6: payload length " +
                      std::to_string(line.size() - pos) + ", expected " +
                      std::to_string(expect) + " bytes for n=" +
                      std::to_string(n));

  Graph g(static_cast<int>(n));
  std::int64_t index = 0;
  int u = 0, v = 1;  // column-major pair cursor
  for (std::size_t i = pos; i < line.size(); ++i) {
    const unsigned bits = static_cast<unsigned>(line[i] - 63);
    for (int b = 5; b >= 0; --b, ++index) {
      const bool set = (bits >> b) & 1u;
      if (index >= pairs) {
        if (set)
          throw Graph6Error("graph6: nonzero padding bit in final byte");
        continue;
      }
      if (set) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

}  // namespace sqen
