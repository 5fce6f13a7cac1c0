#include "drgcay/graph6.hpp"

#include <stdexcept>

namespace drgcay {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 258047) throw std::invalid_argument("graph6: graphs above 258047 vertices are not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text, bool strict) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated vertex count", text.size());
    if (text[1] == 126) throw ParseError("graph6: vertex counts above 258047 are not supported", 1);
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos < need) throw ParseError("graph6: truncated adjacency data", text.size());
  if (text.size() - pos > need) throw ParseError("graph6: trailing data", pos + need);
  Graph g(n);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (strict && pairs % 6 != 0) {
    const int last = text[pos + need - 1] - 63;
    const int pad = static_cast<int>(6 - pairs % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", pos + need - 1);
  }
  return g;
}

}  // namespace drgcay
