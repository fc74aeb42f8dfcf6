#include "cospec/graph.hpp"

namespace cospec {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxLongForm = 258047;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError(pos, "unexpected end of graph6 data");
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError(pos, "byte outside graph6 range 63..126");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  std::size_t n = 0;
  const int lead = sextet(text, pos);
  if (lead < 63) {
    n = static_cast<std::size_t>(lead);
    pos += 1;
  } else {
    if (sextet(text, pos + 1) == 63)
      throw ParseError(pos, "8-byte graph6 size form is not supported");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + k));
    if (n < 63) throw ParseError(pos, "non-canonical long size form");
    pos += 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != pos + bytes) {
    if (text.size() < pos + bytes)
      throw ParseError(text.size(), "graph6 data too short for " + std::to_string(n) + " vertices");
    throw ParseError(pos + bytes, "trailing bytes after graph6 data");
  }

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text, pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError(pos + bytes - 1, "nonzero padding bits");
  }
  return std::move(b).build();
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxLongForm) throw std::length_error("graph too large for graph6 long size form");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace cospec
