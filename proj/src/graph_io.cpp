#include "cdom/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace cdom {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: unexpected end of input at byte " + std::to_string(pos), pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(pos) + " out of range (value " + std::to_string(c) + ")", pos);
  }
  return c - kBias;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= line.size()) throw ParseError("graph6: empty input", pos);
  if (line[pos] == ':' || line[pos] == '&') {
    throw ParseError("graph6: sparse6/digraph6 encodings are not supported", pos);
  }

  int n = 0;
  if (line[pos] == '~') {
    if (pos + 1 < line.size() && line[pos + 1] == '~') {
      throw ParseError("graph6: order exceeds the 64-vertex limit", pos);
    }
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | decode_byte(line, pos++);
    if (n <= 62) throw ParseError("graph6: non-canonical long-form header", pos - 4);
  } else {
    n = decode_byte(line, pos++);
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds the 64-vertex limit", pos - 1);
  }

  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::size_t body = pos;
  if (line.size() < body + byte_count) {
    throw ParseError("graph6: truncated adjacency data at byte " + std::to_string(line.size()), line.size());
  }
  if (line.size() > body + byte_count) {
    throw ParseError("graph6: trailing garbage at byte " + std::to_string(body + byte_count), body + byte_count);
  }

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = decode_byte(line, body + k / 6);
      if (((chunk >> (5 - k % 6)) & 1) != 0) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = body + k / 6;
    const int chunk = decode_byte(line, last);
    if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits in byte " + std::to_string(last), last);
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int n = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<long long> values;
    std::size_t at = 0;
    while (at < line.size()) {
      while (at < line.size() && (line[at] == ' ' || line[at] == '\t')) ++at;
      if (at >= line.size()) break;
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + at, line.data() + line.size(), v);
      if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": expected integers", line_no);
      }
      values.push_back(v);
      at = static_cast<std::size_t>(ptr - line.data());
    }

    if (n < 0) {
      if (values.size() != 1) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": expected the vertex count", line_no);
      }
      if (values[0] < 0 || values[0] > kMaxVertices) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": vertex count outside [0, 64]", line_no);
      }
      n = static_cast<int>(values[0]);
      continue;
    }
    if (values.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"", line_no);
    }
    const long long u = values[0];
    const long long v = values[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex index out of range", line_no);
    }
    if (u == v) throw ParseError("edge list line " + std::to_string(line_no) + ": loop edge", line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("edge list: missing vertex count", line_no);
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph6Stream read_graph6_stream(std::istream& in) {
  Graph6Stream result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    try {
      result.graphs.push_back(parse_graph6(t));
    } catch (const std::exception& e) {
      result.rejected.emplace_back(line_no, e.what());
    }
  }
  return result;
}

}  // namespace cdom
