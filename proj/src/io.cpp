#include "freeminor/io.hpp"

#include <charconv>
#include <sstream>

namespace fm {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_g6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = base;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    char c = text[pos];
    if (!is_g6_char(c)) throw ParseError("graph6: invalid character", pos);
    ++pos;
    return c - kBias;
  };

  long n = next();
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') throw ParseError("graph6: order beyond 258047 unsupported", pos);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds 32", base);

  Graph g(static_cast<int>(n));
  const long bits = n * (n - 1) / 2;
  const long chars = (bits + 5) / 6;
  long k = 0;
  for (long c = 0; c < chars; ++c) {
    const std::size_t at = pos;
    int value = next();
    for (int b = 5; b >= 0; --b, ++k) {
      bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", at);
        continue;
      }
      if (set) {
        // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
        long v = 1;
        while (v * (v + 1) / 2 <= k) ++v;
        long u = k - v * (v - 1) / 2;
        g.connect(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  if (pos != text.size()) throw ParseError("graph6: trailing characters", pos);
  return g;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) ++pos;
  };
  auto read_int = [&]() -> long {
    skip_space();
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) throw ParseError("edge list: expected non-negative integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  const std::size_t header = pos;
  long n = read_int();
  long m = read_int();
  if (n > Graph::kMaxVertices) throw ParseError("edge list: order exceeds 32", header);
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    const std::size_t at = pos;
    long u = read_int();
    long v = read_int();
    if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range", at);
    if (u == v) throw ParseError("edge list: loop", at);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError("edge list: repeated edge", at);
    g.connect(static_cast<int>(u), static_cast<int>(v));
  }
  skip_space();
  if (pos != text.size()) throw ParseError("edge list: trailing content", pos);
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

bool looks_like_edge_list(std::string_view document) {
  std::size_t start = document.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return false;
  std::size_t end = document.find('\n', start);
  std::string_view first = document.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
  int numbers = 0;
  bool in_number = false;
  for (char c : first) {
    if (c >= '0' && c <= '9') {
      if (!in_number) ++numbers;
      in_number = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      in_number = false;
    } else {
      return false;
    }
  }
  return numbers == 2;
}

std::vector<InputRecord> split_input(std::string_view document) {
  std::vector<InputRecord> out;
  if (looks_like_edge_list(document)) {
    int line = 1;
    std::size_t start = document.find_first_not_of(" \t\r\n");
    for (std::size_t i = 0; i < start; ++i) line += document[i] == '\n';
    out.push_back({line, std::string(document)});
    return out;
  }
  std::istringstream is{std::string(document)};
  std::string row;
  int line = 0;
  while (std::getline(is, row)) {
    ++line;
    while (!row.empty() && (row.back() == '\r' || row.back() == ' ')) row.pop_back();
    if (row.empty()) continue;
    out.push_back({line, row});
  }
  return out;
}

}  // namespace fm
