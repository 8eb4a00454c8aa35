#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freeminor/graph.hpp"

namespace fm {

/// Malformed graph text. `offset` is the byte position of the problem within
/// the parsed line or document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Standard graph6 line (no trailing newline). An optional ">>graph6<<"
/// header is accepted by the parser.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n m" followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// One graph per input record: a whole edge-list document yields one graph,
/// otherwise every non-empty line is graph6.
struct InputRecord {
  int line = 0;  // 1-based line of the record
  std::string text;
};
std::vector<InputRecord> split_input(std::string_view document);
bool looks_like_edge_list(std::string_view document);

}  // namespace fm
