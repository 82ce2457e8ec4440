#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tricover/digraph.hpp"

namespace tricover::io {

/// Raised on malformed graph or certificate input; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedGraph {
  DirectedMultigraph graph;
  int loops_dropped = 0;
};

/// Aggregates raw (tail, head, multiplicity) triples into a graph. Loops are
/// dropped, not rejected, and counted in `loops_dropped`; they cannot take
/// part in any directed triangle. Out-of-range vertices or non-positive
/// multiplicities are rejected.
ParsedGraph normalize_arcs(int vertex_count,
                           const std::vector<std::tuple<int, int, int>>& raw_arcs);

/// Text graph format:
///
///   dmg <n>
///   # comment
///   u v [mult]
///
/// with 0-based vertex ids, default multiplicity 1 and '#' starting a
/// comment anywhere on a line. Parallel lines aggregate; loops are dropped
/// with a warning count.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);

std::string serialize_graph(const DirectedMultigraph& g);
void save_graph_file(const DirectedMultigraph& g, const std::string& path);

}  // namespace tricover::io
