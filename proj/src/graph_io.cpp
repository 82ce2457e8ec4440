#include "tricover/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace tricover::io {

ParsedGraph normalize_arcs(int vertex_count,
                           const std::vector<std::tuple<int, int, int>>& raw_arcs) {
  ParsedGraph result;
  std::vector<std::tuple<VertexId, VertexId, int>> kept;
  for (const auto& [u, v, m] : raw_arcs) {
    if (u == v) {
      ++result.loops_dropped;
      continue;
    }
    kept.emplace_back(u, v, m);
  }
  result.graph = DirectedMultigraph::from_arcs(vertex_count, kept);
  return result;
}

ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::tuple<int, int, int>> raw;
  int loops = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    if (n < 0) {
      std::string magic;
      if (!(is >> magic)) continue;  // blank before header
      int count = 0;
      if (magic != "dmg" || !(is >> count) || count < 0) {
        throw ParseError(line_no, "expected header 'dmg <n>'");
      }
      std::string rest;
      if (is >> rest) throw ParseError(line_no, "trailing tokens after header");
      n = count;
      continue;
    }
    int u = 0, v = 0, m = 1;
    if (!(is >> u)) continue;  // blank or comment-only line
    if (!(is >> v)) throw ParseError(line_no, "expected 'u v [mult]'");
    if (!(is >> m)) m = 1;
    std::string rest;
    if (is >> rest) throw ParseError(line_no, "trailing tokens after arc");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "vertex out of range [0, " + std::to_string(n) + ")");
    }
    if (m <= 0) throw ParseError(line_no, "multiplicity must be positive");
    if (u == v) {
      ++loops;
      continue;
    }
    raw.emplace_back(u, v, m);
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'dmg <n>' header");
  ParsedGraph result = normalize_arcs(n, raw);
  result.loops_dropped += loops;
  return result;
}

ParsedGraph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

ParsedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const DirectedMultigraph& g) {
  std::ostringstream os;
  os << "dmg " << g.vertex_count() << "\n";
  for (const auto& [u, v, m] : g.arcs()) {
    os << u << " " << v;
    if (m != 1) os << " " << m;
    os << "\n";
  }
  return os.str();
}

void save_graph_file(const DirectedMultigraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << serialize_graph(g);
}

}  // namespace tricover::io
