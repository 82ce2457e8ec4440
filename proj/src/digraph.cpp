#include "tricover/digraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tricover {

std::string to_string(const ArcSlot& s) {
  std::ostringstream os;
  os << s.tail << "->" << s.head << "#" << s.copy;
  return os.str();
}

std::string to_string(const Triangle& t) {
  std::ostringstream os;
  os << "[" << to_string(t.slots[0]) << " " << to_string(t.slots[1]) << " "
     << to_string(t.slots[2]) << "]";
  return os.str();
}

Triangle Triangle::from_cycle(const ArcSlot& a, const ArcSlot& b, const ArcSlot& c) {
  std::array<ArcSlot, 3> s{a, b, c};
  for (int i = 0; i < 3; ++i) {
    if (s[i].head != s[(i + 1) % 3].tail) {
      throw std::invalid_argument("triangle slots do not chain: " + to_string(s[i]) +
                                  " then " + to_string(s[(i + 1) % 3]));
    }
  }
  if (s[0].tail == s[1].tail || s[1].tail == s[2].tail || s[0].tail == s[2].tail) {
    throw std::invalid_argument("triangle vertices not distinct");
  }
  int start = 0;
  for (int i = 1; i < 3; ++i) {
    if (s[i].tail < s[start].tail) start = i;
  }
  Triangle t;
  for (int i = 0; i < 3; ++i) t.slots[i] = s[(start + i) % 3];
  return t;
}

bool Triangle::contains_vertex(VertexId v) const {
  return slots[0].tail == v || slots[1].tail == v || slots[2].tail == v;
}

bool Triangle::uses_slot(const ArcSlot& s) const {
  return slots[0] == s || slots[1] == s || slots[2] == s;
}

bool Triangle::shares_slot(const Triangle& other) const {
  for (const ArcSlot& s : slots) {
    if (other.uses_slot(s)) return true;
  }
  return false;
}

DirectedMultigraph::DirectedMultigraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  mult_.assign(static_cast<size_t>(n_) * n_, 0);
}

DirectedMultigraph DirectedMultigraph::from_arcs(
    int vertex_count, const std::vector<std::tuple<VertexId, VertexId, int>>& arcs) {
  DirectedMultigraph g(vertex_count);
  for (const auto& [u, v, m] : arcs) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("loop arc rejected: " + std::to_string(u) + "->" +
                                  std::to_string(v));
    }
    if (m <= 0) throw std::invalid_argument("non-positive multiplicity");
    g.at(u, v) += m;
  }
  return g;
}

void DirectedMultigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
  }
}

int DirectedMultigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return mult_[static_cast<size_t>(u) * n_ + v];
}

bool DirectedMultigraph::has_slot(const ArcSlot& s) const {
  if (s.tail < 0 || s.tail >= n_ || s.head < 0 || s.head >= n_ || s.copy < 0) return false;
  return s.copy < mult_[static_cast<size_t>(s.tail) * n_ + s.head];
}

int DirectedMultigraph::slot_count() const {
  int total = 0;
  for (int m : mult_) total += m;
  return total;
}

std::vector<std::tuple<VertexId, VertexId, int>> DirectedMultigraph::arcs() const {
  std::vector<std::tuple<VertexId, VertexId, int>> out;
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v = 0; v < n_; ++v) {
      int m = mult_[static_cast<size_t>(u) * n_ + v];
      if (m > 0) out.emplace_back(u, v, m);
    }
  }
  return out;
}

DirectedMultigraph add_arc(const DirectedMultigraph& g, VertexId u, VertexId v, int count) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("loop arc rejected: " + std::to_string(u) + "->" +
                                std::to_string(v));
  }
  if (count <= 0) throw std::invalid_argument("non-positive arc count");
  DirectedMultigraph out = g;
  out.at(u, v) += count;
  return out;
}

ArcSlot SlotRemoval::to_original(const ArcSlot& s) const {
  auto it = survivors.find({s.tail, s.head});
  if (it == survivors.end()) return s;
  const std::vector<int>& surv = it->second;
  if (s.copy < 0 || s.copy >= static_cast<int>(surv.size())) {
    throw std::invalid_argument("slot " + to_string(s) + " not present after removal");
  }
  return ArcSlot{s.tail, s.head, surv[static_cast<size_t>(s.copy)]};
}

Triangle SlotRemoval::to_original(const Triangle& t) const {
  return Triangle::from_cycle(to_original(t.slots[0]), to_original(t.slots[1]),
                              to_original(t.slots[2]));
}

SlotRemoval remove_slots(const DirectedMultigraph& g, const std::vector<ArcSlot>& slots) {
  // Group removed copies per pair, checking existence and duplicates.
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> removed;
  for (const ArcSlot& s : slots) {
    if (!g.has_slot(s)) {
      throw std::invalid_argument("slot does not exist: " + to_string(s));
    }
    removed[{s.tail, s.head}].push_back(s.copy);
  }
  SlotRemoval result;
  result.graph = g;
  for (auto& [pair, copies] : removed) {
    std::sort(copies.begin(), copies.end());
    if (std::adjacent_find(copies.begin(), copies.end()) != copies.end()) {
      throw std::invalid_argument("slot removed twice: " +
                                  to_string(ArcSlot{pair.first, pair.second, copies[0]}));
    }
    int m = g.multiplicity(pair.first, pair.second);
    std::vector<int> surviving;
    size_t k = 0;
    for (int c = 0; c < m; ++c) {
      if (k < copies.size() && copies[k] == c) {
        ++k;
      } else {
        surviving.push_back(c);
      }
    }
    result.graph.at(pair.first, pair.second) = static_cast<int>(surviving.size());
    result.survivors[pair] = std::move(surviving);
  }
  return result;
}

ArcSlot VertexDeletion::to_original(const ArcSlot& s) const {
  if (s.tail < 0 || s.tail >= static_cast<int>(old_of_new.size()) || s.head < 0 ||
      s.head >= static_cast<int>(old_of_new.size())) {
    throw std::invalid_argument("slot " + to_string(s) + " out of range after deletion");
  }
  return ArcSlot{old_of_new[static_cast<size_t>(s.tail)],
                 old_of_new[static_cast<size_t>(s.head)], s.copy};
}

Triangle VertexDeletion::to_original(const Triangle& t) const {
  // old_of_new is increasing, so the canonical rotation is preserved.
  return Triangle::from_cycle(to_original(t.slots[0]), to_original(t.slots[1]),
                              to_original(t.slots[2]));
}

VertexDeletion delete_vertex(const DirectedMultigraph& g, VertexId v) {
  g.check_vertex(v);
  VertexDeletion result;
  result.graph = DirectedMultigraph(g.vertex_count() - 1);
  result.new_of_old.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    result.new_of_old[static_cast<size_t>(u)] = static_cast<int>(result.old_of_new.size());
    result.old_of_new.push_back(u);
  }
  for (VertexId u : result.old_of_new) {
    for (VertexId w : result.old_of_new) {
      if (u == w) continue;
      int m = g.multiplicity(u, w);
      if (m > 0) {
        result.graph.at(result.new_of_old[static_cast<size_t>(u)],
                        result.new_of_old[static_cast<size_t>(w)]) = m;
      }
    }
  }
  return result;
}

namespace {

// Visits every cyclically oriented vertex triple (x, y, z), x minimal, with
// all three side multiplicities positive.
template <typename Visit>
void for_each_triangle_type(const DirectedMultigraph& g, Visit&& visit) {
  const int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) {
        int m1 = g.multiplicity(a, b), m2 = g.multiplicity(b, c), m3 = g.multiplicity(c, a);
        if (m1 > 0 && m2 > 0 && m3 > 0) {
          if (!visit(a, b, c, m1, m2, m3)) return;
        }
        m1 = g.multiplicity(a, c), m2 = g.multiplicity(c, b), m3 = g.multiplicity(b, a);
        if (m1 > 0 && m2 > 0 && m3 > 0) {
          if (!visit(a, c, b, m1, m2, m3)) return;
        }
      }
    }
  }
}

}  // namespace

std::vector<Triangle> enumerate_triangles(const DirectedMultigraph& g) {
  std::vector<Triangle> out;
  for_each_triangle_type(
      g, [&](VertexId x, VertexId y, VertexId z, int m1, int m2, int m3) {
        for (int c1 = 0; c1 < m1; ++c1) {
          for (int c2 = 0; c2 < m2; ++c2) {
            for (int c3 = 0; c3 < m3; ++c3) {
              Triangle t;
              t.slots = {ArcSlot{x, y, c1}, ArcSlot{y, z, c2}, ArcSlot{z, x, c3}};
              out.push_back(t);
            }
          }
        }
        return true;
      });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> triangles_through(const DirectedMultigraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Triangle> out;
  for (const Triangle& t : enumerate_triangles(g)) {
    if (t.contains_vertex(v)) out.push_back(t);
  }
  return out;
}

bool has_triangle(const DirectedMultigraph& g) {
  bool found = false;
  for_each_triangle_type(g, [&](VertexId, VertexId, VertexId, int, int, int) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t triangle_count(const DirectedMultigraph& g) {
  std::uint64_t total = 0;
  for_each_triangle_type(g, [&](VertexId, VertexId, VertexId, int m1, int m2, int m3) {
    total += static_cast<std::uint64_t>(m1) * m2 * m3;
    return true;
  });
  return total;
}

std::uint64_t triangle_count_through(const DirectedMultigraph& g, VertexId v) {
  std::uint64_t total = 0;
  for_each_triangle_type(g, [&](VertexId x, VertexId y, VertexId z, int m1, int m2, int m3) {
    if (x == v || y == v || z == v) total += static_cast<std::uint64_t>(m1) * m2 * m3;
    return true;
  });
  return total;
}

}  // namespace tricover
