#include "c1p/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace c1p {

std::size_t pair_vertex_count(std::size_t columns) {
  return columns == 0 ? 0 : columns * (columns - 1);
}

VertexId vertex_id(PairVertex v, std::size_t columns) {
  if (v.first == v.second || v.first >= columns || v.second >= columns) {
    throw std::out_of_range("not a pair vertex for " + std::to_string(columns) + " columns");
  }
  return v.first * (columns - 1) + (v.second < v.first ? v.second : v.second - 1);
}

PairVertex vertex_at(VertexId id, std::size_t columns) {
  if (id >= pair_vertex_count(columns)) throw std::out_of_range("vertex id out of range");
  const std::size_t first = id / (columns - 1);
  std::size_t second = id % (columns - 1);
  if (second >= first) ++second;
  return {first, second};
}

std::string vertex_label(PairVertex v) {
  return std::to_string(v.first + 1) + "," + std::to_string(v.second + 1);
}

PairGraph::PairGraph(std::size_t columns, std::vector<RawEdge> raw)
    : columns_(columns), adjacency_(pair_vertex_count(columns)) {
  for (auto& e : raw) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (auto& e : raw) {
    if (edges_.empty() || edges_.back().u != e.u || edges_.back().v != e.v) {
      const bool crossing =
          vertex_at(e.u, columns).in_lower_half() != vertex_at(e.v, columns).in_lower_half();
      edges_.push_back(Edge{e.u, e.v, crossing, {}});
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    auto& evidence = edges_.back().evidence;
    if (std::find(evidence.begin(), evidence.end(), e.evidence) == evidence.end()) {
      evidence.push_back(e.evidence);
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const Edge* PairGraph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                               return e.u != key.first ? e.u < key.first : e.v < key.second;
                             });
  if (it == edges_.end() || it->u != a || it->v != b) return nullptr;
  return &*it;
}

bool PairGraph::adjacent(VertexId a, VertexId b) const { return find_edge(a, b) != nullptr; }

const Edge* PairGraph::find_edge(PairVertex a, PairVertex b) const {
  return find_edge(vertex_id(a, columns_), vertex_id(b, columns_));
}

bool PairGraph::adjacent(PairVertex a, PairVertex b) const { return find_edge(a, b) != nullptr; }

namespace {

// Calls emit(row, left, middle, right) for each row with 1s at left < right
// and a 0 at middle.
template <typename Emit>
void for_each_gap_triple(const BinaryMatrix& m, Emit&& emit) {
  const std::size_t n = m.cols();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t left = 0; left < n; ++left) {
      if (!m.at(r, left)) continue;
      for (std::size_t right = left + 1; right < n; ++right) {
        if (!m.at(r, right)) continue;
        for (std::size_t middle = 0; middle < n; ++middle) {
          if (!m.at(r, middle)) emit(r, left, middle, right);
        }
      }
    }
  }
}

}  // namespace

std::vector<PairGraph::RawEdge> IncompatGraph::edges_of(const BinaryMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<PairGraph::RawEdge> raw;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      raw.push_back({vertex_id({i, j}, n), vertex_id({j, i}, n), EdgeEvidence{}});
    }
  }
  for_each_gap_triple(m, [&](std::size_t r, std::size_t a, std::size_t j, std::size_t b) {
    const EdgeEvidence ev{EdgeKind::row_witness, r, a, j, b};
    raw.push_back({vertex_id({a, j}, n), vertex_id({j, b}, n), ev});
    raw.push_back({vertex_id({b, j}, n), vertex_id({j, a}, n), ev});
  });
  return raw;
}

std::vector<PairGraph::RawEdge> ForcingGraph::edges_of(const BinaryMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<PairGraph::RawEdge> raw;
  for_each_gap_triple(m, [&](std::size_t r, std::size_t a, std::size_t j, std::size_t b) {
    const EdgeEvidence ev{EdgeKind::row_witness, r, a, j, b};
    raw.push_back({vertex_id({a, j}, n), vertex_id({b, j}, n), ev});
    raw.push_back({vertex_id({j, a}, n), vertex_id({j, b}, n), ev});
  });
  return raw;
}

IncompatGraph::IncompatGraph(const BinaryMatrix& m)
    : PairGraph(m.cols(), edges_of(m)) {}

ForcingGraph::ForcingGraph(const BinaryMatrix& m)
    : PairGraph(m.cols(), edges_of(m)) {}

IncompatGraph build_incompatibility_graph(const BinaryMatrix& m) { return IncompatGraph(m); }

ForcingGraph build_forcing_graph(const BinaryMatrix& m) { return ForcingGraph(m); }

std::vector<Edge> critical_edges(const ForcingGraph& f) {
  std::vector<Edge> out;
  std::copy_if(f.edges().begin(), f.edges().end(), std::back_inserter(out),
               [](const Edge& e) { return e.crossing; });
  return out;
}

BipartiteResult is_bipartite(const PairGraph& g) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  const std::size_t count = g.vertex_count();
  std::vector<std::size_t> depth(count, unvisited);
  std::vector<VertexId> parent(count, 0);

  for (VertexId root = 0; root < count; ++root) {
    if (depth[root] != unvisited) continue;
    depth[root] = 0;
    parent[root] = root;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (depth[y] == unvisited) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (depth[y] % 2 == depth[x] % 2) {
          // Same layer parity: tree paths to the common ancestor plus (x, y)
          // close an odd cycle.
          std::vector<VertexId> from_x{x};
          std::vector<VertexId> from_y{y};
          VertexId a = x;
          VertexId b = y;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              from_x.push_back(a);
            } else {
              b = parent[b];
              from_y.push_back(b);
            }
          }
          from_y.pop_back();  // ancestor already ends from_x
          OddClosedWalk walk;
          walk.vertices.assign(from_x.rbegin(), from_x.rend());
          walk.vertices.insert(walk.vertices.end(), from_y.begin(), from_y.end());
          return walk;
        }
      }
    }
  }

  TwoColoring coloring;
  coloring.color.resize(count);
  for (std::size_t v = 0; v < count; ++v) coloring.color[v] = static_cast<int>(depth[v] % 2);
  return coloring;
}

namespace {

std::string dot_text(const PairGraph& g, const char* name, bool bold_crossing) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << vertex_label(vertex_at(v, g.columns())) << "\";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  \"" << vertex_label(vertex_at(e.u, g.columns())) << "\" -- \""
        << vertex_label(vertex_at(e.v, g.columns())) << "\"";
    if (bold_crossing && e.crossing) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const IncompatGraph& g) { return dot_text(g, "incompat", false); }

std::string to_dot(const ForcingGraph& g) { return dot_text(g, "forcing", true); }

}  // namespace c1p
