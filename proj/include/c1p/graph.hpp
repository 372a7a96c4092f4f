#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "c1p/matrix.hpp"

namespace c1p {

/// Ordered column pair (first, second), read as "first is placed before
/// second". Columns are 0-based.
struct PairVertex {
  std::size_t first = 0;
  std::size_t second = 0;

  PairVertex reversed() const { return {second, first}; }
  /// True iff the pair lies in the half with first < second.
  bool in_lower_half() const { return first < second; }

  friend auto operator<=>(const PairVertex&, const PairVertex&) = default;
};

/// Dense index of a pair vertex: row-major over (first, second), skipping
/// first == second. Ordering of ids matches lexicographic order on pairs.
using VertexId = std::size_t;

std::size_t pair_vertex_count(std::size_t columns);
VertexId vertex_id(PairVertex v, std::size_t columns);
PairVertex vertex_at(VertexId id, std::size_t columns);
/// 1-based "i,j".
std::string vertex_label(PairVertex v);

enum class EdgeKind { reversal, row_witness };

/// Why an edge exists. A reversal edge joins (i,j) and (j,i) and has no row.
/// A row-witness edge was generated by `row` having 1s at columns `left`
/// and `right` (left < right) and a 0 at column `middle`.
struct EdgeEvidence {
  EdgeKind kind = EdgeKind::reversal;
  std::size_t row = 0;
  std::size_t left = 0;
  std::size_t middle = 0;
  std::size_t right = 0;

  friend bool operator==(const EdgeEvidence&, const EdgeEvidence&) = default;
};

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  /// Endpoints lie in different halves (first < second vs first > second).
  bool crossing = false;
  std::vector<EdgeEvidence> evidence;
};

/// Simple undirected graph on all ordered column pairs with per-edge
/// evidence. Edges are sorted by (u, v); adjacency lists are sorted.
class PairGraph {
 public:
  std::size_t columns() const { return columns_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }

  bool adjacent(VertexId a, VertexId b) const;
  /// nullptr if absent.
  const Edge* find_edge(VertexId a, VertexId b) const;
  bool adjacent(PairVertex a, PairVertex b) const;
  const Edge* find_edge(PairVertex a, PairVertex b) const;

 protected:
  struct RawEdge {
    VertexId u;
    VertexId v;
    EdgeEvidence evidence;
  };
  PairGraph(std::size_t columns, std::vector<RawEdge> raw);

 private:
  std::size_t columns_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Two pair vertices are adjacent when the orderings they stand for cannot
/// both hold in a consecutive-ones arrangement.
class IncompatGraph : public PairGraph {
 public:
  explicit IncompatGraph(const BinaryMatrix& m);

 private:
  static std::vector<RawEdge> edges_of(const BinaryMatrix& m);
};

/// An edge joins two orderings where choosing one forces the other.
class ForcingGraph : public PairGraph {
 public:
  explicit ForcingGraph(const BinaryMatrix& m);

 private:
  static std::vector<RawEdge> edges_of(const BinaryMatrix& m);
};

IncompatGraph build_incompatibility_graph(const BinaryMatrix& m);
ForcingGraph build_forcing_graph(const BinaryMatrix& m);

/// Forcing edges whose endpoints lie in different halves, in edge order.
std::vector<Edge> critical_edges(const ForcingGraph& f);

/// Color (0/1) per vertex id.
struct TwoColoring {
  std::vector<int> color;
};

/// Closed walk v_1 .. v_L (v_L adjacent to v_1) with L odd.
struct OddClosedWalk {
  std::vector<VertexId> vertices;
};

using BipartiteResult = std::variant<TwoColoring, OddClosedWalk>;

/// Breadth-first layering of each component. The odd walk returned on
/// failure is a cycle but not necessarily a shortest one.
BipartiteResult is_bipartite(const PairGraph& g);

/// Graphviz text. Crossing edges of a forcing graph are drawn bold.
std::string to_dot(const IncompatGraph& g);
std::string to_dot(const ForcingGraph& g);

}  // namespace c1p
