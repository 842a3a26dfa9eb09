#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace packedge {

/// Index of an edge inside one particular Graph. Meaningless across graphs.
struct EdgeId {
  std::uint32_t index = 0;

  constexpr EdgeId() = default;
  constexpr explicit EdgeId(std::uint32_t i) : index(i) {}
  constexpr explicit EdgeId(int i) : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return w == u || w == v; }
  friend constexpr bool operator==(Edge, Edge) = default;
};

/// Immutable simple undirected graph with stable edge indices.
///
/// Construction rejects loops, duplicate edges and out-of-range endpoints.
/// Degree is not capped here: graph6 input may carry a vertex of degree > 3
/// and must still load, so `is_subcubic()` is the gate for operations that
/// need it. Edge endpoints are normalised to u < v; edge order is kept.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  int order() const { return static_cast<int>(incident_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }

  /// Edges incident to `v`, in increasing edge index.
  std::span<const EdgeId> incident(int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeId> find_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return find_edge(u, v).has_value(); }
  bool valid(EdgeId e) const { return e.index < edges_.size(); }

  int max_degree() const;
  bool is_subcubic() const { return max_degree() <= 3; }
  bool is_cubic() const;
  bool is_connected() const;

  /// Component id per vertex (0-based, numbered in order of first vertex).
  std::vector<int> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  void check(EdgeId e) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Line-graph distance between two edges: 0 for e == f, 1 for edges sharing a
/// vertex, kInfinity across components. Single-pair BFS; use DistanceTable
/// when many queries are needed.
int edge_distance(const Graph& g, EdgeId e, EdgeId f);

/// All-pairs line-graph distances, computed once per graph.
///
/// The default constructor runs one BFS per source edge in an OpenMP
/// parallel loop; `compute_serial` is the single-threaded reference kept for
/// tests and benchmarks. Both produce identical tables.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(const Graph& g);
  static DistanceTable compute_serial(const Graph& g);

  int size() const { return m_; }
  int operator()(EdgeId e, EdgeId f) const;

  /// Edges f != e with distance(e, f) <= radius, in increasing index.
  std::vector<EdgeId> ball(EdgeId e, int radius) const;

  /// Largest finite distance (0 for graphs with < 2 edges).
  int max_finite() const;
  bool connected() const;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  static constexpr std::uint16_t kUnreached = 0xFFFF;
  static void bfs_row(const Graph& g, int source, std::span<std::uint16_t> row);

  int m_ = 0;
  std::vector<std::uint16_t> dist_;
};

/// G^k[A]: vertices are the members of A (local indices follow A's order),
/// two members adjacent iff their line-graph distance is at most k.
class ConflictGraph {
 public:
  ConflictGraph(const Graph& base, const DistanceTable& distances,
                std::span<const EdgeId> subset, int radius);

  const Graph& base() const { return *base_; }
  int radius() const { return radius_; }
  std::span<const EdgeId> members() const { return members_; }
  int vertex_count() const { return static_cast<int>(members_.size()); }
  std::span<const int> neighbors(int local) const { return adj_.at(local); }
  int degree(int local) const { return static_cast<int>(adj_.at(local).size()); }
  int max_degree() const;
  std::size_t edge_count() const;
  bool adjacent(int a, int b) const;

  /// Connected components as lists of local vertex indices.
  std::vector<std::vector<int>> components() const;

 private:
  const Graph* base_;
  int radius_;
  std::vector<EdgeId> members_;
  std::vector<std::vector<int>> adj_;
};

ConflictGraph conflict_graph(const Graph& g, const DistanceTable& d,
                             std::span<const EdgeId> subset, int k);
/// Computes a throwaway distance table first.
ConflictGraph conflict_graph(const Graph& g, std::span<const EdgeId> subset,
                             int k);

}  // namespace packedge
