#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "packedge/graph.hpp"

namespace packedge {

/// Calls `visit` once per perfect matching of a cubic graph, in lexicographic
/// order of the backtracking (lowest unmatched vertex first, its incident
/// edges in increasing index). Returning false from `visit` stops the walk.
/// Throws DomainError when g is not cubic.
void for_each_perfect_matching(
    const Graph& g, const std::function<bool(std::span<const EdgeId>)>& visit);

std::vector<std::vector<EdgeId>> enumerate_perfect_matchings(const Graph& g);

/// A spanning union of vertex-disjoint cycles together with the perfect
/// matching formed by the remaining edges.
///
/// Cycle c is stored as a vertex sequence; cycle_edges(c)[j] joins
/// cycle(c)[j] and cycle(c)[j+1 mod len]. Vertices of degree 1 are allowed
/// and lie on no cycle; this only matters for the degenerate 1-regular case.
class TwoFactor {
 public:
  /// Throws DomainError unless `matching` is a perfect matching whose
  /// complement is 2-regular on every vertex of degree 3.
  static TwoFactor from_matching(const Graph& g, std::span<const EdgeId> matching);

  const Graph& graph() const { return *graph_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  std::span<const int> cycle(int c) const { return cycles_.at(c); }
  std::span<const EdgeId> cycle_edges(int c) const { return cycle_edges_.at(c); }
  std::span<const EdgeId> matching() const { return matching_; }
  int length(int c) const { return static_cast<int>(cycles_.at(c).size()); }
  bool is_odd(int c) const { return length(c) % 2 == 1; }

  /// -1 for vertices on no cycle.
  int cycle_of_vertex(int v) const { return vertex_cycle_.at(v); }
  /// -1 for matching edges; otherwise the cycle index.
  int cycle_of_edge(EdgeId e) const { return edge_cycle_.at(e.index); }
  /// Position of a cycle edge inside cycle_edges(cycle_of_edge(e)).
  int position_of_edge(EdgeId e) const { return edge_position_.at(e.index); }

  std::vector<int> odd_cycles() const;
  int odd_count() const;
  std::vector<EdgeId> factor_edges() const;

 private:
  TwoFactor() = default;

  const Graph* graph_ = nullptr;
  std::vector<std::vector<int>> cycles_;
  std::vector<std::vector<EdgeId>> cycle_edges_;
  std::vector<EdgeId> matching_;
  std::vector<int> vertex_cycle_;
  std::vector<int> edge_cycle_;
  std::vector<int> edge_position_;
};

inline TwoFactor two_factor_from_matching(const Graph& g,
                                          std::span<const EdgeId> matching) {
  return TwoFactor::from_matching(g, matching);
}

struct MinOddFactor {
  TwoFactor factor;
  int oddness;
};

/// Exhaustive over perfect matchings; the first factor reaching the minimum
/// number of odd cycles wins. Throws NoTwoFactor when there is no perfect
/// matching.
MinOddFactor min_odd_two_factor(const Graph& g);

enum class Label { Plus, Minus };

/// Labels on odd-cycle vertices: Plus iff the vertex has a neighbour on a
/// different odd cycle. Vertices of even cycles carry no label.
class VertexLabeling {
 public:
  explicit VertexLabeling(const TwoFactor& f);

  std::optional<Label> label(int v) const { return labels_.at(v); }
  bool plus(int v) const { return labels_.at(v) == Label::Plus; }
  std::size_t labeled_count() const;

 private:
  std::vector<std::optional<Label>> labels_;
};

inline VertexLabeling label_vertices(const TwoFactor& f) { return VertexLabeling(f); }

/// True iff no three edges on three distinct odd cycles induce a subgraph
/// (on their six endpoints) containing a path with five edges.
bool check_p5_property(const TwoFactor& f);

enum class SetKind { TypeI, TypeII };

struct TypedEdgeSet {
  SetKind kind = SetKind::TypeI;
  std::vector<EdgeId> edges;
};

/// One edge on every odd cycle, none on even cycles.
bool is_type1(const TwoFactor& f, std::span<const EdgeId> edges);
/// Pairwise non-adjacent, floor(len/2) edges on every cycle.
bool is_type2(const TwoFactor& f, std::span<const EdgeId> edges);

/// Candidate order per odd cycle used by find_type1_set. Edges whose two
/// ends share a label come first (Plus-Plus before Minus-Minus), then the
/// rest, each group in cycle order.
std::vector<std::vector<EdgeId>> type1_candidates(const TwoFactor& f);

/// Backtracking search, one edge per odd cycle, for a type-I set A with
/// max degree of G^k[A] at most `max_degree`. std::nullopt only after every
/// combination has been refuted.
std::optional<TypedEdgeSet> find_type1_set(const TwoFactor& f,
                                           const DistanceTable& d, int k,
                                           int max_degree);

/// Splits E(F) minus `exclude` into two type-II sets B and C. Even cycles
/// alternate starting at their first edge; on odd cycles the alternation
/// starts right after the excluded edge, so its two neighbours land in
/// different sets. Throws DomainError if `exclude` is not type I.
std::pair<TypedEdgeSet, TypedEdgeSet> partition_type2(const TwoFactor& f,
                                                      const TypedEdgeSet& exclude);

}  // namespace packedge
