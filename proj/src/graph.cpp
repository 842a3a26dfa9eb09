#include "packedge/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "packedge/error.hpp"

namespace packedge {

Graph::Graph(int order, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (order < 0) throw DomainError("graph order must be nonnegative");
  incident_.resize(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u == e.v) {
      throw DomainError("loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= order) {
      throw DomainError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") out of range for order " +
                        std::to_string(order));
    }
    for (EdgeId f : incident_[e.u]) {
      if (edges_[f.index].other(e.u) == e.v) {
        throw DomainError("duplicate edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ")");
      }
    }
    incident_[e.u].push_back(EdgeId(static_cast<std::uint32_t>(i)));
    incident_[e.v].push_back(EdgeId(static_cast<std::uint32_t>(i)));
  }
}

void Graph::check(EdgeId e) const {
  if (!valid(e)) {
    throw DomainError("invalid edge id " + std::to_string(e.index) +
                      " (graph has " + std::to_string(size()) + " edges)");
  }
}

const Edge& Graph::edge(EdgeId e) const {
  check(e);
  return edges_[e.index];
}

std::span<const EdgeId> Graph::incident(int v) const {
  if (v < 0 || v >= order()) {
    throw DomainError("invalid vertex " + std::to_string(v));
  }
  return incident_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (EdgeId e : incident(v)) out.push_back(edges_[e.index].other(v));
  return out;
}

std::optional<EdgeId> Graph::find_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return std::nullopt;
  for (EdgeId e : incident_[static_cast<std::size_t>(u)]) {
    if (edges_[e.index].other(u) == v) return e;
  }
  return std::nullopt;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& inc : incident_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

bool Graph::is_cubic() const {
  return std::all_of(incident_.begin(), incident_.end(),
                     [](const auto& inc) { return inc.size() == 3; });
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(incident_.size(), -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident_[v]) {
        int w = edges_[e.index].other(v);
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

ConflictGraph::ConflictGraph(const Graph& base, const DistanceTable& distances,
                             std::span<const EdgeId> subset, int radius)
    : base_(&base), radius_(radius), members_(subset.begin(), subset.end()) {
  if (radius < 1) throw DomainError("conflict graph radius must be >= 1");
  if (distances.size() != base.size()) {
    throw DomainError("distance table does not match graph");
  }
  std::vector<char> seen(static_cast<std::size_t>(base.size()), 0);
  for (EdgeId e : members_) {
    base.edge(e);
    if (seen[e.index]) {
      throw DomainError("duplicate edge id " + std::to_string(e.index) +
                        " in conflict-graph subset");
    }
    seen[e.index] = 1;
  }
  const int n = vertex_count();
  adj_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (distances(members_[a], members_[b]) <= radius) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
      }
    }
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int ConflictGraph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

std::size_t ConflictGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

bool ConflictGraph::adjacent(int a, int b) const {
  const auto& row = adj_.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<std::vector<int>> ConflictGraph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(adj_.size(), 0);
  for (int s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : adj_[comp[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ConflictGraph conflict_graph(const Graph& g, const DistanceTable& d,
                             std::span<const EdgeId> subset, int k) {
  return ConflictGraph(g, d, subset, k);
}

ConflictGraph conflict_graph(const Graph& g, std::span<const EdgeId> subset,
                             int k) {
  return ConflictGraph(g, DistanceTable(g), subset, k);
}

}  // namespace packedge
