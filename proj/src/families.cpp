#include "packedge/families.hpp"

#include <algorithm>
#include <vector>

#include "packedge/error.hpp"

namespace packedge {
namespace {

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw DomainError("GP(n,k) requires n >= 3 and 1 <= k < n/2");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + k) % n});
  return Graph(2 * n, std::move(edges));
}

Graph flower_snark(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("flower snark J_n requires odd n >= 3");
  auto a = [](int i) { return i; };
  auto b = [n](int i) { return n + i; };
  auto c = [n](int i) { return 2 * n + i; };
  auto d = [n](int i) { return 3 * n + i; };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({a(i), b(i)});
    edges.push_back({a(i), c(i)});
    edges.push_back({a(i), d(i)});
  }
  for (int i = 0; i < n; ++i) edges.push_back({b(i), b((i + 1) % n)});
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({c(i), c(i + 1)});
    edges.push_back({d(i), d(i + 1)});
  }
  edges.push_back({c(n - 1), d(0)});
  edges.push_back({d(n - 1), c(0)});
  return Graph(4 * n, std::move(edges));
}

// Petersen graph with outer vertex 0 replaced by a triangle (vertices 9..11)
// attached to its former neighbours. Outer path 0-1-2-3, spokes 0-5 .. 3-8,
// inner 5-cycle on 4..8.
Graph tietze() {
  return Graph(12, {{0, 1}, {1, 2}, {2, 3},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8},
                    {4, 6}, {5, 7}, {6, 8}, {4, 7}, {5, 8},
                    {9, 10}, {10, 11}, {9, 11},
                    {0, 9}, {3, 10}, {4, 11}});
}

// Transcribed from the drawing: x1..x4 = 0..3 (K4 minus x2x3), hub x5 = 4,
// bridge x5-y1, y1..y7 = 5..11.
Graph fig6() {
  return Graph(12, {{0, 1}, {1, 3}, {3, 0}, {0, 2}, {2, 4}, {4, 1}, {2, 3},
                    {4, 5},
                    {5, 6}, {6, 10}, {10, 8}, {8, 11},
                    {5, 7}, {7, 9}, {9, 10}, {8, 7},
                    {6, 11}, {11, 9}});
}

Graph tree(int i, bool primed) {
  if (i < 1) throw DomainError("tree index must be >= 1");
  if (i > 16) throw DomainError("tree index too large");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  int order = 4;
  std::vector<int> degree{3, 1, 1, 1};
  auto add_leaves = [&](int v) {
    for (int t = 0; t < 2; ++t) {
      edges.push_back({v, order});
      degree.push_back(1);
      ++order;
    }
    degree[v] += 2;
  };
  if (primed) add_leaves(1);
  for (int gen = 2; gen <= i; ++gen) {
    std::vector<int> leaves;
    for (int v = 0; v < order; ++v) {
      if (degree[v] == 1) leaves.push_back(v);
    }
    for (int v : leaves) add_leaves(v);
  }
  return Graph(order, std::move(edges));
}

}  // namespace

std::string FamilySpec::name() const {
  switch (family) {
    case Family::Petersen: return "petersen";
    case Family::Tietze: return "tietze";
    case Family::Fig6: return "fig6";
    case Family::GeneralizedPetersen:
      return "gp(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Family::FlowerSnark: return "J" + std::to_string(n);
    case Family::Prism: return "prism(" + std::to_string(n) + ")";
    case Family::TreeT: return "T" + std::to_string(i);
    case Family::TreeTPrime: return "T'" + std::to_string(i);
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Petersen: return generalized_petersen(5, 2);
    case Family::Tietze: return tietze();
    case Family::Fig6: return fig6();
    case Family::GeneralizedPetersen: return generalized_petersen(spec.n, spec.k);
    case Family::FlowerSnark: return flower_snark(spec.n);
    case Family::Prism:
      if (spec.n < 3) throw DomainError("prism requires n >= 3");
      return generalized_petersen(spec.n, 1);
    case Family::TreeT: return tree(spec.i, false);
    case Family::TreeTPrime: return tree(spec.i, true);
  }
  throw DomainError("unknown family");
}

int line_graph_diameter(const Graph& g) {
  if (g.size() == 0) throw DomainError("line_graph_diameter: graph has no edges");
  DistanceTable d(g);
  if (!d.connected()) throw DomainError("line_graph_diameter: graph is disconnected");
  return d.max_finite();
}

}  // namespace packedge
