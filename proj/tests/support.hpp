#pragma once

// Independent oracles and fixtures shared by the unit and acceptance tests.
// Nothing here calls into the solver or distance code under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "packedge/families.hpp"
#include "packedge/graph.hpp"

namespace support {

using packedge::Edge;
using packedge::Graph;

inline constexpr int kFar = 1 << 20;

// All-pairs line-graph distance by Floyd-Warshall over the line graph.
inline std::vector<std::vector<int>> floyd_line_distances(const Graph& g) {
  const int m = g.size();
  std::vector<std::vector<int>> d(m, std::vector<int>(m, kFar));
  for (int e = 0; e < m; ++e) {
    d[e][e] = 0;
    for (int f = 0; f < m; ++f) {
      const Edge a = g.edges()[e], b = g.edges()[f];
      if (e != f && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)) d[e][f] = 1;
    }
  }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Tries every one of |radii|^m assignments.
inline bool naive_colorable(const Graph& g, const std::vector<int>& radii) {
  const int m = g.size(), k = static_cast<int>(radii.size());
  const auto d = floyd_line_distances(g);
  std::vector<int> col(m, 0);
  while (true) {
    bool ok = true;
    for (int e = 0; e < m && ok; ++e)
      for (int f = e + 1; f < m && ok; ++f)
        if (col[e] == col[f] && d[e][f] <= radii[col[e]]) ok = false;
    if (ok) return true;
    int i = 0;
    while (i < m && ++col[i] == k) col[i++] = 0;
    if (i == m) return false;
  }
}

// Direct check of an assignment (colors 1-based) against Floyd distances.
inline bool naive_valid(const Graph& g, const std::vector<int>& radii,
                        const std::vector<int>& colors) {
  const auto d = floyd_line_distances(g);
  for (int e = 0; e < g.size(); ++e)
    for (int f = e + 1; f < g.size(); ++f)
      if (colors[e] == colors[f] && d[e][f] <= radii[colors[e] - 1]) return false;
  return true;
}

inline Graph random_subcubic(std::mt19937& rng, int max_edges) {
  std::uniform_int_distribution<int> order_dist(2, 8);
  const int n = order_dist(rng);
  std::vector<Edge> edges;
  std::vector<int> deg(n, 0);
  std::uniform_int_distribution<int> v_dist(0, n - 1);
  const int target = std::uniform_int_distribution<int>(1, max_edges)(rng);
  for (int tries = 0; tries < 200 && static_cast<int>(edges.size()) < target; ++tries) {
    int u = v_dist(rng), v = v_dist(rng);
    if (u == v || deg[u] == 3 || deg[v] == 3) continue;
    if (u > v) std::swap(u, v);
    if (std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end()) continue;
    edges.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  return Graph(n, std::move(edges));
}

// Random cubic graph by the pairing model, retried until simple.
inline Graph random_cubic(std::mt19937& rng, int n) {
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), 3, v);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      int u = std::min(points[i], points[i + 1]), v = std::max(points[i], points[i + 1]);
      if (u == v || std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end()) simple = false;
      edges.push_back({u, v});
    }
    if (simple) return Graph(n, std::move(edges));
  }
}

inline Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph k4() { return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  return Graph(6, std::move(edges));
}

inline Graph heawood() {
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) edges.push_back({std::min(i, (i + 1) % 14), std::max(i, (i + 1) % 14)});
  for (int i = 0; i < 14; i += 2) edges.push_back({std::min(i, (i + 5) % 14), std::max(i, (i + 5) % 14)});
  return Graph(14, std::move(edges));
}

// Two Petersen copies, each missing two spokes, joined by four cross edges.
// With its four 5-cycles as 2-factor, three edges on three odd cycles span a
// path of length five. Per copy: outer P0..P4 = b..b+4, inner Qtop = b+5,
// Qbl = b+6, Qbr = b+7, Ql = b+8, Qr = b+9.
struct TwoPetersens {
  Graph graph;
  std::vector<std::pair<int, int>> matching;
  std::pair<int, int> e1, e2, e3;
};

inline TwoPetersens two_petersens() {
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> matching;
  auto add = [&](int u, int v, bool in_matching) {
    edges.push_back({std::min(u, v), std::max(u, v)});
    if (in_matching) matching.emplace_back(std::min(u, v), std::max(u, v));
  };
  for (int b : {0, 10}) {
    for (int i = 0; i < 5; ++i) add(b + i, b + (i + 1) % 5, false);
    const int ring[5] = {5, 6, 9, 8, 7};  // Qtop Qbl Qr Ql Qbr
    for (int i = 0; i < 5; ++i) add(b + ring[i], b + ring[(i + 1) % 5], false);
    add(b + 3, b + 5, true);  // P3-Qtop
  }
  add(4, 8, true);    // left P4-Ql
  add(0, 6, true);    // left P0-Qbl
  add(12, 19, true);  // right P2-Qr
  add(11, 17, true);  // right P1-Qbr
  add(2, 14, true);   // L.P2 - R.P4
  add(16, 1, true);   // R.Qbl - L.P1
  add(18, 9, true);   // R.Ql - L.Qr
  add(10, 7, true);   // R.P0 - L.Qbr
  return {Graph(20, std::move(edges)), matching, {1, 2}, {13, 14}, {15, 16}};
}

struct Fixture {
  std::string name;
  Graph graph;
  bool bridgeless = true;
};

// Cubic fixture corpus: named snarks, generalized Petersen graphs, prisms and
// a few classics.
inline std::vector<Fixture> fixtures() {
  using packedge::FamilySpec;
  using packedge::generate;
  std::vector<Fixture> out;
  out.push_back({"petersen", generate(FamilySpec::petersen())});
  out.push_back({"tietze", generate(FamilySpec::tietze())});
  for (int n = 5; n <= 9; ++n)
    for (int k = 1; 2 * k < n; ++k)
      if (!(n == 5 && k == 2)) out.push_back({"gp" + std::to_string(n) + "_" + std::to_string(k), generate(FamilySpec::gp(n, k))});
  out.push_back({"flower5", generate(FamilySpec::flower(5))});
  out.push_back({"flower7", generate(FamilySpec::flower(7))});
  for (int n : {3, 4, 10, 11, 12}) out.push_back({"prism" + std::to_string(n), generate(FamilySpec::prism(n))});
  out.push_back({"k4", k4()});
  out.push_back({"k33", k33()});
  out.push_back({"heawood", heawood()});
  out.push_back({"fig6", generate(FamilySpec::fig6()), false});
  return out;
}

}  // namespace support
