#include <algorithm>
#include <map>

#include "doctest.h"
#include "packedge/error.hpp"
#include "packedge/families.hpp"
#include "support.hpp"

using namespace packedge;

namespace {

std::map<int, int> distance_histogram(const Graph& g) {
  std::map<int, int> h;
  const auto d = support::floyd_line_distances(g);
  for (int e = 0; e < g.size(); ++e)
    for (int f = e + 1; f < g.size(); ++f) ++h[d[e][f]];
  return h;
}

}  // namespace

TEST_CASE("generalized Petersen graphs are cubic with 3n edges") {
  for (int n = 5; n <= 13; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      const Graph g = generate(FamilySpec::gp(n, k));
      CHECK(g.order() == 2 * n);
      CHECK(g.size() == 3 * n);
      CHECK(g.is_cubic());
      CHECK(g.is_connected());
    }
  CHECK_THROWS_AS(generate(FamilySpec::gp(6, 3)), DomainError);
  CHECK_THROWS_AS(generate(FamilySpec::gp(2, 1)), DomainError);
}

TEST_CASE("Petersen graph: girth 5 and every edge pair within distance 3") {
  const Graph p = generate(FamilySpec::petersen());
  CHECK(p.size() == 15);
  for (const Edge& e : p.edges())
    for (int w : p.neighbors(e.u)) CHECK_FALSE(p.adjacent(w, e.v));  // no triangles
  CHECK(distance_histogram(p).rbegin()->first == 3);
}

TEST_CASE("flower snarks") {
  for (int n : {3, 5, 7, 9}) {
    const Graph j = generate(FamilySpec::flower(n));
    CHECK(j.order() == 4 * n);
    CHECK(j.is_cubic());
    CHECK(j.is_connected());
  }
  CHECK_THROWS_AS(generate(FamilySpec::flower(4)), DomainError);
}

TEST_CASE("J3 looks like the Tietze graph") {
  const Graph j3 = generate(FamilySpec::flower(3));
  const Graph t = generate(FamilySpec::tietze());
  CHECK(t.order() == 12);
  CHECK(t.is_cubic());
  CHECK(distance_histogram(j3) == distance_histogram(t));
}

TEST_CASE("Fig6 graph: cubic, order 12, with a bridge") {
  const Graph g = generate(FamilySpec::fig6());
  CHECK(g.order() == 12);
  CHECK(g.is_cubic());
  CHECK(g.is_connected());
  int bridges = 0;
  for (int e = 0; e < g.size(); ++e) {
    std::vector<Edge> rest;
    for (int f = 0; f < g.size(); ++f)
      if (f != e) rest.push_back(g.edges()[f]);
    if (!Graph(g.order(), rest).is_connected()) ++bridges;
  }
  CHECK(bridges == 1);
}

TEST_CASE("trees T_i and T'_i") {
  for (int i = 1; i <= 6; ++i) {
    const Graph t = generate(FamilySpec::tree(i));
    const Graph tp = generate(FamilySpec::tree_prime(i));
    CAPTURE(i);
    CHECK(t.size() == 3 * ((1 << i) - 1));
    CHECK(tp.size() == (1 << (i + 2)) - 3);
    CHECK(t.is_subcubic());
    CHECK(tp.is_subcubic());
    CHECK(t.size() == t.order() - 1);
    CHECK(tp.size() == tp.order() - 1);
    CHECK(line_graph_diameter(t) == 2 * i - 1);
    CHECK(line_graph_diameter(tp) == 2 * i);
  }
  CHECK_THROWS_AS(generate(FamilySpec::tree(0)), DomainError);
}

TEST_CASE("line graph diameter needs a connected graph with edges") {
  CHECK_THROWS_AS(line_graph_diameter(Graph(3, {})), DomainError);
  CHECK_THROWS_AS(line_graph_diameter(Graph(4, {{0, 1}, {2, 3}})), DomainError);
  CHECK(line_graph_diameter(Graph(2, {{0, 1}})) == 0);
}
