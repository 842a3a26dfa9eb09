#include "doctest.h"
#include "packedge/error.hpp"
#include "packedge/families.hpp"
#include "packedge/graph6.hpp"
#include "support.hpp"

using namespace packedge;

TEST_CASE("K4 is C~") {
  CHECK(encode_graph6(support::k4()) == "C~");
  CHECK(parse_graph6("C~") == support::k4());
  CHECK(parse_graph6(">>graph6<<C~\n") == support::k4());
}

TEST_CASE("Petersen graph6 record") {
  // Independent encoding of GP(5,2) with our vertex numbering.
  const Graph p = generate(FamilySpec::petersen());
  std::string bits;
  for (int v = 1; v < 10; ++v)
    for (int u = 0; u < v; ++u) bits += p.adjacent(u, v) ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  std::string expect(1, static_cast<char>(10 + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) expect += static_cast<char>(std::stoi(bits.substr(i, 6), nullptr, 2) + 63);
  CHECK(encode_graph6(p) == expect);
}

TEST_CASE("round trip over the fixture corpus is byte-identical") {
  for (const auto& f : support::fixtures()) {
    const std::string g6 = encode_graph6(f.graph);
    const Graph back = parse_graph6(g6);
    CHECK(encode_graph6(back) == g6);
    CHECK(back.order() == f.graph.order());
    CHECK(back.size() == f.graph.size());
    for (const Edge& e : f.graph.edges()) CHECK(back.adjacent(e.u, e.v));
  }
}

TEST_CASE("large orders use the long header") {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < 100; ++i) edges.push_back({i, i + 1});
  const Graph path(100, edges);
  const std::string g6 = encode_graph6(path);
  CHECK(g6[0] == '~');
  CHECK(parse_graph6(g6) == path);
}

TEST_CASE("malformed graph6") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);       // truncated
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);     // trailing byte
  CHECK_THROWS_AS(parse_graph6("C\x7f"), ParseError);   // out of range
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);      // padding bit set
  try {
    parse_graph6("C ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("# order 5\n0 1\n1 2 # comment\n\n");
  CHECK(g.order() == 5);
  CHECK(g.size() == 2);
  CHECK(parse_edge_list(encode_edge_list(g)) == g);
  CHECK_THROWS(parse_edge_list("0 x\n"));
}

TEST_CASE("multi-graph files and format detection") {
  auto graphs = parse_graphs("C~\nBw\n");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == support::k4());
  auto one = parse_graphs("0 1\n1 2\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 2);
  try {
    parse_graphs("C~\nC~~\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
}
