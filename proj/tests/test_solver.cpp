#include <random>

#include "doctest.h"
#include "packedge/error.hpp"
#include "packedge/families.hpp"
#include "packedge/packing.hpp"
#include "support.hpp"

using namespace packedge;

namespace {

std::vector<int> expand(const PackingSequence& s) { return {s.radii().begin(), s.radii().end()}; }

}  // namespace

TEST_CASE("sequence parsing") {
  CHECK(expand(PackingSequence::parse("1^2,2^5")) == std::vector<int>{1, 1, 2, 2, 2, 2, 2});
  CHECK(expand(PackingSequence::parse("3")) == std::vector<int>{3});
  CHECK(expand(PackingSequence::parse(" 1 , 1,2 ")) == std::vector<int>{1, 1, 2});
  CHECK(PackingSequence::parse("1,1,2,2,2,2,2").to_string() == "1^2,2^5");
  CHECK_THROWS_WITH_AS(PackingSequence::parse("2,1"), "sequence must be non-decreasing", DomainError);
  CHECK_THROWS_AS(PackingSequence::parse("1,"), DomainError);
  CHECK_THROWS_AS(PackingSequence::parse("0"), DomainError);
  CHECK_THROWS_AS(PackingSequence::parse("-1"), DomainError);
  CHECK_THROWS_AS(PackingSequence::parse("1^0"), DomainError);
  CHECK_THROWS_AS(PackingSequence::parse("a"), DomainError);
  CHECK_THROWS_AS(PackingSequence::parse(""), DomainError);
}

TEST_CASE("verify reports the first violation") {
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const PackingSequence s({1, 1});
  CHECK(verify(path, {s, {1, 2, 1}}).ok);
  auto bad = verify(path, {s, {1, 1, 2}});
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.violation->first == EdgeId(0));
  CHECK(bad.violation->second == EdgeId(1));
  CHECK(bad.violation->distance == 1);
  CHECK_FALSE(verify(path, {PackingSequence({2, 2}), {1, 2, 1}}).ok);
  // Unused colors are fine.
  CHECK(verify(path, {PackingSequence({1, 1, 5}), {1, 2, 1}}).ok);
  CHECK_THROWS_AS(verify(path, {s, {1, 2}}), DomainError);
  CHECK_THROWS_AS(verify(path, {s, {1, 2, 3}}), DomainError);
  CHECK_THROWS_AS(verify(path, {s, {0, 2, 1}}), DomainError);
}

TEST_CASE("Petersen decisions") {
  const Graph p = generate(FamilySpec::petersen());
  CHECK(solve(p, PackingSequence::parse("1,1,2,2")).status == SolveStatus::NotColorable);
  CHECK(solve(p, PackingSequence::parse("1,1,1,2")).status == SolveStatus::Colorable);
  CHECK(solve(p, PackingSequence::parse("1^2,2^3")).status == SolveStatus::Colorable);
  CHECK(solve(p, PackingSequence::parse("1,1,1,3")).status == SolveStatus::NotColorable);
  CHECK(solve(p, PackingSequence::parse("1,1,1")).status == SolveStatus::NotColorable);
  CHECK(solve(p, PackingSequence::parse("1,1,1,1")).status == SolveStatus::Colorable);
  CHECK(solve(p, PackingSequence::parse("3^15")).status == SolveStatus::Colorable);
  CHECK(solve(p, PackingSequence::parse("3^14")).status == SolveStatus::NotColorable);
}

TEST_CASE("colorings come back verified") {
  const Graph p = generate(FamilySpec::petersen());
  const auto out = solve(p, PackingSequence::parse("1,1,1,2"));
  REQUIRE(out.coloring);
  CHECK(support::naive_valid(p, {1, 1, 1, 2}, out.coloring->colors));
}

TEST_CASE("solver agrees with exhaustive enumeration on random small graphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = support::random_subcubic(rng, 8);
    std::vector<int> radii(std::uniform_int_distribution<int>(1, 3)(rng));
    for (int& r : radii) r = std::uniform_int_distribution<int>(1, 4)(rng);
    std::sort(radii.begin(), radii.end());
    const PackingSequence s(radii);
    const bool truth = support::naive_colorable(g, radii);
    const auto par = solve(g, s);
    const auto ser = solve_serial(g, s);
    CAPTURE(trial);
    CHECK((par.status == SolveStatus::Colorable) == truth);
    CHECK((ser.status == SolveStatus::Colorable) == truth);
    if (truth) CHECK(support::naive_valid(g, radii, par.coloring->colors));
  }
}

TEST_CASE("parallel and serial searches return the same coloring") {
  const char* sequences[] = {"1,1,1,2", "1^2,2^3", "1,1,2,2", "1,2^6", "1,1,1,3"};
  for (const auto& fx : support::fixtures()) {
    if (fx.graph.order() > 20) continue;
    for (const char* spec : sequences) {
      const PackingSequence s = PackingSequence::parse(spec);
      const auto ser = solve_serial(fx.graph, s);
      for (int target : {0, 1, 3, 64}) {
        const auto par = solve(fx.graph, s, {}, {target});
        CAPTURE(fx.name);
        CAPTURE(spec);
        CHECK(par.status == ser.status);
        if (ser.coloring && par.coloring) CHECK(par.coloring->colors == ser.coloring->colors);
      }
    }
  }
}

TEST_CASE("budgets") {
  const Graph g = generate(FamilySpec::fig6());
  const PackingSequence s = PackingSequence::parse("1,2^6");
  CHECK(solve(g, s, Budget{1, 0}).status == SolveStatus::Timeout);
  CHECK(solve_serial(g, s, Budget{1, 0}).status == SolveStatus::Timeout);
  CHECK(solve(g, s, Budget{0, 1e-9}).status == SolveStatus::Timeout);
  const auto full = solve_serial(g, s);
  CHECK(full.status == SolveStatus::NotColorable);
  CHECK(full.stats.nodes > 0);
  CHECK(Budget{}.unlimited());
}

TEST_CASE("edgeless and tiny graphs") {
  CHECK(solve(Graph(3, {}), PackingSequence({1})).status == SolveStatus::Colorable);
  CHECK(solve(Graph(2, {{0, 1}}), PackingSequence({5})).status == SolveStatus::Colorable);
  CHECK(solve(Graph(3, {{0, 1}, {1, 2}}), PackingSequence({1})).status == SolveStatus::NotColorable);
}

TEST_CASE("more than 64 colors is rejected") {
  CHECK_THROWS_AS(solve(support::k4(), PackingSequence::parse("1^65")), DomainError);
}

TEST_CASE("conflict graph coloring") {
  const Graph p = generate(FamilySpec::petersen());
  const DistanceTable d(p);
  std::vector<EdgeId> all;
  for (int e = 0; e < p.size(); ++e) all.push_back(EdgeId(e));
  ConflictGraph line(p, d, all, 1);
  CHECK_FALSE(color_conflict_graph(line, 3).has_value());  // Petersen is a snark
  auto four = color_conflict_graph(line, 4);
  REQUIRE(four);
  for (int a = 0; a < line.vertex_count(); ++a)
    for (int b : line.neighbors(a)) CHECK((*four)[a] != (*four)[b]);
  ConflictGraph complete(p, d, all, 3);
  CHECK_FALSE(color_conflict_graph(complete, 14).has_value());
  CHECK(color_conflict_graph(complete, 15).has_value());
}
