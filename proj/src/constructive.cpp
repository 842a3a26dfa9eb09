#include "packedge/constructive.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "packedge/error.hpp"
#include "packedge/sequences.hpp"

namespace packedge {
namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 8> kNames{{
    {Theorem::T4_1112, "1112"},
    {Theorem::T5_11133, "11133"},
    {Theorem::T7_1114x5, "1114x5"},
    {Theorem::T9_11k, "11k"},
    {Theorem::T15_1k, "1k"},
    {Theorem::P6_1113, "1113"},
    {Theorem::C_112x5, "112x5"},
    {Theorem::MATCH_1122, "1122"},
}};

void require_cubic(const Graph& g, const char* what) {
  if (!g.is_cubic()) throw DomainError(std::string(what) + ": graph is not cubic");
}

SetColoring single_color(const TypedEdgeSet& s) {
  return {std::vector<int>(s.edges.size(), 0), 1};
}

SetColoring color_set(const Graph& g, const DistanceTable& d, const TypedEdgeSet& s, int k,
                      int budget, const char* what) {
  ConflictGraph h(g, d, s.edges, k);
  auto colors = color_conflict_graph(h, std::max(budget, 1));
  if (!colors) {
    throw std::logic_error(std::string(what) + ": conflict graph not " +
                           std::to_string(budget) + "-colorable");
  }
  return {std::move(*colors), budget};
}

int conflict_degree(const Graph& g, const DistanceTable& d, std::span<const EdgeId> a, int k) {
  return ConflictGraph(g, d, a, k).max_degree();
}

// Cyclic access helpers for one cycle of the factor.
struct CycleView {
  std::span<const int> verts;
  std::span<const EdgeId> edges;
  int len() const { return static_cast<int>(verts.size()); }
  int at(int j) const { return verts[((j % len()) + len()) % len()]; }
  EdgeId edge(int j) const { return edges[((j % len()) + len()) % len()]; }
};

ConstructionPlan plan_for(Theorem t, TwoFactor factor, TypedEdgeSet a, int k) {
  auto [b, c] = partition_type2(factor, a);
  return ConstructionPlan{t, std::move(factor), std::move(a), std::move(b), std::move(c), k};
}

// Type-I set built by a proof's selection rule, repaired by the exhaustive
// search when the rule's degree bound does not hold on this instance.
TypedEdgeSet rule_or_search(const TwoFactor& f, const DistanceTable& d,
                            std::vector<EdgeId> by_rule, int k, int max_degree,
                            const char* what, std::vector<std::string>& notes) {
  const int deg = conflict_degree(f.graph(), d, by_rule, k);
  if (deg <= max_degree) return {SetKind::TypeI, std::move(by_rule)};
  notes.push_back(std::string(what) + ": selection rule gave max degree " +
                  std::to_string(deg) + " > " + std::to_string(max_degree) +
                  " in G^" + std::to_string(k) + "[A]; fell back to exhaustive search");
  auto found = find_type1_set(f, d, k, max_degree);
  if (!found) {
    throw std::logic_error(std::string(what) + ": no type-I set with max degree <= " +
                           std::to_string(max_degree) + " exists for this 2-factor");
  }
  return std::move(*found);
}

Construction finish(ConstructionPlan plan, Variant v, const SetColoring& a,
                    const SetColoring& b, const SetColoring& c,
                    std::vector<std::string> notes) {
  PackingColoring coloring = assemble(plan, v, a, b, c);
  return Construction{std::move(plan), std::move(coloring), std::move(notes)};
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  for (const auto& [theorem, name] : kNames) {
    if (theorem == t) return name;
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (const auto& [theorem, n] : kNames) {
    if (n == name) return theorem;
  }
  return std::nullopt;
}

PackingColoring assemble(const ConstructionPlan& plan, Variant variant, const SetColoring& a,
                         const SetColoring& b, const SetColoring& c) {
  const TwoFactor& f = plan.factor;
  const Graph& g = f.graph();
  const int k = plan.radius_k;
  if (k < 1) throw DomainError("assemble: radius must be >= 1");

  std::vector<int> colors(static_cast<std::size_t>(g.size()), 0);
  auto place = [&](const TypedEdgeSet& set, const SetColoring* sc, int base) {
    if (sc && sc->colors.size() != set.edges.size()) {
      throw DomainError("assemble: set coloring size does not match its set");
    }
    for (std::size_t i = 0; i < set.edges.size(); ++i) {
      EdgeId e = set.edges[i];
      if (!g.valid(e) || f.cycle_of_edge(e) < 0) {
        throw DomainError("assemble: set member is not a 2-factor edge");
      }
      if (colors[e.index] != 0) throw DomainError("assemble: sets overlap");
      int offset = 0;
      if (sc) {
        offset = sc->colors[i];
        if (offset < 0 || offset >= sc->budget) {
          throw DomainError("assemble: set coloring exceeds its budget");
        }
      }
      colors[e.index] = base + offset;
    }
  };
  for (EdgeId e : f.matching()) colors[e.index] = 1;

  std::vector<int> radii;
  switch (variant) {
    case Variant::I:
      place(plan.set_b, nullptr, 2);
      place(plan.set_c, nullptr, 3);
      place(plan.set_a, &a, 4);
      radii = {1, 1, 1};
      radii.insert(radii.end(), static_cast<std::size_t>(a.budget), k);
      break;
    case Variant::II:
      place(plan.set_c, nullptr, 2);
      place(plan.set_a, &a, 3);
      place(plan.set_b, &b, 3 + a.budget);
      radii = {1, 1};
      radii.insert(radii.end(), static_cast<std::size_t>(a.budget + b.budget), k);
      break;
    case Variant::III:
      place(plan.set_a, &a, 2);
      place(plan.set_b, &b, 2 + a.budget);
      place(plan.set_c, &c, 2 + a.budget + b.budget);
      radii = {1};
      radii.insert(radii.end(), static_cast<std::size_t>(a.budget + b.budget + c.budget), k);
      break;
  }
  if (std::find(colors.begin(), colors.end(), 0) != colors.end()) {
    throw DomainError("assemble: sets do not cover the 2-factor");
  }

  PackingColoring out{PackingSequence(std::move(radii)), std::move(colors)};
  if (!verify(g, out)) {
    throw std::logic_error("assemble: " + std::string(theorem_name(plan.theorem)) +
                           " coloring failed verification");
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<EdgeId> select_type1_for_11133(const TwoFactor& f) {
  const VertexLabeling labels(f);
  std::vector<EdgeId> out;
  for (int cy : f.odd_cycles()) {
    CycleView c{f.cycle(cy), f.cycle_edges(cy)};
    // An odd cycle always has two consecutive vertices with equal labels.
    for (int j = 0; j < c.len(); ++j) {
      bool p1 = labels.plus(c.at(j)), p2 = labels.plus(c.at(j + 1));
      if (p1 != p2) continue;
      out.push_back(p1 ? c.edge(j) : c.edge(j + 1));  // u1u2, or u2u3 for (-,-)
      break;
    }
  }
  return out;
}

std::vector<EdgeId> select_type1_for_1114x5(const TwoFactor& f) {
  const VertexLabeling labels(f);
  std::vector<EdgeId> out;
  for (int cy : f.odd_cycles()) {
    CycleView c{f.cycle(cy), f.cycle_edges(cy)};
    auto plus = [&](int j) { return labels.plus(c.at(j)); };
    std::optional<EdgeId> pick;
    for (int j = 0; j < c.len() && !pick; ++j) {
      if (plus(j) && plus(j + 1)) pick = c.edge(j);
    }
    if (!pick) {
      bool any_plus = false;
      for (int j = 0; j < c.len(); ++j) any_plus = any_plus || plus(j);
      if (!any_plus) pick = c.edge(0);
    }
    for (int j = 0; j < c.len() && !pick; ++j) {
      if (!plus(j - 2) && !plus(j - 1) && plus(j) && !plus(j + 1)) pick = c.edge(j);
    }
    out.push_back(pick.value_or(c.edge(0)));
  }
  return out;
}

Construction construct_1112(const Graph& g) {
  require_cubic(g, "construct_1112");
  auto [factor, oddness] = min_odd_two_factor(g);
  const DistanceTable d(g);
  auto a = find_type1_set(factor, d, 2, 0);
  if (!a) {
    throw std::logic_error("construct_1112: no type-I set with edgeless G^2[A] "
                           "in a minimum-odd 2-factor");
  }
  SetColoring ca = single_color(*a);
  auto plan = plan_for(Theorem::T4_1112, std::move(factor), std::move(*a), 2);
  return finish(std::move(plan), Variant::I, ca, {}, {}, {});
}

Construction construct_11133(const Graph& g) {
  require_cubic(g, "construct_11133");
  auto [factor, oddness] = min_odd_two_factor(g);
  const DistanceTable d(g);
  std::vector<std::string> notes;
  TypedEdgeSet a = rule_or_search(factor, d, select_type1_for_11133(factor), 3, 1,
                                  "construct_11133", notes);
  SetColoring ca = color_set(g, d, a, 3, kBudget11133, "construct_11133");
  auto plan = plan_for(Theorem::T5_11133, std::move(factor), std::move(a), 3);
  return finish(std::move(plan), Variant::I, ca, {}, {}, std::move(notes));
}

Construction construct_1114x5(const Graph& g) {
  require_cubic(g, "construct_1114x5");
  auto [factor, oddness] = min_odd_two_factor(g);
  const DistanceTable d(g);
  std::vector<std::string> notes;
  TypedEdgeSet a = rule_or_search(factor, d, select_type1_for_1114x5(factor), 4, 4,
                                  "construct_1114x5", notes);
  SetColoring ca = color_set(g, d, a, 4, kBudget1114, "construct_1114x5");
  auto plan = plan_for(Theorem::T7_1114x5, std::move(factor), std::move(a), 4);
  return finish(std::move(plan), Variant::I, ca, {}, {}, std::move(notes));
}

namespace {

// First candidate edge on every odd cycle: any type-I set obeys the
// degree bound a_k.
TypedEdgeSet any_type1(const TwoFactor& f) {
  TypedEdgeSet a{SetKind::TypeI, {}};
  for (const auto& cands : type1_candidates(f)) a.edges.push_back(cands.front());
  return a;
}

void check_bound(const Graph& g, const DistanceTable& d, const TypedEdgeSet& s, int k,
                 std::int64_t bound, const char* what) {
  int deg = conflict_degree(g, d, s.edges, k);
  if (deg > bound) {
    throw std::logic_error(std::string(what) + ": max degree " + std::to_string(deg) +
                           " exceeds the bound " + std::to_string(bound));
  }
}

}  // namespace

Construction construct_11k(const Graph& g, int k) {
  require_cubic(g, "construct_11k");
  if (k < 2) throw DomainError("construct_11k: k must be >= 2");
  auto [factor, oddness] = min_odd_two_factor(g);
  const DistanceTable d(g);
  TypedEdgeSet a = any_type1(factor);
  check_bound(g, d, a, k, a_of(k), "construct_11k (type I)");
  auto plan = plan_for(Theorem::T9_11k, std::move(factor), std::move(a), k);
  check_bound(g, d, plan.set_b, k, b_of(k), "construct_11k (type II)");

  // Oddness 0 is exactly 3-edge-colorability; A is then empty.
  const int budget_a = oddness == 0 ? 0 : static_cast<int>(a_of(k) + 1);
  SetColoring ca = oddness == 0 ? SetColoring{}
                                : color_set(g, d, plan.set_a, k, budget_a, "construct_11k");
  SetColoring cb = color_set(g, d, plan.set_b, k, static_cast<int>(b_of(k) + 1), "construct_11k");
  return finish(std::move(plan), Variant::II, ca, cb, {}, {});
}

Construction construct_112x5(const Graph& g) {
  require_cubic(g, "construct_112x5");
  auto [factor, oddness] = min_odd_two_factor(g);
  const DistanceTable d(g);
  auto a = find_type1_set(factor, d, 2, 0);
  if (!a) {
    throw std::logic_error("construct_112x5: no type-I set with edgeless G^2[A]");
  }
  SetColoring ca = oddness == 0 ? SetColoring{} : single_color(*a);
  auto plan = plan_for(Theorem::C_112x5, std::move(factor), std::move(*a), 2);
  for (int attempt = 0; attempt < 2; ++attempt) {
    ConflictGraph h(g, d, plan.set_b.edges, 2);
    if (auto cb = color_conflict_graph(h, kBudget112_3ec)) {
      return finish(std::move(plan), Variant::II, ca, SetColoring{std::move(*cb), kBudget112_3ec},
                    {}, {});
    }
    std::swap(plan.set_b, plan.set_c);  // the other half may avoid a K5
  }
  throw std::logic_error("construct_112x5: neither type-II half has a 4-colorable G^2");
}

Construction construct_1k(const Graph& g, int k) {
  require_cubic(g, "construct_1k");
  if (k < 2) throw DomainError("construct_1k: k must be >= 2");
  auto [factor, oddness] = min_odd_two_factor(g);
  const DistanceTable d(g);
  TypedEdgeSet a = any_type1(factor);
  check_bound(g, d, a, k, a_of(k), "construct_1k (type I)");
  auto plan = plan_for(Theorem::T15_1k, std::move(factor), std::move(a), k);
  check_bound(g, d, plan.set_b, k, b_of(k), "construct_1k (type II)");
  check_bound(g, d, plan.set_c, k, b_of(k), "construct_1k (type II)");

  const int budget_b = static_cast<int>(b_of(k) + 1);
  SetColoring ca = oddness == 0
                       ? SetColoring{}
                       : color_set(g, d, plan.set_a, k, static_cast<int>(a_of(k) + 1), "construct_1k");
  SetColoring cb = color_set(g, d, plan.set_b, k, budget_b, "construct_1k");
  SetColoring cc = color_set(g, d, plan.set_c, k, budget_b, "construct_1k");
  return finish(std::move(plan), Variant::III, ca, cb, cc, {});
}

// ---------------------------------------------------------------------------

namespace {

bool has_neighbor_on(const Graph& g, const TwoFactor& f, int v, int cycle) {
  for (int w : g.neighbors(v)) {
    if (f.cycle_of_vertex(w) == cycle) return true;
  }
  return false;
}

// Which of the three structural cases hold with `big` playing the role of C.
std::vector<std::string> oddness2_cases(const TwoFactor& f, int big, int other) {
  const Graph& g = f.graph();
  std::vector<std::string> cases;
  if (f.length(big) >= 13) cases.push_back("i");
  if (f.length(big) >= 9) {
    for (EdgeId e : f.matching()) {
      const Edge& ed = g.edge(e);
      for (auto [x, y] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
        if (f.cycle_of_vertex(x) == other && f.cycle_of_vertex(y) != big) {
          cases.push_back("ii");
          goto done_ii;
        }
      }
    }
  done_ii:;
  }
  if (f.length(big) >= 5) {
    for (EdgeId e : f.cycle_edges(other)) {
      const Edge& ed = g.edge(e);
      if (!has_neighbor_on(g, f, ed.u, big) && !has_neighbor_on(g, f, ed.v, big)) {
        cases.push_back("iii");
        break;
      }
    }
  }
  return cases;
}

}  // namespace

std::optional<Construction> construct_1113_oddness2(const Graph& g) {
  require_cubic(g, "construct_1113_oddness2");
  const DistanceTable d(g);
  std::optional<Construction> result;
  std::vector<std::string> notes;
  bool witnessed = false;
  for_each_perfect_matching(g, [&](std::span<const EdgeId> m) {
    TwoFactor f = TwoFactor::from_matching(g, m);
    auto odd = f.odd_cycles();
    if (odd.size() != 2) return true;
    witnessed = true;
    std::vector<std::string> cases;
    for (auto [big, other] : {std::pair{odd[0], odd[1]}, std::pair{odd[1], odd[0]}}) {
      for (auto& c : oddness2_cases(f, big, other)) cases.push_back(std::move(c));
    }
    if (cases.empty()) return true;

    for (EdgeId e1 : f.cycle_edges(odd[0])) {
      for (EdgeId e2 : f.cycle_edges(odd[1])) {
        if (d(e1, e2) < 4) continue;
        std::string which;
        for (const auto& c : cases) which += (which.empty() ? "" : ",") + c;
        notes.push_back("case " + which + " on cycles of length " +
                        std::to_string(f.length(odd[0])) + " and " +
                        std::to_string(f.length(odd[1])));
        TypedEdgeSet a{SetKind::TypeI, {e1, e2}};
        SetColoring ca = single_color(a);
        auto plan = plan_for(Theorem::P6_1113, std::move(f), std::move(a), 3);
        result = finish(std::move(plan), Variant::I, ca, {}, {}, notes);
        return false;
      }
    }
    notes.push_back("case applied but no edge pair at distance >= 4 was found "
                    "although the structural case guarantees one");
    return true;
  });
  if (!witnessed) {
    throw DomainError("construct_1113_oddness2: no 2-factor has exactly two odd cycles");
  }
  return result;
}

// ---------------------------------------------------------------------------

bool is_matching_partition(const Graph& g, const MatchingPartition& p) {
  std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
  for (int v : p.part_a) {
    if (v < 0 || v >= g.order() || part[v] != -1) return false;
    part[v] = 0;
  }
  for (int v : p.part_b) {
    if (v < 0 || v >= g.order() || part[v] != -1) return false;
    part[v] = 1;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (part[v] < 0) return false;
    int same = 0;
    for (int w : g.neighbors(v)) same += part[w] == part[v];
    if (same != 1) return false;
  }
  return true;
}

namespace {

struct PartitionSearch {
  const Graph& g;
  std::vector<int> part;

  bool consistent(int v) const {
    int same = 0, open = 0;
    for (int w : g.neighbors(v)) {
      if (part[w] < 0) ++open;
      else same += part[w] == part[v];
    }
    return same <= 1 && same + open >= 1;
  }

  bool run(int v) {
    if (v == g.order()) return true;
    for (int side = 0; side < 2; ++side) {
      if (v == 0 && side == 1) break;  // part_a holds vertex 0
      part[v] = side;
      bool ok = consistent(v);
      for (int w : g.neighbors(v)) {
        if (ok && part[w] >= 0) ok = consistent(w);
      }
      if (ok && run(v + 1)) return true;
    }
    part[v] = -1;
    return false;
  }
};

}  // namespace

std::optional<MatchingPartition> two_matching_color(const Graph& g) {
  require_cubic(g, "two_matching_color");
  if (g.order() == 0) return MatchingPartition{};
  PartitionSearch search{g, std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
  if (!search.run(0)) return std::nullopt;
  MatchingPartition p;
  for (int v = 0; v < g.order(); ++v) (search.part[v] == 0 ? p.part_a : p.part_b).push_back(v);
  return p;
}

PackingColoring matching_partition_to_coloring(const Graph& g, const MatchingPartition& p) {
  if (!is_matching_partition(g, p)) throw DomainError("not a valid 2-matching partition");
  std::vector<int> side(static_cast<std::size_t>(g.order()), 0);
  for (int v : p.part_b) side[v] = 1;

  std::vector<int> colors(static_cast<std::size_t>(g.size()), 0);
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(EdgeId(e));
    if (side[ed.u] == side[ed.v]) colors[e] = side[ed.u] == 0 ? 3 : 4;
  }
  // Crossing edges: two per vertex, so they form disjoint cycles.
  for (int e = 0; e < g.size(); ++e) {
    if (colors[e] != 0) continue;
    int length = 0, next_color = 1;
    EdgeId cur(e);
    int v = g.edge(cur).u;
    while (colors[cur.index] == 0) {
      colors[cur.index] = next_color;
      next_color = 3 - next_color;
      ++length;
      v = g.edge(cur).other(v);
      for (EdgeId f : g.incident(v)) {
        if (f != cur && colors[f.index] == 0) {
          const Edge& fe = g.edge(f);
          if (side[fe.u] != side[fe.v]) {
            cur = f;
            break;
          }
        }
      }
    }
    if (length % 2 == 1) {
      throw std::logic_error("crossing edges contain an odd cycle");
    }
  }
  PackingColoring out{PackingSequence({1, 1, 2, 2}), std::move(colors)};
  if (!verify(g, out)) {
    throw std::logic_error("2-matching partition produced an invalid (1,1,2,2)-coloring");
  }
  return out;
}

Necessary1122 check_1122_necessary(const Graph& g) {
  require_cubic(g, "check_1122_necessary");
  const auto outcome = solve(g, PackingSequence({1, 1, 1}));
  return {outcome.status == SolveStatus::Colorable, g.order() % 4 == 0};
}

}  // namespace packedge
