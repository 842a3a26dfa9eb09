#include "packedge/factors.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "packedge/error.hpp"

namespace packedge {
namespace {

void require_cubic(const Graph& g, const char* what) {
  if (!g.is_cubic()) throw DomainError(std::string(what) + ": graph is not cubic");
}

bool match_rec(const Graph& g, std::vector<char>& matched, std::vector<EdgeId>& chosen,
               int from, const std::function<bool(std::span<const EdgeId>)>& visit) {
  int v = from;
  while (v < g.order() && matched[v]) ++v;
  if (v == g.order()) return visit(chosen);
  for (EdgeId e : g.incident(v)) {
    int w = g.edge(e).other(v);
    if (matched[w]) continue;
    matched[v] = matched[w] = 1;
    chosen.push_back(e);
    bool keep_going = match_rec(g, matched, chosen, v + 1, visit);
    chosen.pop_back();
    matched[v] = matched[w] = 0;
    if (!keep_going) return false;
  }
  return true;
}

// Six vertices, adjacency as bitmasks: does a Hamiltonian path exist?
bool has_path_through_all(const std::array<unsigned, 6>& adj) {
  // dp[mask][v]: a path visiting exactly `mask` and ending at v exists.
  std::array<unsigned, 64> ends{};
  for (int v = 0; v < 6; ++v) ends[1u << v] |= 1u << v;
  for (unsigned mask = 1; mask < 64; ++mask) {
    for (int v = 0; v < 6; ++v) {
      if (!(ends[mask] & (1u << v))) continue;
      unsigned next = adj[v] & ~mask;
      for (int w = 0; w < 6; ++w) {
        if (next & (1u << w)) ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return ends[63] != 0;
}

}  // namespace

void for_each_perfect_matching(
    const Graph& g, const std::function<bool(std::span<const EdgeId>)>& visit) {
  require_cubic(g, "enumerate_perfect_matchings");
  if (g.order() % 2 == 1) return;
  std::vector<char> matched(static_cast<std::size_t>(g.order()), 0);
  std::vector<EdgeId> chosen;
  match_rec(g, matched, chosen, 0, visit);
}

std::vector<std::vector<EdgeId>> enumerate_perfect_matchings(const Graph& g) {
  std::vector<std::vector<EdgeId>> all;
  for_each_perfect_matching(g, [&](std::span<const EdgeId> m) {
    all.emplace_back(m.begin(), m.end());
    return true;
  });
  return all;
}

// ---------------------------------------------------------------------------

TwoFactor TwoFactor::from_matching(const Graph& g, std::span<const EdgeId> matching) {
  TwoFactor f;
  f.graph_ = &g;
  f.matching_.assign(matching.begin(), matching.end());
  f.vertex_cycle_.assign(static_cast<std::size_t>(g.order()), -1);
  f.edge_cycle_.assign(static_cast<std::size_t>(g.size()), -1);
  f.edge_position_.assign(static_cast<std::size_t>(g.size()), -1);

  std::vector<char> in_matching(static_cast<std::size_t>(g.size()), 0);
  std::vector<int> cover(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : matching) {
    const Edge& ed = g.edge(e);
    if (in_matching[e.index]) throw DomainError("matching repeats an edge");
    in_matching[e.index] = 1;
    ++cover[ed.u];
    ++cover[ed.v];
  }
  for (int v = 0; v < g.order(); ++v) {
    if (cover[v] != 1) {
      throw DomainError("not a perfect matching: vertex " + std::to_string(v) +
                        " covered " + std::to_string(cover[v]) + " times");
    }
    int rest = g.degree(v) - 1;
    if (rest != 0 && rest != 2) {
      throw DomainError("complement of matching is not 2-regular at vertex " +
                        std::to_string(v));
    }
  }

  for (int s = 0; s < g.order(); ++s) {
    if (f.vertex_cycle_[s] >= 0 || g.degree(s) == 1) continue;
    const int c = static_cast<int>(f.cycles_.size());
    std::vector<int> verts;
    std::vector<EdgeId> edges;
    int prev_edge = -1;
    int cur = s;
    do {
      verts.push_back(cur);
      f.vertex_cycle_[cur] = c;
      EdgeId step{};
      for (EdgeId e : g.incident(cur)) {
        if (!in_matching[e.index] && static_cast<int>(e.index) != prev_edge) {
          step = e;
          break;
        }
      }
      f.edge_cycle_[step.index] = c;
      f.edge_position_[step.index] = static_cast<int>(edges.size());
      edges.push_back(step);
      prev_edge = static_cast<int>(step.index);
      cur = g.edge(step).other(cur);
    } while (cur != s);
    f.cycles_.push_back(std::move(verts));
    f.cycle_edges_.push_back(std::move(edges));
  }
  return f;
}

std::vector<int> TwoFactor::odd_cycles() const {
  std::vector<int> out;
  for (int c = 0; c < cycle_count(); ++c) {
    if (is_odd(c)) out.push_back(c);
  }
  return out;
}

int TwoFactor::odd_count() const { return static_cast<int>(odd_cycles().size()); }

std::vector<EdgeId> TwoFactor::factor_edges() const {
  std::vector<EdgeId> out;
  for (const auto& c : cycle_edges_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

MinOddFactor min_odd_two_factor(const Graph& g) {
  require_cubic(g, "min_odd_two_factor");
  std::optional<std::vector<EdgeId>> best;
  int best_odd = 0;
  for_each_perfect_matching(g, [&](std::span<const EdgeId> m) {
    int odd = TwoFactor::from_matching(g, m).odd_count();
    if (!best || odd < best_odd) {
      best.emplace(m.begin(), m.end());
      best_odd = odd;
    }
    return best_odd > 0;
  });
  if (!best) throw NoTwoFactor();
  return {TwoFactor::from_matching(g, *best), best_odd};
}

// ---------------------------------------------------------------------------

VertexLabeling::VertexLabeling(const TwoFactor& f)
    : labels_(static_cast<std::size_t>(f.graph().order())) {
  const Graph& g = f.graph();
  for (int v = 0; v < g.order(); ++v) {
    int c = f.cycle_of_vertex(v);
    if (c < 0 || !f.is_odd(c)) continue;
    bool plus = false;
    for (int w : g.neighbors(v)) {
      int cw = f.cycle_of_vertex(w);
      if (cw >= 0 && cw != c && f.is_odd(cw)) plus = true;
    }
    labels_[v] = plus ? Label::Plus : Label::Minus;
  }
}

std::size_t VertexLabeling::labeled_count() const {
  return static_cast<std::size_t>(std::count_if(
      labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); }));
}

bool check_p5_property(const TwoFactor& f) {
  const Graph& g = f.graph();
  const auto odd = f.odd_cycles();
  const int q = static_cast<int>(odd.size());
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      for (int c = b + 1; c < q; ++c) {
        for (EdgeId e1 : f.cycle_edges(odd[a])) {
          for (EdgeId e2 : f.cycle_edges(odd[b])) {
            for (EdgeId e3 : f.cycle_edges(odd[c])) {
              const Edge& x = g.edge(e1);
              const Edge& y = g.edge(e2);
              const Edge& z = g.edge(e3);
              const std::array<int, 6> vs{x.u, x.v, y.u, y.v, z.u, z.v};
              std::array<unsigned, 6> adj{};
              for (int i = 0; i < 6; ++i) {
                for (int j = i + 1; j < 6; ++j) {
                  if (g.adjacent(vs[i], vs[j])) {
                    adj[i] |= 1u << j;
                    adj[j] |= 1u << i;
                  }
                }
              }
              if (has_path_through_all(adj)) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

bool is_type1(const TwoFactor& f, std::span<const EdgeId> edges) {
  std::vector<int> per_cycle(static_cast<std::size_t>(f.cycle_count()), 0);
  for (EdgeId e : edges) {
    if (!f.graph().valid(e)) return false;
    int c = f.cycle_of_edge(e);
    if (c < 0) return false;
    ++per_cycle[c];
  }
  for (int c = 0; c < f.cycle_count(); ++c) {
    if (per_cycle[c] != (f.is_odd(c) ? 1 : 0)) return false;
  }
  return true;
}

bool is_type2(const TwoFactor& f, std::span<const EdgeId> edges) {
  const Graph& g = f.graph();
  std::vector<int> per_cycle(static_cast<std::size_t>(f.cycle_count()), 0);
  std::vector<char> touched(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    if (!g.valid(e)) return false;
    int c = f.cycle_of_edge(e);
    if (c < 0) return false;
    const Edge& ed = g.edge(e);
    if (touched[ed.u] || touched[ed.v]) return false;  // adjacent or repeated
    touched[ed.u] = touched[ed.v] = 1;
    ++per_cycle[c];
  }
  for (int c = 0; c < f.cycle_count(); ++c) {
    if (per_cycle[c] != f.length(c) / 2) return false;
  }
  return true;
}

std::vector<std::vector<EdgeId>> type1_candidates(const TwoFactor& f) {
  const VertexLabeling labels(f);
  const Graph& g = f.graph();
  std::vector<std::vector<EdgeId>> out;
  for (int c : f.odd_cycles()) {
    std::array<std::vector<EdgeId>, 3> groups;
    for (EdgeId e : f.cycle_edges(c)) {
      const Edge& ed = g.edge(e);
      bool pu = labels.plus(ed.u), pv = labels.plus(ed.v);
      groups[pu && pv ? 0 : (!pu && !pv ? 1 : 2)].push_back(e);
    }
    std::vector<EdgeId> order;
    for (auto& grp : groups) order.insert(order.end(), grp.begin(), grp.end());
    out.push_back(std::move(order));
  }
  return out;
}

namespace {

struct Type1Search {
  const DistanceTable& d;
  int k;
  int max_degree;
  const std::vector<std::vector<EdgeId>>& candidates;
  std::vector<EdgeId> chosen;
  std::vector<int> degree;

  bool run(std::size_t cycle) {
    if (cycle == candidates.size()) return true;
    for (EdgeId e : candidates[cycle]) {
      std::vector<std::size_t> hits;
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
        if (d(e, chosen[i]) <= k) {
          hits.push_back(i);
          ok = degree[i] + 1 <= max_degree;
        }
      }
      if (!ok || static_cast<int>(hits.size()) > max_degree) continue;
      for (std::size_t i : hits) ++degree[i];
      chosen.push_back(e);
      degree.push_back(static_cast<int>(hits.size()));
      if (run(cycle + 1)) return true;
      chosen.pop_back();
      degree.pop_back();
      for (std::size_t i : hits) --degree[i];
    }
    return false;
  }
};

}  // namespace

std::optional<TypedEdgeSet> find_type1_set(const TwoFactor& f, const DistanceTable& d,
                                           int k, int max_degree) {
  if (k < 1) throw DomainError("find_type1_set: k must be >= 1");
  if (max_degree < 0) throw DomainError("find_type1_set: max_degree must be >= 0");
  const auto candidates = type1_candidates(f);
  Type1Search search{d, k, max_degree, candidates, {}, {}};
  if (!search.run(0)) return std::nullopt;
  return TypedEdgeSet{SetKind::TypeI, std::move(search.chosen)};
}

std::pair<TypedEdgeSet, TypedEdgeSet> partition_type2(const TwoFactor& f,
                                                      const TypedEdgeSet& exclude) {
  for (EdgeId e : exclude.edges) {
    if (!f.graph().valid(e) || f.cycle_of_edge(e) < 0) {
      throw DomainError("partition_type2: excluded edge is not a factor edge");
    }
  }
  std::vector<int> anchor(static_cast<std::size_t>(f.cycle_count()), -1);
  for (EdgeId e : exclude.edges) {
    int c = f.cycle_of_edge(e);
    if (!f.is_odd(c)) {
      throw DomainError("partition_type2: excluded edge lies on an even cycle");
    }
    if (anchor[c] >= 0) {
      throw DomainError("partition_type2: two excluded edges on one odd cycle");
    }
    anchor[c] = f.position_of_edge(e);
  }

  TypedEdgeSet b{SetKind::TypeII, {}}, c{SetKind::TypeII, {}};
  for (int cy = 0; cy < f.cycle_count(); ++cy) {
    auto edges = f.cycle_edges(cy);
    const int len = f.length(cy);
    if (!f.is_odd(cy)) {
      for (int j = 0; j < len; ++j) (j % 2 == 0 ? b : c).edges.push_back(edges[j]);
      continue;
    }
    if (anchor[cy] < 0) {
      throw DomainError("partition_type2: odd cycle " + std::to_string(cy) +
                        " has no excluded edge");
    }
    for (int t = 1; t < len; ++t) {
      (t % 2 == 1 ? b : c).edges.push_back(edges[(anchor[cy] + t) % len]);
    }
  }
  return {std::move(b), std::move(c)};
}

}  // namespace packedge
