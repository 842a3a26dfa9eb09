#include <algorithm>
#include <vector>

#include "packedge/error.hpp"
#include "packedge/graph.hpp"

namespace packedge {

int edge_distance(const Graph& g, EdgeId e, EdgeId f) {
  g.edge(e);
  g.edge(f);
  if (e == f) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::vector<EdgeId> frontier{e};
  dist[e.index] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    EdgeId x = frontier[head];
    const Edge& ex = g.edge(x);
    for (int end : {ex.u, ex.v}) {
      for (EdgeId y : g.incident(end)) {
        if (dist[y.index] >= 0) continue;
        dist[y.index] = dist[x.index] + 1;
        if (y == f) return dist[y.index];
        frontier.push_back(y);
      }
    }
  }
  return kInfinity;
}

void DistanceTable::bfs_row(const Graph& g, int source,
                            std::span<std::uint16_t> row) {
  std::fill(row.begin(), row.end(), kUnreached);
  std::vector<int> queue;
  queue.reserve(row.size());
  queue.push_back(source);
  row[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    const Edge& ex = g.edges()[x];
    for (int end : {ex.u, ex.v}) {
      for (EdgeId y : g.incident(end)) {
        if (row[y.index] != kUnreached) continue;
        row[y.index] = static_cast<std::uint16_t>(row[x] + 1);
        queue.push_back(static_cast<int>(y.index));
      }
    }
  }
}

DistanceTable DistanceTable::compute_serial(const Graph& g) {
  DistanceTable t;
  t.m_ = g.size();
  t.dist_.assign(static_cast<std::size_t>(t.m_) * t.m_, kUnreached);
  for (int s = 0; s < t.m_; ++s) {
    bfs_row(g, s, std::span(t.dist_).subspan(static_cast<std::size_t>(s) * t.m_, t.m_));
  }
  return t;
}

DistanceTable::DistanceTable(const Graph& g) : m_(g.size()) {
  dist_.assign(static_cast<std::size_t>(m_) * m_, kUnreached);
  std::span<std::uint16_t> all(dist_);
  const int m = m_;
#pragma omp parallel for schedule(dynamic, 8) if (m >= 64)
  for (int s = 0; s < m; ++s) {
    bfs_row(g, s, all.subspan(static_cast<std::size_t>(s) * m, m));
  }
}

int DistanceTable::operator()(EdgeId e, EdgeId f) const {
  if (e.index >= static_cast<std::uint32_t>(m_) ||
      f.index >= static_cast<std::uint32_t>(m_)) {
    throw DomainError("edge id out of range for distance table");
  }
  std::uint16_t d = dist_[static_cast<std::size_t>(e.index) * m_ + f.index];
  return d == kUnreached ? kInfinity : d;
}

std::vector<EdgeId> DistanceTable::ball(EdgeId e, int radius) const {
  std::vector<EdgeId> out;
  for (int f = 0; f < m_; ++f) {
    if (static_cast<std::uint32_t>(f) == e.index) continue;
    if ((*this)(e, EdgeId(f)) <= radius) out.push_back(EdgeId(f));
  }
  return out;
}

int DistanceTable::max_finite() const {
  int best = 0;
  for (std::uint16_t d : dist_) {
    if (d != kUnreached) best = std::max(best, static_cast<int>(d));
  }
  return best;
}

bool DistanceTable::connected() const {
  return std::none_of(dist_.begin(), dist_.end(),
                      [](std::uint16_t d) { return d == kUnreached; });
}

}  // namespace packedge
