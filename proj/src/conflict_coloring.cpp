#include <algorithm>

#include "packedge/error.hpp"
#include "packedge/packing.hpp"

namespace packedge {
namespace {

// Smallest-last (degeneracy) order, returned first-to-color first.
std::vector<int> smallest_last_order(const ConflictGraph& h) {
  const int n = h.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) degree[v] = h.degree(v);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = 1;
    order.push_back(pick);
    for (int w : h.neighbors(pick)) {
      if (!removed[w]) --degree[w];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

struct ExactColoring {
  const ConflictGraph& h;
  int max_colors;
  const std::vector<int>& order;
  std::vector<int>& color;

  bool run(std::size_t i, int used) {
    if (i == order.size()) return true;
    const int v = order[i];
    const int limit = std::min(max_colors, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int w : h.neighbors(v)) {
        if (color[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      if (run(i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> color_conflict_graph(const ConflictGraph& h,
                                                     int max_colors) {
  if (max_colors < 1) throw DomainError("color_conflict_graph: max_colors must be >= 1");
  const int n = h.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  const auto order = smallest_last_order(h);

  int highest = -1;
  for (int v : order) {
    std::vector<char> taken(static_cast<std::size_t>(h.degree(v)) + 1, 0);
    for (int w : h.neighbors(v)) {
      if (color[w] >= 0 && color[w] < static_cast<int>(taken.size())) taken[color[w]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    highest = std::max(highest, c);
  }
  if (highest < max_colors) return color;

  // Greedy overshot: exact search, one component at a time.
  std::fill(color.begin(), color.end(), -1);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (auto comp : h.components()) {
    std::sort(comp.begin(), comp.end(),
              [&](int a, int b) { return position[a] < position[b]; });
    ExactColoring search{h, max_colors, comp, color};
    if (!search.run(0, 0)) return std::nullopt;
  }
  return color;
}

}  // namespace packedge
