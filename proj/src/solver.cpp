#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "packedge/error.hpp"
#include "packedge/packing.hpp"

namespace packedge {
namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;
constexpr int kMaxColors = 64;

// Static data shared by every search over one (graph, sequence) pair.
struct Problem {
  int m = 0;
  int k = 0;
  Mask all_colors = 0;
  std::vector<int> radius;          // per 0-based color
  std::vector<char> follows_equal;  // color c-1 has the same radius
  std::vector<int> ball_of_color;   // index into balls
  std::vector<std::vector<std::vector<int>>> balls;  // [radius slot][edge]

  Problem(const Graph& g, const DistanceTable& d, const PackingSequence& s)
      : m(g.size()), k(s.size()) {
    if (k > kMaxColors) {
      throw DomainError("solver supports at most 64 colors, sequence has " +
                        std::to_string(k));
    }
    all_colors = (k == 64) ? ~Mask{0} : ((Mask{1} << k) - 1);
    std::vector<int> distinct;
    for (int c = 0; c < k; ++c) {
      int r = s.radii()[c];
      radius.push_back(r);
      follows_equal.push_back(c > 0 && s.radii()[c - 1] == r);
      if (distinct.empty() || distinct.back() != r) distinct.push_back(r);
      ball_of_color.push_back(static_cast<int>(distinct.size()) - 1);
    }
    balls.resize(distinct.size());
    for (std::size_t slot = 0; slot < distinct.size(); ++slot) {
      balls[slot].resize(static_cast<std::size_t>(m));
      for (int e = 0; e < m; ++e) {
        for (int f = 0; f < m; ++f) {
          if (f != e && d(EdgeId(e), EdgeId(f)) <= distinct[slot]) {
            balls[slot][e].push_back(f);
          }
        }
      }
    }
  }
};

struct State {
  std::vector<Mask> domain;  // feasible colors of unassigned edges
  std::vector<int> color;    // 0-based, -1 when unassigned
  Mask used = 0;
  int assigned = 0;

  explicit State(const Problem& p)
      : domain(static_cast<std::size_t>(p.m), p.all_colors),
        color(static_cast<std::size_t>(p.m), -1) {}

  bool complete(const Problem& p) const { return assigned == p.m; }
};

// Fail-first: fewest feasible colors, ties by lowest index.
int select_edge(const Problem& p, const State& s) {
  int best = -1, best_count = std::numeric_limits<int>::max();
  for (int e = 0; e < p.m; ++e) {
    if (s.color[e] >= 0) continue;
    int count = std::popcount(s.domain[e]);
    if (count < best_count) {
      best = e;
      best_count = count;
    }
  }
  return best;
}

// Colors worth trying for `e`: its domain minus unopened equal-radius colors
// beyond the first unused one of each radius.
Mask candidate_colors(const Problem& p, const State& s, int e) {
  Mask out = 0;
  for (Mask rest = s.domain[e]; rest; rest &= rest - 1) {
    int c = std::countr_zero(rest);
    bool unused = !(s.used >> c & 1);
    if (unused && p.follows_equal[c] && !(s.used >> (c - 1) & 1)) continue;
    out |= Mask{1} << c;
  }
  return out;
}

// Writes `e := c` into `child` (a copy of the parent). False on a wipe-out.
bool apply(const Problem& p, State& child, int e, int c) {
  child.color[e] = c;
  child.domain[e] = 0;
  child.used |= Mask{1} << c;
  ++child.assigned;
  const Mask bit = Mask{1} << c;
  for (int f : p.balls[p.ball_of_color[c]][e]) {
    if (child.color[f] >= 0) continue;
    child.domain[f] &= ~bit;
    if (child.domain[f] == 0) return false;
  }
  return true;
}

enum class Result { Found, Exhausted, Aborted };

class Limits {
 public:
  Limits(const Budget& b, Clock::time_point start)
      : max_nodes_(b.max_nodes),
        has_deadline_(b.max_seconds > 0),
        deadline_(start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(std::max(b.max_seconds, 0.0)))) {}

  // Charge `n` nodes; false once the budget is spent.
  bool charge(std::uint64_t n) {
    std::uint64_t total = nodes_.fetch_add(n, std::memory_order_relaxed) + n;
    if (max_nodes_ != 0 && total > max_nodes_) stop_.store(true, std::memory_order_relaxed);
    if (has_deadline_ && Clock::now() > deadline_) stop_.store(true, std::memory_order_relaxed);
    return !stopped();
  }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::uint64_t max_nodes_;
  bool has_deadline_;
  Clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

// Depth-first search below one state. One instance per thread.
class Dfs {
 public:
  static constexpr std::uint64_t kChargeEvery = 256;

  Dfs(const Problem& p, Limits& limits, const std::atomic<long>* best = nullptr,
      long my_index = 0)
      : p_(p), limits_(limits), best_(best), my_index_(my_index) {}

  Result run(const State& root) {
    stack_.clear();
    stack_.reserve(static_cast<std::size_t>(p_.m) + 1);  // no reallocation below
    stack_.push_back(root);
    Result r = descend(0);
    limits_.charge(pending_);
    pending_ = 0;
    return r;
  }

  const std::vector<int>& solution() const { return solution_; }

 private:
  Result descend(std::size_t depth) {
    const State& here = stack_[depth];
    if (here.complete(p_)) {
      solution_ = here.color;
      return Result::Found;
    }
    const int e = select_edge(p_, here);
    for (Mask rest = candidate_colors(p_, here, e); rest; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      if (++pending_ >= kChargeEvery) {
        bool ok = limits_.charge(pending_);
        pending_ = 0;
        if (!ok) return Result::Aborted;
        if (best_ && best_->load(std::memory_order_relaxed) < my_index_) {
          return Result::Aborted;  // an earlier subtree already won
        }
      }
      if (stack_.size() <= depth + 1) stack_.push_back(stack_[depth]);
      else stack_[depth + 1] = stack_[depth];
      if (!apply(p_, stack_[depth + 1], e, c)) continue;
      Result r = descend(depth + 1);
      if (r != Result::Exhausted) return r;
    }
    return Result::Exhausted;
  }

  const Problem& p_;
  Limits& limits_;
  const std::atomic<long>* best_;
  long my_index_;
  std::vector<State> stack_;
  std::vector<int> solution_;
  std::uint64_t pending_ = 0;
};

PackingColoring to_coloring(const PackingSequence& s, const std::vector<int>& zero_based) {
  PackingColoring out{s, {}};
  out.colors.reserve(zero_based.size());
  for (int c : zero_based) out.colors.push_back(c + 1);
  return out;
}

void finish(SolveOutcome& out, const Graph& g, const DistanceTable& d,
            const PackingSequence& s, const Limits& limits, Clock::time_point start) {
  out.stats.nodes = limits.nodes();
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (out.status == SolveStatus::Colorable) {
    auto report = verify(g, d, s, out.coloring->colors);
    if (!report.ok) throw std::logic_error("solver produced an invalid coloring");
  }
}

}  // namespace

SolveOutcome solve_serial(const Graph& g, const PackingSequence& s, const Budget& budget) {
  const auto start = Clock::now();
  const DistanceTable d = DistanceTable::compute_serial(g);
  const Problem p(g, d, s);
  Limits limits(budget, start);
  SolveOutcome out;
  Dfs dfs(p, limits);
  switch (dfs.run(State(p))) {
    case Result::Found:
      out.status = SolveStatus::Colorable;
      out.coloring = to_coloring(s, dfs.solution());
      break;
    case Result::Exhausted: out.status = SolveStatus::NotColorable; break;
    case Result::Aborted: out.status = SolveStatus::Timeout; break;
  }
  finish(out, g, d, s, limits, start);
  return out;
}

SolveOutcome solve(const Graph& g, const PackingSequence& s, const Budget& budget,
                   const SolveOptions& options) {
  const auto start = Clock::now();
  const DistanceTable d(g);
  const Problem p(g, d, s);
  Limits limits(budget, start);
  SolveOutcome out;

  const std::size_t target = options.target_subtrees > 0
                                 ? static_cast<std::size_t>(options.target_subtrees)
                                 : static_cast<std::size_t>(8 * omp_get_max_threads());

  // Breadth-wise expansion keeps the frontier in depth-first order.
  std::vector<State> frontier{State(p)};
  bool aborted = false;
  while (frontier.size() < target && !aborted) {
    std::vector<State> next;
    bool grew = false;
    for (State& node : frontier) {
      if (node.complete(p)) {
        next.push_back(std::move(node));
        continue;
      }
      grew = true;
      const int e = select_edge(p, node);
      Mask cands = candidate_colors(p, node, e);
      if (!limits.charge(static_cast<std::uint64_t>(std::popcount(cands)))) aborted = true;
      for (; cands; cands &= cands - 1) {
        State child = node;
        if (apply(p, child, e, std::countr_zero(cands))) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    if (!grew) break;
  }

  const long n = static_cast<long>(frontier.size());
  std::atomic<long> best{std::numeric_limits<long>::max()};
  std::vector<Result> results(static_cast<std::size_t>(n), Result::Aborted);
  std::vector<std::vector<int>> solutions(static_cast<std::size_t>(n));

  if (!aborted) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      if (best.load() < i || limits.stopped()) continue;
      Dfs dfs(p, limits, &best, i);
      results[i] = dfs.run(frontier[i]);
      if (results[i] == Result::Found) {
        solutions[i] = dfs.solution();
        long seen = best.load();
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
      }
    }
  }

  out.status = SolveStatus::NotColorable;
  if (aborted) out.status = SolveStatus::Timeout;
  for (long i = 0; i < n && !aborted; ++i) {
    if (results[i] == Result::Found) {
      out.status = SolveStatus::Colorable;
      out.coloring = to_coloring(s, solutions[i]);
      break;
    }
    if (results[i] == Result::Aborted) {
      out.status = SolveStatus::Timeout;
      break;
    }
  }
  finish(out, g, d, s, limits, start);
  return out;
}

}  // namespace packedge
