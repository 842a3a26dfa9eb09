#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "packedge/graph.hpp"

namespace packedge {

/// Non-empty, non-decreasing list of color radii. Color i (1-based) has
/// radius radius(i): its class must have pairwise edge distance > radius.
class PackingSequence {
 public:
  explicit PackingSequence(std::vector<int> radii);

  /// "1^2,2^5" -> (1,1,2,2,2,2,2). Throws DomainError on empty terms,
  /// non-positive values or a decreasing expansion.
  static PackingSequence parse(std::string_view spec);

  int size() const { return static_cast<int>(radii_.size()); }
  int radius(int color) const { return radii_.at(static_cast<std::size_t>(color - 1)); }
  std::span<const int> radii() const { return radii_; }

  /// Exponent notation, e.g. "1^2,2^5".
  std::string to_string() const;

  friend bool operator==(const PackingSequence&, const PackingSequence&) = default;

 private:
  std::vector<int> radii_;
};

/// Edge -> color assignment. colors[e] is in 1..sequence.size().
struct PackingColoring {
  PackingSequence sequence;
  std::vector<int> colors;
};

struct Violation {
  EdgeId first;
  EdgeId second;
  int color = 0;
  int distance = 0;
};

struct VerifyReport {
  bool ok = true;
  std::optional<Violation> violation;  // first offending pair in (e, f) order

  explicit operator bool() const { return ok; }
};

/// Throws DomainError if the assignment is not total or uses an unknown color.
VerifyReport verify(const Graph& g, const DistanceTable& d,
                    const PackingSequence& s, std::span<const int> colors);
VerifyReport verify(const Graph& g, const PackingColoring& c);

// ---------------------------------------------------------------------------

struct Budget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0;       // 0 = unlimited

  bool unlimited() const { return max_nodes == 0 && max_seconds <= 0; }
};

enum class SolveStatus { Colorable, NotColorable, Timeout };

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Timeout;
  std::optional<PackingColoring> coloring;  // set iff Colorable
  SolveStats stats;
};

struct SolveOptions {
  /// Subtrees handed to the OpenMP pool; 0 picks 8 * max threads.
  int target_subtrees = 0;
};

/// Complete backtracking search. Fail-first edge order (fewest feasible
/// colors, ties by index), colors in index order, forward checking through
/// the per-radius distance balls, and interchangeable equal-radius colors
/// opened in order. Colorable outcomes are re-verified before returning.
///
/// `solve` splits the tree into subtrees and searches them in parallel; the
/// lowest-order colorable subtree wins, so with an unlimited budget the
/// result equals `solve_serial` exactly.
SolveOutcome solve(const Graph& g, const PackingSequence& s, const Budget& budget = {},
                   const SolveOptions& options = {});
SolveOutcome solve_serial(const Graph& g, const PackingSequence& s,
                          const Budget& budget = {});

std::string_view to_string(SolveStatus s);

// ---------------------------------------------------------------------------

/// Proper vertex coloring of a conflict graph with colors 0..max_colors-1,
/// or nullopt when none exists. Greedy over a smallest-last order first;
/// exact search per component when greedy overshoots.
std::optional<std::vector<int>> color_conflict_graph(const ConflictGraph& h,
                                                     int max_colors);

}  // namespace packedge
