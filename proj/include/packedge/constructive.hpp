#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "packedge/factors.hpp"
#include "packedge/packing.hpp"

namespace packedge {

enum class Theorem {
  T4_1112,     // (1,1,1,2)
  T5_11133,    // (1,1,1,3,3)
  T7_1114x5,   // (1,1,1,4^5)
  T9_11k,      // (1,1,k^{a_k+b_k+2}), (1,1,k^{b_k+1}) when 3-edge-colorable
  T15_1k,      // (1,k^{a_k+2b_k+3}), (1,k^{2b_k+2}) when 3-edge-colorable
  P6_1113,     // (1,1,1,3), oddness 2
  C_112x5,     // (1,1,2^5), (1,1,2^4) when 3-edge-colorable
  MATCH_1122,  // (1,1,2,2) from a 2-matching partition
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

/// How the radius-1 colors are spent:
///   I   matching, B, C get one radius-1 color each; A gets radius-k colors.
///   II  matching and C get radius-1 colors; A and B get radius-k colors.
///   III matching gets the only radius-1 color; A, B, C get radius-k colors.
enum class Variant { I, II, III };

struct ConstructionPlan {
  Theorem theorem;
  TwoFactor factor;
  TypedEdgeSet set_a{SetKind::TypeI, {}};
  TypedEdgeSet set_b{SetKind::TypeII, {}};
  TypedEdgeSet set_c{SetKind::TypeII, {}};
  int radius_k = 1;
};

/// Proper coloring of G^k[X] for one set X: colors[i] in [0, budget) is the
/// color of the i-th member of X.
struct SetColoring {
  std::vector<int> colors;
  int budget = 0;
};

/// Builds the final packing coloring from a plan. Throws DomainError when the
/// sets do not partition E(F) or a set coloring does not fit its budget, and
/// std::logic_error if the result fails verification.
PackingColoring assemble(const ConstructionPlan& plan, Variant variant,
                         const SetColoring& a, const SetColoring& b = {},
                         const SetColoring& c = {});

struct Construction {
  ConstructionPlan plan;
  PackingColoring coloring;
  /// Proof-rule assertions that tripped and were repaired by the generic
  /// search. Non-empty notes mean the instance contradicts the proof's
  /// selection rule and deserve a close look.
  std::vector<std::string> notes;
};

/// All constructions below take a cubic graph and throw NoTwoFactor when it
/// has no perfect matching. Outputs always pass `verify`.
Construction construct_1112(const Graph& g);
Construction construct_11133(const Graph& g);
Construction construct_1114x5(const Graph& g);
Construction construct_11k(const Graph& g, int k);
Construction construct_112x5(const Graph& g);
Construction construct_1k(const Graph& g, int k);

/// (1,1,1,3) from a 2-factor with exactly two odd cycles on which one of the
/// three structural cases holds. Such a factor exists whenever the oddness is
/// 2, and sometimes otherwise (GP(13,2) has two odd 13-cycles although it is
/// 3-edge-colorable). nullopt when no case applies to any such factor.
/// Throws DomainError when no 2-factor has exactly two odd cycles.
std::optional<Construction> construct_1113_oddness2(const Graph& g);

/// The per-cycle edge choices of the (1,1,1,3,3) and (1,1,1,4^5) proofs.
std::vector<EdgeId> select_type1_for_11133(const TwoFactor& f);
std::vector<EdgeId> select_type1_for_1114x5(const TwoFactor& f);

// ---------------------------------------------------------------------------

/// Vertex bipartition in which every vertex has exactly one neighbour in its
/// own part. part_a holds vertex 0.
struct MatchingPartition {
  std::vector<int> part_a;
  std::vector<int> part_b;
};

bool is_matching_partition(const Graph& g, const MatchingPartition& p);
std::optional<MatchingPartition> two_matching_color(const Graph& g);

/// G[A1] -> color 3, G[A2] -> color 4 (radius 2), crossing edges split into
/// colors 1 and 2 along their even cycles.
PackingColoring matching_partition_to_coloring(const Graph& g, const MatchingPartition& p);

struct Necessary1122 {
  bool three_edge_colorable = false;
  bool order_divisible_by_4 = false;
};
Necessary1122 check_1122_necessary(const Graph& g);

}  // namespace packedge
