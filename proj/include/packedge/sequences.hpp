#pragma once

#include <cstdint>
#include <vector>

namespace packedge {

// Degree bounds for conflict graphs of typed edge sets, plus the tree
// counting quantities used by the (1,2,...,k) non-colorability argument.
//
// a_k: type-I bound, a_2 = 2, a_3 = 4, a_k = a_{k-1} + 2 a_{k-2} + 2.
// c_k: c_1 = 0, c_k = 2^k - c_{k-1}.
// b_k: type-II bound, b_k = c_1 + ... + c_k.
//
// The recurrences are authoritative. Closed forms are checked against them.

std::int64_t a_of(int k);
std::int64_t b_of(int k);
std::int64_t c_of(int k);

// (2^{k+1} - (-1)^{k+1} - 3) / 3
std::int64_t a_closed_form(int k);
// (2^{k+2} + 2(-1)^{k+2} - 6) / 3; agrees with b_of.
std::int64_t b_closed_form(int k);
// (2^{k+3} + 2(-1)^{k+1} - 6) / 3, the form quoted alongside the (1,k^n)
// theorem. Does NOT agree with b_of (8 vs 4 at k = 2); exposed only so the
// disagreement can be tested.
std::int64_t b_closed_form_variant(int k);

enum class SequenceKind { A, B, C };

// Rows (k, value) for base_index(kind) <= k <= max_k.
struct SequenceRow {
  int k;
  std::int64_t value;
};
int base_index(SequenceKind kind);
std::vector<SequenceRow> sequence_table(SequenceKind kind, int max_k);

// Radius-k color budgets of the constructive theorems.
std::int64_t budget_11k(int k);              // a_k + b_k + 2
std::int64_t budget_11k_3ec(int k);          // b_k + 1
std::int64_t budget_1k(int k);               // a_k + 2 b_k + 3
std::int64_t budget_1k_3ec(int k);           // 2 b_k + 2
inline constexpr int kBudget11133 = 2;       // (1,1,1,3,3)
inline constexpr int kBudget1114 = 5;        // (1,1,1,4^5)
inline constexpr int kBudget112 = 5;         // (1,1,2^5), order >= 12 path
inline constexpr int kBudget112_3ec = 4;     // (1,1,2^4)

// |E(T_i)| = 3(2^i - 1) and |E(T'_i)| = 2^{i+2} - 3.
std::int64_t tree_edge_count(int i, bool primed);

// sum_{i=1}^{max_terms} [ 1/(3(2^i - 1)) + 1/(2^{i+2} - 3) ]
double counting_bound(int max_terms);

}  // namespace packedge
