#include "packedge/sequences.hpp"

#include <cmath>
#include <string>

#include "packedge/error.hpp"

namespace packedge {
namespace {

constexpr int kMaxK = 60;

void require_range(int k, int lo, const char* name) {
  if (k < lo || k > kMaxK) {
    throw DomainError(std::string(name) + ": k must lie in [" +
                      std::to_string(lo) + ", " + std::to_string(kMaxK) +
                      "], got " + std::to_string(k));
  }
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }
std::int64_t sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::int64_t a_of(int k) {
  require_range(k, 2, "a_of");
  std::int64_t prev = 2, cur = 4;  // a_2, a_3
  if (k == 2) return prev;
  for (int i = 4; i <= k; ++i) {
    std::int64_t next = cur + 2 * prev + 2;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t c_of(int k) {
  require_range(k, 1, "c_of");
  std::int64_t c = 0;
  for (int i = 2; i <= k; ++i) c = pow2(i) - c;
  return c;
}

std::int64_t b_of(int k) {
  require_range(k, 2, "b_of");
  std::int64_t c = 0, sum = 0;  // c_1 = 0
  for (int i = 2; i <= k; ++i) {
    c = pow2(i) - c;
    sum += c;
  }
  return sum;
}

std::int64_t a_closed_form(int k) {
  require_range(k, 2, "a_closed_form");
  return (pow2(k + 1) - sign(k + 1) - 3) / 3;
}

std::int64_t b_closed_form(int k) {
  require_range(k, 2, "b_closed_form");
  return (pow2(k + 2) + 2 * sign(k + 2) - 6) / 3;
}

std::int64_t b_closed_form_variant(int k) {
  require_range(k, 2, "b_closed_form_variant");
  return (pow2(k + 3) + 2 * sign(k + 1) - 6) / 3;
}

int base_index(SequenceKind kind) { return kind == SequenceKind::C ? 1 : 2; }

std::vector<SequenceRow> sequence_table(SequenceKind kind, int max_k) {
  std::vector<SequenceRow> rows;
  for (int k = base_index(kind); k <= max_k; ++k) {
    switch (kind) {
      case SequenceKind::A: rows.push_back({k, a_of(k)}); break;
      case SequenceKind::B: rows.push_back({k, b_of(k)}); break;
      case SequenceKind::C: rows.push_back({k, c_of(k)}); break;
    }
  }
  return rows;
}

std::int64_t budget_11k(int k) { return a_of(k) + b_of(k) + 2; }
std::int64_t budget_11k_3ec(int k) { return b_of(k) + 1; }
std::int64_t budget_1k(int k) { return a_of(k) + 2 * b_of(k) + 3; }
std::int64_t budget_1k_3ec(int k) { return 2 * b_of(k) + 2; }

std::int64_t tree_edge_count(int i, bool primed) {
  if (i < 1 || i > kMaxK) {
    throw DomainError("tree_edge_count: i must lie in [1, 60], got " +
                      std::to_string(i));
  }
  return primed ? pow2(i + 2) - 3 : 3 * (pow2(i) - 1);
}

double counting_bound(int max_terms) {
  if (max_terms < 1) throw DomainError("counting_bound: max_terms must be >= 1");
  long double sum = 0;
  for (int i = 1; i <= max_terms; ++i) {
    long double p = std::ldexp(1.0L, i);
    sum += 1.0L / (3.0L * (p - 1.0L)) + 1.0L / (4.0L * p - 3.0L);
  }
  return static_cast<double>(sum);
}

}  // namespace packedge
