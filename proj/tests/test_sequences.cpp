#include <cmath>

#include "doctest.h"
#include "packedge/error.hpp"
#include "packedge/sequences.hpp"

using namespace packedge;

TEST_CASE("a_k starts 2, 4, 10") {
  CHECK(a_of(2) == 2);
  CHECK(a_of(3) == 4);
  CHECK(a_of(4) == 10);
  CHECK(a_of(5) == 20);
}

TEST_CASE("c_k and b_k first values") {
  CHECK(c_of(1) == 0);
  CHECK(c_of(2) == 4);
  CHECK(c_of(3) == 4);
  CHECK(c_of(4) == 12);
  CHECK(b_of(2) == 4);
  CHECK(b_of(3) == 8);
  CHECK(b_of(4) == 20);
}

TEST_CASE("closed forms agree with an independent recurrence up to k = 60") {
  std::int64_t a_prev = 2, a_cur = 4, c = 0, b = 0;
  for (int k = 2; k <= 60; ++k) {
    c = (std::int64_t{1} << k) - c;
    b += c;
    std::int64_t a = k == 2 ? 2 : k == 3 ? 4 : a_cur + 2 * a_prev + 2;
    if (k >= 4) {
      a_prev = a_cur;
      a_cur = a;
    }
    CAPTURE(k);
    CHECK(a_of(k) == a);
    CHECK(a_closed_form(k) == a);
    CHECK(b_of(k) == b);
    CHECK(b_closed_form(k) == b);
    CHECK(c_of(k) == c);
  }
}

TEST_CASE("the (1,k^n) variant of the b_k closed form disagrees at k = 2") {
  CHECK(b_closed_form_variant(2) == 8);
  CHECK(b_of(2) == 4);
  CHECK(b_closed_form_variant(2) != b_of(2));
}

TEST_CASE("budgets") {
  CHECK(budget_11k(2) == 8);
  CHECK(budget_11k_3ec(2) == 5);
  CHECK(budget_1k(2) == 13);
  CHECK(budget_1k_3ec(2) == 10);
}

TEST_CASE("tables start at their base index") {
  auto a = sequence_table(SequenceKind::A, 4);
  REQUIRE(a.size() == 3);
  CHECK(a[0].k == 2);
  CHECK(a[2].value == 10);
  auto c = sequence_table(SequenceKind::C, 3);
  REQUIRE(c.size() == 3);
  CHECK(c[0].k == 1);
  CHECK(c[0].value == 0);
}

TEST_CASE("out-of-range k") {
  CHECK_THROWS_AS(a_of(1), DomainError);
  CHECK_THROWS_AS(b_of(61), DomainError);
  CHECK_THROWS_AS(c_of(0), DomainError);
}

TEST_CASE("tree edge counts and the counting bound") {
  for (int i = 1; i <= 10; ++i) {
    CHECK(tree_edge_count(i, false) == 3 * ((std::int64_t{1} << i) - 1));
    CHECK(tree_edge_count(i, true) == (std::int64_t{1} << (i + 2)) - 3);
  }
  double sum = 0;
  for (int i = 1; i <= 30; ++i) sum += 1.0 / (3 * (std::pow(2.0, i) - 1)) + 1.0 / (std::pow(2.0, i + 2) - 3);
  CHECK(counting_bound(30) == doctest::Approx(sum).epsilon(1e-12));
  CHECK(counting_bound(30) < 0.8793);
  CHECK(counting_bound(30) > 0.879);
}
