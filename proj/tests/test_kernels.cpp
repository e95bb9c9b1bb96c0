#include <doctest.h>

#include "ecodim/corpus.hpp"
#include "ecodim/kernels.hpp"

using namespace ecodim;
using namespace ecodim::kernels;

// The OpenMP kernels must agree bit-for-bit with the serial references,
// including the witness chosen on failure (both report the smallest).

TEST_CASE("axiom scan: serial == parallel") {
  for (int t = 0; t < 12; ++t) {
    Matroid m = random_gf2_matroid(6 + t % 3, 60000 + t);
    auto a = check_rank_axioms_serial(m.rank_table(), m.n());
    auto b = check_rank_axioms_parallel(m.rank_table(), m.n());
    CHECK(!a.has_value());
    CHECK(!b.has_value());
  }
  // A corrupted table yields the same first witness from both paths.
  Matroid m = uniform(3, 7);
  std::vector<std::uint8_t> bad = m.rank_table();
  bad[0b0001011] = 0;  // punch a hole
  auto a = check_rank_axioms_serial(bad, 7);
  auto b = check_rank_axioms_parallel(bad, 7);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->axiom == b->axiom);
  CHECK(a->f == b->f);
  CHECK(a->x == b->x);
  CHECK(a->y == b->y);
}

TEST_CASE("bases fold: serial == parallel") {
  for (int t = 0; t < 8; ++t) {
    Matroid m = random_gf2_matroid(7, 61000 + t);
    auto bases = m.bases();
    CHECK(rank_from_bases_serial(7, bases) == rank_from_bases_parallel(7, bases));
    CHECK(rank_from_bases_serial(7, bases) == m.rank_table());
  }
}

TEST_CASE("component meet: serial == parallel") {
  for (int t = 0; t < 10; ++t) {
    Matroid a = random_gf2_matroid(4, 62000 + t);
    Matroid b = random_gf2_matroid(4, 63000 + t);
    Matroid m = direct_sum(a, b);
    CHECK(component_meet_serial(m.rank_table(), m.n()) ==
          component_meet_parallel(m.rank_table(), m.n()));
  }
}

TEST_CASE("nested-pair counts: serial == parallel") {
  for (int t = 0; t < 6; ++t) {
    Matroid m = random_gf2_matroid(8, 64000 + t);
    CHECK(nested_pair_counts_serial(m.rank_table(), 8) ==
          nested_pair_counts_parallel(m.rank_table(), 8));
  }
  Matroid big = uniform(5, 13);
  CHECK(nested_pair_counts_serial(big.rank_table(), 13) ==
        nested_pair_counts_parallel(big.rank_table(), 13));
}
