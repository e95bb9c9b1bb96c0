#include <doctest.h>

#include <algorithm>

#include "ecodim/corpus.hpp"
#include "ecodim/ecodim.hpp"
#include "ecodim/positroid.hpp"
#include "ecodim/verify.hpp"

using namespace ecodim;

namespace {

Mask ms(std::initializer_list<int> elems) {
  Mask m = 0;
  for (int e : elems) m |= element_bit(e);
  return m;
}

// The worked 6-element example: window 3,6,5,8,7,10 and its printed matrix.
const int kDemoRows[6][7] = {
    {1, 2, 2, 3, 3, 3, 3}, {1, 2, 3, 3, 3, 3, 3}, {1, 2, 2, 3, 3, 3, 3},
    {1, 2, 3, 3, 3, 3, 3}, {1, 2, 2, 3, 3, 3, 3}, {1, 2, 3, 3, 3, 3, 3}};

CyclicRankMatrix demo_matrix() {
  CyclicRankMatrix r(6);
  for (int i = 1; i <= 6; ++i)
    for (int d = 0; d <= 6; ++d) r.set(i, i + d, kDemoRows[i - 1][d]);
  return r;
}

}  // namespace

TEST_CASE("cyclic interval masks") {
  CHECK(CyclicInterval{5, 8}.mask(6) == ms({5, 6, 1, 2}));
  CHECK(CyclicInterval{5, 5}.mask(6) == ms({5}));
  CHECK(CyclicInterval{5, 10}.mask(6) == ms({5, 6, 1, 2, 3, 4}));
  CHECK(CyclicInterval{1, 6}.mask(6) == full_mask(6));
}

TEST_CASE("cyclic rank matrix from a matroid") {
  AffinePermutation p = demo_affine_permutation();
  CyclicRankMatrix expected = demo_matrix();
  CHECK(from_affine_permutation(p) == expected);

  Matroid m = positroid_from_interval_ranks(expected);
  CHECK(cyclic_rank_matrix(m) == expected);

  // Uniform matroids: r(i,j) = min(j-i+1, k).
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}, {0, 4}, {4, 4}}) {
    CyclicRankMatrix r = cyclic_rank_matrix(uniform(k, n));
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= i + n; ++j)
        CHECK(r.at(i, j) == std::min(j - i + 1, k));
  }
}

TEST_CASE("rank matrix validation") {
  CHECK(validate_rank_matrix(demo_matrix()));
  CHECK(validate_rank_matrix(cyclic_rank_matrix(square_matroid())));

  CyclicRankMatrix bad_diag = demo_matrix();
  bad_diag.set(1, 1, 2);
  CHECK(!validate_rank_matrix(bad_diag));

  // A matrix violating only the corner condition: r(1,3) should be forced
  // to 1 by r(2,2) = r(1,2) = r(2,3) = 1.
  CyclicRankMatrix corner(2);
  corner.set(1, 1, 1);
  corner.set(1, 2, 1);
  corner.set(1, 3, 2);
  corner.set(2, 2, 1);
  corner.set(2, 3, 1);
  corner.set(2, 4, 2);
  CHECK(!validate_rank_matrix(corner));

  // Unit steps violated.
  CyclicRankMatrix jump = demo_matrix();
  jump.set(1, 4, 5);
  CHECK(!validate_rank_matrix(jump));
}

TEST_CASE("matrix <-> permutation conversion") {
  AffinePermutation p = to_affine_permutation(demo_matrix());
  CHECK(p.window == std::vector<long>{3, 6, 5, 8, 7, 10});

  // All loops: pivots on the diagonal.
  AffinePermutation loops = to_affine_permutation(cyclic_rank_matrix(uniform(0, 4)));
  CHECK(loops.window == std::vector<long>{1, 2, 3, 4});

  // All coloops: pivots on the far edge.
  AffinePermutation coloops =
      to_affine_permutation(cyclic_rank_matrix(uniform(4, 4)));
  CHECK(coloops.window == std::vector<long>{5, 6, 7, 8});

  for (int n = 1; n <= 10; ++n)
    for (int t = 0; t < 1000; ++t) {
      AffinePermutation q =
          random_bounded_affine_permutation(n, 4200 + 131 * n + t);
      CHECK(q.valid());
      CHECK(to_affine_permutation(from_affine_permutation(q)) == q);
    }
}

TEST_CASE("length counts inversions") {
  CHECK(length(demo_affine_permutation()) == 3);
  AffinePermutation id4{4, {1, 2, 3, 4}};
  CHECK(length(id4) == 0);
  AffinePermutation shift4{4, {5, 6, 7, 8}};
  CHECK(length(shift4) == 0);
  AffinePermutation two_pairs{4, {2, 5, 4, 7}};
  CHECK(length(two_pairs) == 2);
}

TEST_CASE("essential positions") {
  auto es = essential_set(demo_affine_permutation());
  REQUIRE(es.size() == 3);
  CHECK(es[0].interval == CyclicInterval{1, 3});
  CHECK(es[1].interval == CyclicInterval{3, 5});
  CHECK(es[2].interval == CyclicInterval{5, 7});
  for (const auto& e : es) CHECK(e.rank_bound == 2);

  // Free matroid: nothing survives off the excluded edge.
  AffinePermutation free5{5, {6, 7, 8, 9, 10}};
  CHECK(essential_set(free5).empty());

  // A loop in an otherwise free matroid shows up as a diagonal position.
  Matroid with_loop = direct_sum(uniform(2, 2), uniform(0, 1));
  AffinePermutation pl = to_affine_permutation(cyclic_rank_matrix(with_loop));
  auto esl = essential_set(pl);
  REQUIRE(esl.size() == 1);
  CHECK(esl[0].interval == CyclicInterval{3, 3});
  CHECK(esl[0].rank_bound == 0);

  // Rank zero: the whole board survives, so no corner is left off the
  // excluded edge; regeneration still works since it starts from k.
  AffinePermutation all_loops{4, {1, 2, 3, 4}};
  CHECK(essential_set(all_loops).empty());
  CHECK(positroid_from_interval_ranks(4, 0, {}) == uniform(0, 4));

  // Essential bounds regenerate the matroid (the certification that matters).
  for (int n = 2; n <= 8; ++n)
    for (int t = 0; t < 60; ++t) {
      AffinePermutation q =
          random_bounded_affine_permutation(n, 9100 + 17 * n + t);
      Matroid m = positroid_from_interval_ranks(from_affine_permutation(q));
      std::vector<std::pair<CyclicInterval, int>> bounds;
      for (const auto& e : essential_set(q))
        bounds.push_back({e.interval, e.rank_bound});
      CHECK(positroid_from_interval_ranks(n, q.rank(), bounds) == m);
    }
}

TEST_CASE("positroid construction from interval bounds") {
  // The worked example: three rank-2 windows generate the demo positroid.
  std::vector<std::pair<CyclicInterval, int>> bounds = {
      {{1, 3}, 2}, {{3, 5}, 2}, {{5, 7}, 2}};
  Matroid m = positroid_from_interval_ranks(6, 3, bounds);
  CHECK(cyclic_rank_matrix(m) == demo_matrix());

  // No bounds: uniform.
  CHECK(positroid_from_interval_ranks(6, 3, {}) == uniform(3, 6));
  CHECK(positroid_from_interval_ranks(5, 0, {}) == uniform(0, 5));

  // The square matroid is generated by its four lines as interval bounds.
  std::vector<std::pair<CyclicInterval, int>> sq_bounds = {
      {{1, 3}, 2}, {{3, 5}, 2}, {{5, 7}, 2}, {{7, 9}, 2}};
  CHECK(positroid_from_interval_ranks(8, 3, sq_bounds) == square_matroid());

  // Contradictory bounds are rejected.
  CHECK_THROWS_AS(
      positroid_from_interval_ranks(4, 3, {{{1, 4}, 1}}),
      InconsistentRanks);
  // A system whose naive completion misses an implied interval bound fails
  // loudly rather than materializing a non-matroid.
  CHECK_THROWS_AS(positroid_from_interval_ranks(
                      4, 2, {{{1, 2}, 1}, {{2, 3}, 1}}),
                  InconsistentRanks);
  // The same matroid described by its closed set of bounds goes through.
  Matroid chain =
      positroid_from_interval_ranks(4, 2, {{{1, 3}, 1}});
  CHECK(chain.rank(ms({1, 2})) == 1);
  CHECK(chain.rank(ms({2, 3})) == 1);
}

namespace {

// Every labeled matroid on [n], enumerated as the basis-axiom-passing
// subsets of the k-subsets. Small n only.
std::vector<Matroid> all_matroids(int n) {
  std::vector<Matroid> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<Mask> ks;
    for (Mask s = 0; s <= full_mask(n); ++s)
      if (popcount(s) == k) ks.push_back(s);
    for (Mask pick = 1; pick < (Mask{1} << ks.size()); ++pick) {
      std::vector<Mask> bases;
      for (std::size_t i = 0; i < ks.size(); ++i)
        if ((pick >> i) & 1) bases.push_back(ks[i]);
      try {
        out.push_back(from_bases(n, bases));
      } catch (const AxiomViolation&) {
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the construction is pointwise-largest among matroids sharing its "
          "interval ranks") {
  // Exhaustive at n = 4 and 5, against every labeled matroid. Note the
  // comparison class fixes the interval ranks exactly: merely bounding them
  // from above admits incomparable matroids (a lone basis {2,4} on [4] stays
  // under the bounds of the 5,4,7,6 window yet beats it on {2,4}), so no
  // pointwise maximum exists over the inequality class.
  for (int n : {4, 5}) {
    std::vector<Matroid> all = all_matroids(n);
    CAPTURE(all.size());
    for (const auto& p : all_bounded_affine_permutations(n)) {
      CyclicRankMatrix r = from_affine_permutation(p);
      Matroid freest = positroid_from_interval_ranks(r);
      for (const Matroid& m : all) {
        if (!(cyclic_rank_matrix(m) == r)) continue;
        bool dominated = true;
        for (Mask s = 0; s <= full_mask(n) && dominated; ++s)
          dominated = m.rank(s) <= freest.rank(s);
        CHECK(dominated);
      }
    }
  }
}

TEST_CASE("is_positroid") {
  CHECK(is_positroid(square_matroid()));
  CHECK(!is_positroid(pappus_matroid()));
  CHECK(is_positroid(uniform(2, 4)));
  CHECK(is_positroid(uniform(0, 3)));
  CHECK(is_positroid(uniform(3, 3)));

  // Parallel pairs {1,3} and {2,4} cross on the cycle: not a positroid.
  Matroid crossing =
      from_bases(4, {ms({1, 2}), ms({1, 4}), ms({2, 3}), ms({3, 4})});
  CHECK(crossing.rank(ms({1, 3})) == 1);
  CHECK(crossing.rank(ms({2, 4})) == 1);
  CHECK(!is_positroid(crossing));

  // The relabeling with adjacent parallel pairs {1,2} and {3,4} is one.
  std::vector<std::uint8_t> t(16);
  for (Mask s = 0; s <= full_mask(4); ++s) {
    int r = std::min(popcount(s), 2);
    if ((s == ms({1, 2})) || (s == ms({3, 4}))) r = 1;
    t[s] = static_cast<std::uint8_t>(r);
  }
  CHECK(is_positroid(from_rank_table(4, t)));
}

TEST_CASE("interval-family value equals length") {
  AffinePermutation demo = demo_affine_permutation();
  CHECK(ec_positroid(demo) == 3);

  AffinePermutation free6{6, {7, 8, 9, 10, 11, 12}};
  CHECK(ec_positroid(free6) == 0);

  Matroid sq = square_matroid();
  AffinePermutation sq_perm = to_affine_permutation(cyclic_rank_matrix(sq));
  CHECK(ec_positroid(sq_perm) == 4);
  CHECK(length(sq_perm) == 4);
  CHECK(ec(sq) == 4);

  // Demo positroid: power-set route agrees.
  Matroid dm = positroid_from_interval_ranks(demo_matrix());
  CHECK(ec_with(dm, SubsetFamily::power_set(6)) == 3);
  CHECK(ec_with(dm, cyclic_interval_family(6)) == 3);
}

TEST_CASE("random bounded permutations have the advertised distribution "
          "support") {
  // n = 1: only the two windows.
  bool saw_loop = false, saw_coloop = false;
  for (int t = 0; t < 64; ++t) {
    AffinePermutation p = random_bounded_affine_permutation(1, 50 + t);
    REQUIRE(p.valid());
    saw_loop |= p.window[0] == 1;
    saw_coloop |= p.window[0] == 2;
  }
  CHECK(saw_loop);
  CHECK(saw_coloop);

  // Validity en masse.
  for (int t = 0; t < 10000; ++t)
    CHECK(random_bounded_affine_permutation(2 + t % 7, t).valid());
}

TEST_CASE("permutation-side operations scale past the table cap") {
  // length/essential/matrix conversions never materialize a rank table, so
  // they work far beyond n = 24.
  for (int t = 0; t < 5; ++t) {
    AffinePermutation p = random_bounded_affine_permutation(40, 8800 + t);
    CHECK(p.valid());
    CyclicRankMatrix r = from_affine_permutation(p);
    CHECK(validate_rank_matrix(r));
    CHECK(to_affine_permutation(r) == p);
    CHECK(length(p) >= 0);
    CHECK(ec_positroid(p) == length(p));
    auto es = essential_set(p);
    for (const auto& e : es) {
      CHECK(e.interval.cardinality() < 40);
      CHECK(e.rank_bound < std::min(e.interval.cardinality(), p.rank()) + 1);
    }
  }
  AffinePermutation shift{64, {}};
  for (int i = 1; i <= 64; ++i) shift.window.push_back(i + 64);
  CHECK(length(shift) == 0);
  CHECK(essential_set(shift).empty());
}

TEST_CASE("exhaustive small-n enumeration counts") {
  CHECK(all_bounded_affine_permutations(1).size() == 2);
  CHECK(all_bounded_affine_permutations(2).size() == 5);
  CHECK(all_bounded_affine_permutations(3).size() == 16);
  CHECK(all_bounded_affine_permutations(4).size() == 65);
  CHECK(all_bounded_affine_permutations(5).size() == 326);
}

TEST_CASE("full identity battery on assorted permutations") {
  for (const auto& p : all_bounded_affine_permutations(4))
    CHECK(check_positroid_identities(p).empty());
  for (int t = 0; t < 40; ++t) {
    AffinePermutation p = random_bounded_affine_permutation(7, 6800 + t);
    std::string bad = check_positroid_identities(p);
    CHECK_MESSAGE(bad.empty(), bad);
  }
}
