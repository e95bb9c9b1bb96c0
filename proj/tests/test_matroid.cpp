#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ecodim/corpus.hpp"
#include "ecodim/matroid.hpp"

using namespace ecodim;

namespace {

Mask ms(std::initializer_list<int> elems) {
  Mask m = 0;
  for (int e : elems) m |= element_bit(e);
  return m;
}

// Independence-based rank oracle: rk(S) = size of the largest subset of S
// contained in some basis. Independent of the max-intersection fold.
int rank_oracle(const std::vector<Mask>& bases, Mask s) {
  int best = 0;
  for (Mask t = s;; t = (t - 1) & s) {
    for (Mask b : bases)
      if (subset_of(t, b)) {
        best = std::max(best, popcount(t));
        break;
      }
    if (t == 0) break;
  }
  return best;
}

// Circuit-sharing components: union-find over all circuits.
std::vector<Mask> components_by_circuits(const Matroid& m) {
  std::vector<int> parent(m.n());
  for (int i = 0; i < m.n(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask c : m.circuits()) {
    auto elems = elements_of(c);
    for (std::size_t i = 1; i < elems.size(); ++i) {
      int a = find(elems[0] - 1), b = find(elems[i] - 1);
      if (a != b) parent[a] = b;
    }
  }
  std::vector<Mask> classes;
  std::vector<int> root_of(m.n(), -1);
  for (int e = 1; e <= m.n(); ++e) {
    int r = find(e - 1);
    if (root_of[r] < 0) {
      root_of[r] = static_cast<int>(classes.size());
      classes.push_back(0);
    }
    classes[root_of[r]] |= element_bit(e);
  }
  return classes;
}

}  // namespace

TEST_CASE("rank-table constructor accepts and rejects correctly") {
  Matroid loop = from_rank_table(1, {0, 0});
  CHECK(loop.rank() == 0);
  CHECK(loop.loops() == ms({1}));

  Matroid coloop = from_rank_table(1, {0, 1});
  CHECK(coloop.rank() == 1);
  CHECK(coloop.coloops() == ms({1}));

  Matroid parallel = from_rank_table(2, {0, 1, 1, 1});
  CHECK(parallel.is_parallel(1, 2));
  CHECK(!parallel.is_parallel(1, 1));

  CHECK_THROWS_AS(from_rank_table(2, {0, 1, 0, 2}), AxiomViolation);
  try {
    from_rank_table(2, {0, 1, 0, 2});
  } catch (const AxiomViolation& v) {
    CHECK(v.axiom == Axiom::RankUnit);  // fails on {2} inside {1,2}
    CHECK(v.set_a == ms({2}));
  }
  CHECK_THROWS_AS(from_rank_table(1, {1, 1}), AxiomViolation);
  CHECK_THROWS_AS(from_rank_table(2, {0, 0, 0, 1}), AxiomViolation);
}

TEST_CASE("from_bases computes ranks and validates the axioms") {
  std::vector<Mask> all_pairs;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) all_pairs.push_back(ms({a, b}));
  Matroid u24 = from_bases(4, all_pairs);
  CHECK(u24 == uniform(2, 4));
  CHECK(u24.rank(ms({1, 2, 3})) == 2);

  Matroid single = from_bases(3, {ms({1, 2})});
  CHECK(single.rank(ms({3})) == 0);
  CHECK(single.loops() == ms({3}));
  CHECK(single.coloops() == ms({1, 2}));

  Matroid two_pairs = from_bases(4, {ms({1, 3}), ms({1, 4}), ms({2, 3}), ms({2, 4})});
  CHECK(two_pairs.rank(ms({1, 2})) == 1);
  // Whole table against the independence oracle.
  std::vector<Mask> bs = {ms({1, 3}), ms({1, 4}), ms({2, 3}), ms({2, 4})};
  for (Mask s = 0; s <= full_mask(4); ++s)
    CHECK(two_pairs.rank(s) == rank_oracle(bs, s));

  CHECK_THROWS_AS(from_bases(2, std::vector<Mask>{}), AxiomViolation);
  CHECK_THROWS_AS(from_bases(2, {ms({1}), ms({1, 2})}), AxiomViolation);
  CHECK_THROWS_AS(from_bases(4, {ms({1, 2}), ms({3, 4})}), AxiomViolation);
  // Unequal sizes pass the antichain check but die on exchange.
  CHECK_THROWS_AS(from_bases(3, {ms({1}), ms({2, 3})}), AxiomViolation);
}

TEST_CASE("every basis has cardinality k") {
  std::mt19937_64 eng(7);
  for (int t = 0; t < 30; ++t) {
    Matroid m = random_gf2_matroid(4 + t % 4, 555 + t);
    for (Mask b : m.bases()) CHECK(popcount(b) == m.rank());
  }
}

TEST_CASE("from_matrix over GF(2) and the rationals") {
  RealizationMatrix id3;
  id3.prime = 2;
  id3.rows = id3.cols = 3;
  id3.entries = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(from_matrix(id3) == uniform(3, 3));

  RealizationMatrix zero_col;
  zero_col.prime = 2;
  zero_col.rows = 2;
  zero_col.cols = 3;
  zero_col.entries = {{1, 0, 0}, {0, 1, 0}};
  Matroid z = from_matrix(zero_col);
  CHECK(z.loops() == ms({3}));
  CHECK(z.rank() == 2);

  RealizationMatrix bad;
  bad.prime = 4;
  bad.rows = bad.cols = 1;
  bad.entries = {{1}};
  CHECK_THROWS(from_matrix(bad));
}

TEST_CASE("the rational square model realizes the square matroid") {
  RealizationMatrix a = square_model_matrix();
  // Oracle: all 56 column-triple determinants by exact rational arithmetic.
  std::set<Mask> vanishing;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) {
        auto col = [&](int c, int r) { return a.entries[r][c - 1]; };
        Rat det = col(i, 0) * (col(j, 1) * col(k, 2) - col(j, 2) * col(k, 1)) -
                  col(j, 0) * (col(i, 1) * col(k, 2) - col(i, 2) * col(k, 1)) +
                  col(k, 0) * (col(i, 1) * col(j, 2) - col(i, 2) * col(j, 1));
        if (det == 0) vanishing.insert(ms({i, j, k}));
      }
  std::set<Mask> expected = {ms({1, 2, 3}), ms({3, 4, 5}), ms({5, 6, 7}),
                             ms({1, 7, 8})};
  CHECK(vanishing == expected);
  CHECK(from_matrix(a) == square_matroid());
}

TEST_CASE("rank-3 line presentations") {
  Matroid sq = square_matroid();
  CHECK(sq.rank(ms({1, 2, 3})) == 2);
  CHECK(sq.rank(ms({1, 2, 4})) == 3);
  CHECK(sq.rank(ms({3, 4, 5})) == 2);
  CHECK(sq.rank(full_mask(8)) == 3);

  LinePresentation free3;
  free3.n = 3;
  CHECK(rank3_from_lines(free3) == uniform(3, 3));

  Matroid pap = pappus_matroid();
  CHECK(pap.n() == 9);
  CHECK(pap.rank() == 3);
  CHECK(pap.rank(ms({1, 5, 7})) == 2);
  CHECK(pap.rank(ms({1, 5, 8})) == 3);

  LinePresentation bad;
  bad.n = 5;
  bad.lines = {ms({1, 2, 3}), ms({2, 3, 4})};
  CHECK_THROWS_AS(rank3_from_lines(bad), InvalidPresentation);
}

TEST_CASE("uniform matroids") {
  CHECK(uniform(0, 1).rank() == 0);
  CHECK(uniform(1, 1).rank() == 1);
  CHECK(uniform(2, 4).bases().size() == 6);
  CHECK_THROWS(uniform(3, 2));
}

TEST_CASE("rank lookups on the square matroid") {
  Matroid sq = square_matroid();
  CHECK(sq.rank(0) == 0);
  CHECK(sq.rank(ms({3, 4, 5})) == 2);
  CHECK(sq.rank(ms({1, 2, 3, 4})) == 3);
}

TEST_CASE("closure and flats") {
  Matroid sq = square_matroid();
  CHECK(sq.closure(sq.ground()) == sq.ground());
  CHECK(sq.closure(ms({1, 2})) == ms({1, 2, 3}));

  auto fl = uniform(2, 3).flats();
  std::vector<Mask> expected = {0, ms({1}), ms({2}), ms({3}), ms({1, 2, 3})};
  CHECK(fl == expected);

  // Closure is idempotent and inclusion-preserving on random inputs.
  std::mt19937_64 eng(11);
  for (int t = 0; t < 50; ++t) {
    Matroid m = random_gf2_matroid(5 + t % 3, 999 + t);
    Mask s = static_cast<Mask>(eng()) & m.ground();
    Mask c = m.closure(s);
    CHECK(m.closure(c) == c);
    CHECK(subset_of(s, c));
    Mask bigger = s | (static_cast<Mask>(eng()) & m.ground());
    CHECK(subset_of(c, m.closure(bigger)));
  }
}

TEST_CASE("circuits, loops, coloops") {
  CHECK(uniform(3, 3).circuits().empty());

  auto sq_circuits = square_matroid().circuits();
  CHECK(std::find(sq_circuits.begin(), sq_circuits.end(), ms({1, 2, 3})) !=
        sq_circuits.end());

  Matroid single = from_bases(3, {ms({1, 2})});
  CHECK(single.coloops() == ms({1, 2}));
  CHECK(single.loops() == ms({3}));

  // Circuits are exactly the minimal dependent sets.
  for (int t = 0; t < 20; ++t) {
    Matroid m = random_gf2_matroid(5, 1234 + t);
    for (Mask c : m.circuits()) {
      CHECK(m.rank(c) == popcount(c) - 1);
      for (Mask q = (c - 1) & c; q; q = (q - 1) & c)
        CHECK(m.rank(q) == popcount(q));
    }
  }
}

TEST_CASE("connected components agree between circuits and separators") {
  Matroid lc = direct_sum(uniform(0, 1), uniform(1, 1));
  CHECK(lc.connected_components() == std::vector<Mask>{ms({1}), ms({2})});

  CHECK(uniform(2, 4).connected_components().size() == 1);
  CHECK(square_matroid().connected_components().size() == 1);

  for (int t = 0; t < 70; ++t) {
    Matroid m = random_gf2_matroid(4 + t % 7, 4321 + t);  // n up to 10
    auto a = m.connected_components();
    auto b = components_by_circuits(m);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  Matroid dsum = direct_sum(direct_sum(uniform(2, 4), uniform(1, 3)),
                            direct_sum(uniform(0, 1), uniform(2, 2)));
  auto a = dsum.connected_components();
  auto b = components_by_circuits(dsum);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(a.size() == 5);  // U(2,2) is two coloops
}

TEST_CASE("duality") {
  CHECK(uniform(1, 3).dual() == uniform(2, 3));
  CHECK(square_matroid().dual().rank() == 5);
  CHECK(square_matroid().dual().n() == 8);

  for (int t = 0; t < 40; ++t) {
    Matroid m = random_gf2_matroid(4 + t % 4, 87 + t);
    Matroid d = m.dual();
    CHECK(d.dual() == m);
    for (Mask s = 0; s <= m.ground(); ++s)
      CHECK(d.rank(s) == popcount(s) - m.rank() + m.rank(m.ground() & ~s));
  }
}

TEST_CASE("direct sums and one-element extensions") {
  Matroid lc = direct_sum(uniform(0, 1), uniform(1, 1));
  CHECK(lc.rank(ms({1, 2})) == 1);
  CHECK(direct_sum(uniform(2, 4), uniform(1, 2)).rank() == 3);

  for (int t = 0; t < 20; ++t) {
    Matroid a = random_gf2_matroid(4, 55 + t);
    Matroid b = random_gf2_matroid(3, 66 + t);
    CHECK(direct_sum(a, b).dual() == direct_sum(a.dual(), b.dual()));
  }
  Matroid m = uniform(2, 4);
  CHECK(loop_extension(m).loops() == ms({5}));
  CHECK(coloop_extension(m).coloops() == ms({5}));
}

TEST_CASE("minors relabel densely and are dual to each other") {
  Matroid sq = square_matroid();
  CHECK(contract(sq, 0).m == sq);
  Minor c1 = contract(sq, ms({1}));
  CHECK(c1.m.rank() == 2);
  CHECK(c1.m.n() == 7);
  CHECK(c1.parent_element == std::vector<int>{2, 3, 4, 5, 6, 7, 8});

  for (int t = 0; t < 40; ++t) {
    Matroid m = random_gf2_matroid(5 + t % 3, 777 + t);
    Mask s = static_cast<Mask>(std::mt19937_64(t * 3 + 1)()) & m.ground();
    CHECK(restrict_to(m, s).m.dual() ==
          contract(m.dual(), m.ground() & ~s).m);
    CHECK(restrict_to(m, s).m.rank() == m.rank(s));
    if (s != 0)
      CHECK(contract(m, s).m.rank() == m.rank() - m.rank(s));
  }
}

TEST_CASE("restriction/contraction connectivity helpers match minors") {
  for (int t = 0; t < 60; ++t) {
    Matroid m = random_gf2_matroid(5 + t % 3, 31 + t);
    std::mt19937_64 eng(t);
    Mask s = static_cast<Mask>(eng()) & m.ground();
    if (s == 0) continue;
    CHECK(restriction_connected(m, s) == restrict_to(m, s).m.connected());
    if (s != m.ground())
      CHECK(contraction_connected(m, s) == contract(m, s).m.connected());
  }
  // Conventions at one element: a lone coloop is connected, a lone loop not.
  CHECK(uniform(1, 1).connected());
  CHECK(!uniform(0, 1).connected());
  CHECK(contraction_connected(uniform(2, 4), full_mask(4)));
}
