#include "ecodim/corpus.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

namespace ecodim {

namespace {

Mask triple(int a, int b, int c) {
  return element_bit(a) | element_bit(b) | element_bit(c);
}

}  // namespace

Matroid square_matroid() {
  LinePresentation p;
  p.n = 8;
  p.lines = {triple(1, 2, 3), triple(3, 4, 5), triple(5, 6, 7), triple(7, 8, 1)};
  return rank3_from_lines(p);
}

Matroid pappus_matroid() {
  LinePresentation p;
  p.n = 9;
  p.lines = {triple(1, 2, 3), triple(4, 5, 6), triple(7, 8, 9),
             triple(1, 5, 7), triple(1, 6, 8), triple(2, 4, 7),
             triple(2, 6, 9), triple(3, 4, 8), triple(3, 5, 9)};
  return rank3_from_lines(p);
}

RealizationMatrix square_model_matrix() {
  // Projective coordinates (x, y, 1). Points 1,3,5,7 are the corners
  // (0,0), (1,0), (1,1), (0,1); points 2,4,6,8 sit on the four sides at
  // generic positions, so the only collinear triples are 123, 345, 567, 781.
  auto q = [](long num, long den) { return Rat(num, den); };
  RealizationMatrix a;
  a.prime = 0;
  a.rows = 3;
  a.cols = 8;
  a.entries = {
      {q(0, 1), q(1, 2), q(1, 1), q(1, 1), q(1, 1), q(2, 5), q(0, 1), q(0, 1)},
      {q(0, 1), q(0, 1), q(0, 1), q(1, 3), q(1, 1), q(1, 1), q(1, 1), q(3, 7)},
      {q(1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1)},
  };
  return a;
}

AffinePermutation demo_affine_permutation() {
  AffinePermutation p;
  p.n = 6;
  p.window = {3, 6, 5, 8, 7, 10};
  return p;
}

SubdivisionWitness delta24_split_witness() {
  auto pairs_except = [](Mask skip) {
    std::vector<Mask> out;
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b) {
        Mask m = element_bit(a) | element_bit(b);
        if (m != skip) out.push_back(m);
      }
    return out;
  };
  Mask m12 = element_bit(1) | element_bit(2);
  Mask m34 = element_bit(3) | element_bit(4);
  SubdivisionWitness w{uniform(2, 4), {}};
  w.internal_faces.push_back({from_bases(4, pairs_except(m34)), 3});
  w.internal_faces.push_back({from_bases(4, pairs_except(m12)), 3});
  std::vector<Mask> shared;
  for (int a = 1; a <= 2; ++a)
    for (int b = 3; b <= 4; ++b) shared.push_back(element_bit(a) | element_bit(b));
  w.internal_faces.push_back({from_bases(4, shared), 2});
  return w;
}

namespace {

int gf2_rank(const std::vector<std::uint8_t>& cols, Mask sel) {
  // Columns are k-bit vectors; standard elimination on up to 6 of them.
  std::uint8_t basis[8] = {0};
  int rank = 0;
  for (Mask t = sel; t; t &= t - 1) {
    std::uint8_t v = cols[std::countr_zero(t)];
    for (int b = 7; b >= 0; --b) {
      if (!((v >> b) & 1)) continue;
      if (basis[b]) {
        v ^= basis[b];
      } else {
        basis[b] = v;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

bool connected_table(const std::vector<std::uint8_t>& t, int n) {
  const Mask e = full_mask(n);
  const int k = t[e];
  if (n == 1) return k == 1;
  for (Mask s = 1; s < e; ++s)
    if (t[s] + t[e & ~s] == k) return false;
  return true;
}

std::vector<Matroid> gf2_corpus_impl(int n, bool connected_only,
                                     Gf2CorpusStats* stats);

}  // namespace

std::vector<Matroid> gf2_connected_corpus(int n, Gf2CorpusStats* stats) {
  return gf2_corpus_impl(n, true, stats);
}

std::vector<Matroid> gf2_full_corpus(int n, Gf2CorpusStats* stats) {
  return gf2_corpus_impl(n, false, stats);
}

namespace {

std::vector<Matroid> gf2_corpus_impl(int n, bool connected_only,
                                     Gf2CorpusStats* stats) {
  if (n < 2 || n > 6) throw Error("gf2 corpus supports 2 <= n <= 6");

  // k = 1..n-1; spanning rank n on n elements would make every element a
  // coloop, hence disconnected, so nothing is lost stopping at n-1.
  // Work units fix the two smallest column values; the suffix enumeration of
  // non-decreasing n-tuples over the nonzero vectors of GF(2)^k runs inside.
  struct Unit {
    int k, c1, c2;
  };
  std::vector<Unit> units;
  for (int k = 1; k <= n - 1; ++k) {
    const int nvec = (1 << k) - 1;
    for (int c1 = 1; c1 <= nvec; ++c1)
      for (int c2 = c1; c2 <= nvec; ++c2) units.push_back({k, c1, c2});
  }

  struct UnitOut {
    long enumerated = 0;
    std::vector<std::string> tables;  // spanning + connected, deduped locally
  };
  std::vector<UnitOut> results(units.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t u = 0; u < units.size(); ++u) {
    const auto [k, c1, c2] = units[u];
    const int nvec = (1 << k) - 1;
    std::vector<std::uint8_t> cols(n);
    cols[0] = static_cast<std::uint8_t>(c1);
    cols[1] = static_cast<std::uint8_t>(c2);
    UnitOut& res = results[u];
    std::unordered_set<std::string> local;
    auto rec = [&](auto&& self, int pos, int low) -> void {
      if (pos == n) {
        ++res.enumerated;
        std::vector<std::uint8_t> table(1u << n);
        for (Mask s = 0; s <= full_mask(n); ++s)
          table[s] = static_cast<std::uint8_t>(gf2_rank(cols, s));
        if (table[full_mask(n)] != k) return;  // appears at its true rank
        if (connected_only && !connected_table(table, n)) return;
        std::string key(table.begin(), table.end());
        if (local.insert(key).second) res.tables.push_back(std::move(key));
        return;
      }
      for (int v = low; v <= nvec; ++v) {
        cols[pos] = static_cast<std::uint8_t>(v);
        self(self, pos + 1, v);
      }
    };
    rec(rec, 2, c2);
  }

  long enumerated = 0;
  std::unordered_set<std::string> seen;
  std::vector<Matroid> out;
  for (const auto& res : results) {
    enumerated += res.enumerated;
    for (const auto& key : res.tables)
      if (seen.insert(key).second)
        out.push_back(Matroid::unchecked(
            n, std::vector<std::uint8_t>(key.begin(), key.end())));
  }
  if (!connected_only) out.push_back(uniform(n, n));  // the lone rank-n case
  if (stats) {
    stats->matrices_enumerated = enumerated;
    stats->connected_distinct = static_cast<long>(out.size());
  }
  return out;
}

}  // namespace

Matroid random_gf2_matroid(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  int k = 1 + static_cast<int>(eng() % std::max(1, n - 1));
  std::vector<std::uint8_t> cols(n);
  for (int c = 0; c < n; ++c)
    cols[c] = static_cast<std::uint8_t>(1 + eng() % ((1u << k) - 1));
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Mask s = 0; s <= full_mask(n); ++s)
    table[s] = static_cast<std::uint8_t>(gf2_rank(cols, s));
  return Matroid::unchecked(n, std::move(table));
}

Matroid random_connected_gf2_matroid(int n, std::uint64_t seed) {
  for (std::uint64_t tweak = 0;; ++tweak) {
    Matroid m = random_gf2_matroid(n, seed + 0x9e3779b97f4a7c15ULL * tweak);
    if (m.connected()) return m;
  }
}

}  // namespace ecodim
