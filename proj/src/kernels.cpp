#include "ecodim/kernels.hpp"

#include <algorithm>

namespace ecodim::kernels {

namespace {

// Lexicographic order on witnesses so parallel and serial scans agree.
bool witness_less(const AxiomWitness& a, const AxiomWitness& b) {
  if (a.f != b.f) return a.f < b.f;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::optional<AxiomWitness> check_axioms_range(
    const std::vector<std::uint8_t>& table, int n, Mask lo, Mask hi) {
  std::optional<AxiomWitness> best;
  auto consider = [&](AxiomWitness w) {
    if (!best || witness_less(w, *best)) best = w;
  };
  for (Mask f = lo; f < hi; ++f) {
    int rf = table[f];
    bool clean = true;
    for (int x = 1; x <= n && clean; ++x) {
      if (has_element(f, x)) continue;
      int rx = table[f | element_bit(x)];
      if (rx != rf && rx != rf + 1) {
        consider({Axiom::RankUnit, f, x, 0});
        clean = false;
      }
    }
    if (!clean) continue;
    for (int x = 1; x <= n; ++x) {
      if (has_element(f, x)) continue;
      if (table[f | element_bit(x)] != rf) continue;
      for (int y = x + 1; y <= n; ++y) {
        if (has_element(f, y)) continue;
        if (table[f | element_bit(y)] != rf) continue;
        if (table[f | element_bit(x) | element_bit(y)] != rf) {
          consider({Axiom::RankExchange, f, x, y});
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<AxiomWitness> check_rank_axioms_serial(
    const std::vector<std::uint8_t>& table, int n) {
  if (table[0] != 0) return AxiomWitness{Axiom::RankEmpty, 0, 0, 0};
  return check_axioms_range(table, n, 0, full_mask(n) + 1);
}

std::optional<AxiomWitness> check_rank_axioms_parallel(
    const std::vector<std::uint8_t>& table, int n) {
  if (table[0] != 0) return AxiomWitness{Axiom::RankEmpty, 0, 0, 0};
  const Mask total = full_mask(n) + 1;
  const int chunks = 64;
  std::vector<std::optional<AxiomWitness>> found(chunks);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    Mask lo = static_cast<Mask>((std::uint64_t(total) * c) / chunks);
    Mask hi = static_cast<Mask>((std::uint64_t(total) * (c + 1)) / chunks);
    found[c] = check_axioms_range(table, n, lo, hi);
  }
  std::optional<AxiomWitness> best;
  for (const auto& w : found)
    if (w && (!best || witness_less(*w, *best))) best = w;
  return best;
}

std::optional<AxiomWitness> check_rank_axioms(
    const std::vector<std::uint8_t>& table, int n) {
  return n >= 14 ? check_rank_axioms_parallel(table, n)
                 : check_rank_axioms_serial(table, n);
}

std::vector<std::uint8_t> rank_from_bases_serial(
    int n, const std::vector<Mask>& bases) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Mask s = 0; s <= full_mask(n); ++s) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, popcount(s & b));
    table[s] = static_cast<std::uint8_t>(best);
  }
  return table;
}

std::vector<std::uint8_t> rank_from_bases_parallel(
    int n, const std::vector<Mask>& bases) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  const std::int64_t total = std::int64_t{1} << n;
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < total; ++s) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, popcount(Mask(s) & b));
    table[s] = static_cast<std::uint8_t>(best);
  }
  return table;
}

std::vector<std::uint8_t> rank_from_bases(int n, const std::vector<Mask>& bases) {
  return (n >= 16 || (std::size_t{1} << n) * bases.size() > (1u << 22))
             ? rank_from_bases_parallel(n, bases)
             : rank_from_bases_serial(n, bases);
}

namespace {

void component_meet_range(const std::vector<std::uint8_t>& table, int n,
                          Mask lo, Mask hi, std::vector<Mask>& comp) {
  const Mask e = full_mask(n);
  const int k = table[e];
  for (Mask s = lo; s < hi; ++s) {
    if (s == 0 || s == e) continue;
    if (table[s] + table[e & ~s] != k) continue;
    for (int x = 1; x <= n; ++x)
      comp[x - 1] &= has_element(s, x) ? s : (e & ~s);
  }
}

}  // namespace

std::vector<Mask> component_meet_serial(const std::vector<std::uint8_t>& table,
                                        int n) {
  std::vector<Mask> comp(n, full_mask(n));
  component_meet_range(table, n, 0, full_mask(n) + 1, comp);
  return comp;
}

std::vector<Mask> component_meet_parallel(
    const std::vector<std::uint8_t>& table, int n) {
  const Mask total = full_mask(n) + 1;
  const int chunks = 64;
  std::vector<std::vector<Mask>> parts(chunks,
                                       std::vector<Mask>(n, full_mask(n)));
#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    Mask lo = static_cast<Mask>((std::uint64_t(total) * c) / chunks);
    Mask hi = static_cast<Mask>((std::uint64_t(total) * (c + 1)) / chunks);
    component_meet_range(table, n, lo, hi, parts[c]);
  }
  std::vector<Mask> comp(n, full_mask(n));
  for (const auto& p : parts)
    for (int i = 0; i < n; ++i) comp[i] &= p[i];
  return comp;
}

std::vector<Mask> component_meet(const std::vector<std::uint8_t>& table, int n) {
  return n >= 16 ? component_meet_parallel(table, n)
                 : component_meet_serial(table, n);
}

namespace {

// Accumulate pair counts for all T in [lo, hi) and S subseteq T.
void pair_counts_range(const std::vector<std::uint8_t>& table, int n, Mask lo,
                       Mask hi, std::vector<std::uint64_t>& cube) {
  const int w = n + 1;
  const int k = table[full_mask(n)];
  for (Mask t = lo; t < hi; ++t) {
    const int ct = popcount(t);
    const int b = k - table[t];
    for (Mask s = t;; s = (s - 1) & t) {
      const int a = popcount(s) - table[s];
      const int c = ct - popcount(s);
      ++cube[(std::size_t(a) * w + b) * w + c];
      if (s == 0) break;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> nested_pair_counts_serial(
    const std::vector<std::uint8_t>& table, int n) {
  std::vector<std::uint64_t> cube(std::size_t(n + 1) * (n + 1) * (n + 1), 0);
  pair_counts_range(table, n, 0, full_mask(n) + 1, cube);
  return cube;
}

std::vector<std::uint64_t> nested_pair_counts_parallel(
    const std::vector<std::uint8_t>& table, int n) {
  const std::size_t cells = std::size_t(n + 1) * (n + 1) * (n + 1);
  const Mask total = full_mask(n) + 1;
  const int chunks = 128;
  std::vector<std::vector<std::uint64_t>> parts;
  parts.resize(chunks);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    // High masks carry exponentially more submasks; dynamic scheduling over
    // equal mask ranges balances this well enough.
    std::vector<std::uint64_t> local(cells, 0);
    Mask lo = static_cast<Mask>((std::uint64_t(total) * c) / chunks);
    Mask hi = static_cast<Mask>((std::uint64_t(total) * (c + 1)) / chunks);
    pair_counts_range(table, n, lo, hi, local);
    parts[c] = std::move(local);
  }
  std::vector<std::uint64_t> cube(cells, 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < cells; ++i) cube[i] += p[i];
  return cube;
}

std::vector<std::uint64_t> nested_pair_counts(
    const std::vector<std::uint8_t>& table, int n) {
  return n >= 13 ? nested_pair_counts_parallel(table, n)
                 : nested_pair_counts_serial(table, n);
}

}  // namespace ecodim::kernels
