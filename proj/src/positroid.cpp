#include "ecodim/positroid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ecodim/kernels.hpp"

namespace ecodim {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

Mask CyclicInterval::mask(int n) const {
  Mask m = 0;
  for (int t = lo; t <= hi; ++t) m |= element_bit(((t - 1) % n) + 1);
  return m;
}

CyclicInterval CyclicInterval::normalized(int lo, int hi, int n) {
  int shift = static_cast<int>(floor_div(lo - 1, n));
  lo -= shift * n;
  hi -= shift * n;
  if (hi < lo || hi > lo + n - 1)
    throw Error("cyclic interval out of range");
  return CyclicInterval{lo, hi};
}

int CyclicRankMatrix::at(int i, int j) const {
  int d = j - i;
  if (d < 0 || d > n_)
    throw Error("rank matrix index outside the band");
  int row = ((i - 1) % n_ + n_) % n_;
  return r_[std::size_t(row) * (n_ + 1) + d];
}

void CyclicRankMatrix::set(int i, int j, int value) {
  int d = j - i;
  int row = ((i - 1) % n_ + n_) % n_;
  r_[std::size_t(row) * (n_ + 1) + d] = value;
}

int CyclicRankMatrix::at_ext(int i, int j) const {
  if (j - i < 0) return j - i + 1;  // empty-interval extension
  return at(i, j);
}

long AffinePermutation::pi(long i) const {
  long m = floor_div(i - 1, n);
  return window[i - 1 - m * n] + m * n;
}

long AffinePermutation::pi_inverse(long j) const {
  // Residue classes of the window values form a permutation, so exactly one
  // window slot maps to j's class.
  for (int i = 1; i <= n; ++i) {
    long diff = j - window[i - 1];
    if (diff % n == 0) return i + (diff / n) * n;
  }
  throw Error("affine permutation has no preimage for " + std::to_string(j));
}

bool AffinePermutation::valid() const {
  if (n < 1 || static_cast<int>(window.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int i = 1; i <= n; ++i) {
    long v = window[i - 1];
    if (v < i || v > i + n) return false;
    int res = static_cast<int>(((v - 1) % n + n) % n);
    if (seen[res]) return false;
    seen[res] = true;
  }
  return true;
}

int AffinePermutation::rank() const {
  long total = 0;
  for (int i = 1; i <= n; ++i) total += window[i - 1] - i;
  return static_cast<int>(total / n);
}

CyclicRankMatrix cyclic_rank_matrix(const Matroid& m) {
  const int n = m.n();
  CyclicRankMatrix r(n);
  for (int i = 1; i <= n; ++i) {
    Mask acc = 0;
    for (int d = 0; d <= n; ++d) {
      acc |= element_bit(((i + d - 1) % n) + 1);
      r.set(i, i + d, m.rank(acc));
    }
  }
  return r;
}

bool validate_rank_matrix(const CyclicRankMatrix& r) {
  const int n = r.n();
  for (int i = 1; i <= n; ++i) {
    if (r.at(i, i) != 0 && r.at(i, i) != 1) return false;
    for (int j = i; j <= i + n; ++j) {
      int v = r.at(i, j);
      if (j + 1 <= i + n) {
        int right = r.at(i, j + 1);
        if (right != v && right != v + 1) return false;
      }
      if (j - (i - 1) <= n) {
        int up = r.at(i - 1, j);
        if (up != v && up != v + 1) return false;
      }
      if (j + 1 - (i - 1) <= n) {
        if (r.at(i - 1, j) == v && r.at(i, j + 1) == v &&
            r.at(i - 1, j + 1) != v)
          return false;
      }
    }
  }
  return true;
}

AffinePermutation to_affine_permutation(const CyclicRankMatrix& r) {
  const int n = r.n();
  AffinePermutation p;
  p.n = n;
  p.window.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= i + n; ++j) {
      int v = r.at(i, j);
      if (r.at_ext(i, j - 1) == v && r.at_ext(i + 1, j) == v &&
          r.at_ext(i + 1, j - 1) != v) {
        if (p.window[i - 1] != 0)
          throw MalformedMatrix("two pivot positions in row " +
                                std::to_string(i));
        p.window[i - 1] = j;
      }
    }
    if (p.window[i - 1] == 0)
      throw MalformedMatrix("no pivot position in row " + std::to_string(i));
  }
  if (!p.valid())
    throw MalformedMatrix("pivot columns do not form a permutation");
  return p;
}

long ones_weakly_southwest(const AffinePermutation& p, long i, long j) {
  // Orbit copies (t+mn, pi(t)+mn) with t+mn >= i and pi(t)+mn <= j.
  long d = 0;
  for (int t = 1; t <= p.n; ++t) {
    long m_lo = ceil_div(i - t, p.n);
    long m_hi = floor_div(j - p.window[t - 1], p.n);
    if (m_hi >= m_lo) d += m_hi - m_lo + 1;
  }
  return d;
}

CyclicRankMatrix from_affine_permutation(const AffinePermutation& p) {
  if (!p.valid()) throw Error("invalid affine permutation window");
  CyclicRankMatrix r(p.n);
  for (int i = 1; i <= p.n; ++i)
    for (int j = i; j <= i + p.n; ++j)
      r.set(i, j, static_cast<int>((j - i + 1) - ones_weakly_southwest(p, i, j)));
  return r;
}

long length(const AffinePermutation& p) {
  long inv = 0;
  for (int i = 1; i <= p.n; ++i) {
    long vi = p.window[i - 1];
    for (long k = i + 1; k < i + p.n; ++k)
      if (p.pi(k) < vi) ++inv;
  }
  return inv;
}

std::vector<EssentialPosition> essential_set(const AffinePermutation& p) {
  const int n = p.n;
  CyclicRankMatrix r = from_affine_permutation(p);
  // A cell survives the crossing-out when the 1 of its row is weakly to its
  // left and the 1 of its column is weakly below it.
  auto survives = [&](long i, long j) {
    if (j - i < 0 || j - i > n) return false;  // outside the band
    return p.pi(i) <= j && p.pi_inverse(j) >= i;
  };
  std::vector<EssentialPosition> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= i + n - 1; ++j) {  // j-i = n excluded by convention
      if (!survives(i, j)) continue;
      if (survives(i - 1, j) || survives(i, j + 1)) continue;
      out.push_back(EssentialPosition{CyclicInterval{i, j}, r.at(i, j)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matroid positroid_from_interval_ranks(
    int n, int k, const std::vector<std::pair<CyclicInterval, int>>& bounds) {
  if (n < 1 || n > max_ground_size())
    throw SizeOverflow("ground-set size out of range: " + std::to_string(n));
  if (k < 0 || k > n) throw InconsistentRanks("rank out of range");

  // Complete the partial constraint map to every cyclic interval: start each
  // interval free at min(#I, k) and push down through the unit-step bound
  // r(I) <= r(J) + #(I \ J) from every given constraint.
  const Mask e = full_mask(n);
  std::vector<Mask> imask(std::size_t(n) * n);
  std::vector<int> completed(std::size_t(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int d = 0; d <= n - 1; ++d) {
      Mask im = CyclicInterval{i, i + d}.mask(n);
      imask[std::size_t(i - 1) * n + d] = im;
      completed[std::size_t(i - 1) * n + d] = std::min(d + 1, k);
    }
  for (const auto& [iv, bound] : bounds) {
    if (iv.cardinality() > n) throw InconsistentRanks("interval wider than n");
    if (bound < 0) throw InconsistentRanks("negative rank bound");
    Mask jm = iv.mask(n);
    for (std::size_t c = 0; c < imask.size(); ++c) {
      int implied = bound + popcount(imask[c] & ~jm);
      completed[c] = std::min(completed[c], implied);
    }
  }

  CyclicRankMatrix completed_matrix(n);
  for (int i = 1; i <= n; ++i) {
    for (int d = 0; d <= n - 1; ++d)
      completed_matrix.set(i, i + d, completed[std::size_t(i - 1) * n + d]);
    completed_matrix.set(i, i + n, completed[std::size_t(i - 1) * n + n - 1]);
  }
  if (completed_matrix.k() != k)
    throw InconsistentRanks("bounds force the total rank below k");
  if (!validate_rank_matrix(completed_matrix))
    throw InconsistentRanks("completed interval ranks fail the rank-matrix "
                            "conditions");

  // Bases from the completed matrix. The greedy basis in the i-shifted order
  // picks exactly the columns where row i steps up; a k-set is a basis iff it
  // dominates every one of these n greedy bases in the corresponding shifted
  // Gale order. (Interval bounds alone are not enough: bounds on overlapping
  // intervals force non-interval sets down by submodularity.)
  std::vector<std::vector<int>> necklace_pos(n);  // sorted shifted positions
  for (int i = 1; i <= n; ++i) {
    std::vector<int>& pos = necklace_pos[i - 1];
    for (int j = i; j <= i + n - 1; ++j)
      if (completed_matrix.at(i, j) > completed_matrix.at_ext(i, j - 1))
        pos.push_back(j - i);  // position of element j in the <_i order
    if (static_cast<int>(pos.size()) != k)
      throw InconsistentRanks("greedy basis of a shifted order has the wrong "
                              "size");
  }
  std::vector<Mask> bases;
  std::vector<int> spos(k);
  for (Mask b = 0; b <= e; ++b) {
    if (popcount(b) != k) continue;
    bool dominated = true;
    for (int i = 1; i <= n && dominated; ++i) {
      spos.clear();
      for (Mask t = b; t; t &= t - 1) {
        int elem = std::countr_zero(t) + 1;
        spos.push_back((elem - i + n) % n);
      }
      std::sort(spos.begin(), spos.end());
      const std::vector<int>& ip = necklace_pos[i - 1];
      for (int t = 0; t < k; ++t)
        if (spos[t] < ip[t]) {
          dominated = false;
          break;
        }
    }
    if (dominated) bases.push_back(b);
  }
  if (bases.empty())
    throw InconsistentRanks("no basis dominates all greedy bases");

  std::vector<std::uint8_t> table = kernels::rank_from_bases(n, bases);
  if (auto w = kernels::check_rank_axioms(table, n))
    throw InconsistentRanks(std::string("interval bounds do not generate a "
                                        "matroid: ") +
                            axiom_name(w->axiom) + " fails at " +
                            to_string(w->f));
  Matroid m = Matroid::unchecked(n, std::move(table));
  if (!(cyclic_rank_matrix(m) == completed_matrix))
    throw InconsistentRanks("completed interval ranks do not roundtrip");
  return m;
}

Matroid positroid_from_interval_ranks(const CyclicRankMatrix& r) {
  const int n = r.n();
  std::vector<std::pair<CyclicInterval, int>> bounds;
  for (int i = 1; i <= n; ++i)
    for (int d = 0; d <= n - 1; ++d)
      bounds.push_back({CyclicInterval{i, i + d}, r.at(i, i + d)});
  Matroid m = positroid_from_interval_ranks(n, r.k(), bounds);
  if (!(cyclic_rank_matrix(m) == r))
    throw InconsistentRanks("rank matrix does not roundtrip");
  return m;
}

bool is_positroid(const Matroid& m) {
  try {
    return positroid_from_interval_ranks(cyclic_rank_matrix(m)) == m;
  } catch (const InconsistentRanks&) {
    return false;
  }
}

long ec_positroid(const AffinePermutation& p) {
  const int n = p.n;
  const int k = p.rank();
  long acc = 0;
  for (int i = 1; i <= n; ++i) {
    long j = p.window[i - 1];
    if (j - i > n - 2) continue;  // the interval is the whole ground set
    long rank_ij = (j - i + 1) - ones_weakly_southwest(p, i, j);
    acc += k - rank_ij;
  }
  return acc;
}

AffinePermutation random_bounded_affine_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  auto below = [&](int m) { return static_cast<int>(eng() % m); };
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(w[i], w[below(i + 1)]);
  AffinePermutation p;
  p.n = n;
  p.window.resize(n);
  for (int i = 1; i <= n; ++i) {
    int wi = w[i - 1];
    if (wi > i)
      p.window[i - 1] = wi;
    else if (wi < i)
      p.window[i - 1] = wi + n;
    else
      p.window[i - 1] = (eng() & 1) ? wi + n : wi;
  }
  return p;
}

std::vector<AffinePermutation> all_bounded_affine_permutations(int n) {
  std::vector<AffinePermutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i)
      if (w[i - 1] == i) fixed.push_back(i);
    for (Mask lift = 0; lift < (Mask{1} << fixed.size()); ++lift) {
      AffinePermutation p;
      p.n = n;
      p.window.resize(n);
      int fi = 0;
      for (int i = 1; i <= n; ++i) {
        int wi = w[i - 1];
        if (wi > i)
          p.window[i - 1] = wi;
        else if (wi < i)
          p.window[i - 1] = wi + n;
        else
          p.window[i - 1] = (lift >> fi++) & 1 ? wi + n : wi;
      }
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace ecodim
