#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ecodim/matroid.hpp"

namespace ecodim {

struct InconsistentRanks : Error {
  using Error::Error;
};
struct MalformedMatrix : Error {
  using Error::Error;
};

// Cyclic interval [lo, hi] on {1,...,n}: the residues lo, lo+1, ..., hi
// mod n. Stored with 1 <= lo <= n and lo <= hi <= lo+n-1; cardinality is
// hi - lo + 1.
struct CyclicInterval {
  int lo = 1;
  int hi = 1;
  int cardinality() const { return hi - lo + 1; }
  Mask mask(int n) const;
  static CyclicInterval normalized(int lo, int hi, int n);
  auto operator<=>(const CyclicInterval&) const = default;
};

/**
 * Ranks of all cyclic intervals, on the fundamental domain
 * {(i,j) : 1 <= i <= n, i <= j <= i+n}, extended periodically by
 * r(i+n, j+n) = r(i, j). Entries with j-i = n describe the full ground set
 * (so they always equal r(i, i+n-1)).
 */
class CyclicRankMatrix {
 public:
  explicit CyclicRankMatrix(int n) : n_(n), r_(std::size_t(n) * (n + 1), 0) {}
  int n() const { return n_; }
  int k() const { return at(1, n_); }

  // i,j arbitrary with 0 <= j-i <= n; reduced into the fundamental domain.
  int at(int i, int j) const;
  void set(int i, int j, int value);

  // Extension used by the permutation rules: empty intervals below the
  // diagonal get r(i, i-1) = 0, r(i, i-2) = -1 (that is, j-i+1).
  int at_ext(int i, int j) const;

  bool operator==(const CyclicRankMatrix&) const = default;

 private:
  int n_;
  std::vector<int> r_;
};

/**
 * Bounded affine permutation: pi: Z -> Z with i <= pi(i) <= i+n and
 * pi(i+n) = pi(i)+n, stored through its window pi(1..n).
 */
struct AffinePermutation {
  int n = 0;
  std::vector<long> window;  // window[i-1] = pi(i)

  long pi(long i) const;
  long pi_inverse(long j) const;
  bool valid() const;
  // k of the associated positroid: (sum_i pi(i)-i) / n.
  int rank() const;
  bool operator==(const AffinePermutation&) const = default;
};

struct EssentialPosition {
  CyclicInterval interval;
  int rank_bound = 0;
  auto operator<=>(const EssentialPosition&) const = default;
};

// r(i,j) = rk[i,j] straight off the rank table.
CyclicRankMatrix cyclic_rank_matrix(const Matroid& m);

// The three defining conditions plus periodicity.
bool validate_rank_matrix(const CyclicRankMatrix& r);

// 1 at (i,j) whenever r(i,j) = r(i,j-1) = r(i+1,j) != r(i+1,j-1).
// Throws MalformedMatrix if rows/column residues fail to pair up.
AffinePermutation to_affine_permutation(const CyclicRankMatrix& r);

// r(i,j) = (j-i+1) - #{one-entries of the permutation matrix weakly
// southwest of (i,j)}; inverse of to_affine_permutation.
CyclicRankMatrix from_affine_permutation(const AffinePermutation& p);

// Number of inversions: pairs i in [1,n], k in (i, i+n) with pi(k) < pi(i),
// each affine orbit pair counted once.
long length(const AffinePermutation& p);

// Count of one-entries of the affine permutation matrix weakly southwest of
// (i, j): copies (t, pi(t)) with t >= i and pi(t) <= j.
long ones_weakly_southwest(const AffinePermutation& p, long i, long j);

// Fulton-style essential positions of the crossed-out board, computed on the
// cylinder; positions with j-i = n are excluded by convention. Bounds come
// from the associated rank matrix.
std::vector<EssentialPosition> essential_set(const AffinePermutation& p);

// Freest matroid whose interval ranks respect the given bounds: S is
// independent iff #S <= k and #(S cap I) <= bound(I) for every constraint.
// The completed interval map is certified by recomputing it from the result;
// a mismatch (or an axiom failure) throws InconsistentRanks.
Matroid positroid_from_interval_ranks(
    int n, int k, const std::vector<std::pair<CyclicInterval, int>>& bounds);
Matroid positroid_from_interval_ranks(const CyclicRankMatrix& r);

bool is_positroid(const Matroid& m);

// Expected codimension over the cyclic-interval family, evaluated through
// the permutation matrix alone (the interval coefficients are exactly its
// entries); always equals length().
long ec_positroid(const AffinePermutation& p);

// Uniform over windows obtained by lifting a uniform permutation w of [n],
// sending w(i) to w(i) or w(i)+n as boundedness dictates (fixed points flip
// a fair coin). Deterministic per seed.
AffinePermutation random_bounded_affine_permutation(int n, std::uint64_t seed);

// All bounded affine permutations on [n] (sum_w 2^{fixed points of w} many).
std::vector<AffinePermutation> all_bounded_affine_permutations(int n);

}  // namespace ecodim
