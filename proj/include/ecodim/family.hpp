#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ecodim/matroid.hpp"

namespace ecodim {

/**
 * A deduplicated collection of subsets of {1,...,n}, ordered by containment.
 * Members are kept sorted by (cardinality, mask value), which is a linear
 * extension of containment, so recursions in containment order are plain
 * left-to-right scans.
 */
class SubsetFamily {
 public:
  explicit SubsetFamily(std::vector<Mask> members);
  static SubsetFamily power_set(int n);

  int size() const { return static_cast<int>(members_.size()); }
  Mask member(int i) const { return members_[i]; }
  const std::vector<Mask>& members() const { return members_; }
  std::optional<int> index_of(Mask s) const;
  bool contains_member(Mask s) const { return index_of(s).has_value(); }

  // Mobius function of the containment poset on the members:
  // mu(S,S) = 1, mu(T,S) = -sum_{T<=U<S} mu(T,U), 0 unless T is a subset of S.
  const Int& mobius(int ti, int si) const;

  // The complement family {E - S : S in family} on ground {1,...,n}.
  SubsetFamily complements(int n) const;

  SubsetFamily without(Mask z) const;

 private:
  std::vector<Mask> members_;
  std::unordered_map<Mask, int> index_;
  mutable std::unordered_map<std::uint64_t, Int> mobius_memo_;
};

// Coefficient table over a family, aligned with the family's member order.
struct CoeffTable {
  std::vector<Mask> sets;
  std::vector<Int> values;
  const Int& at(Mask s) const;
};

}  // namespace ecodim
