#include "ecodim/family.hpp"

#include <algorithm>

namespace ecodim {

namespace {

bool containment_order(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

}  // namespace

SubsetFamily::SubsetFamily(std::vector<Mask> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), containment_order);
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  index_.reserve(members_.size());
  for (int i = 0; i < static_cast<int>(members_.size()); ++i)
    index_.emplace(members_[i], i);
}

SubsetFamily SubsetFamily::power_set(int n) {
  std::vector<Mask> all(std::size_t{1} << n);
  for (Mask s = 0; s <= full_mask(n); ++s) all[s] = s;
  return SubsetFamily(std::move(all));
}

std::optional<int> SubsetFamily::index_of(Mask s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Int& SubsetFamily::mobius(int ti, int si) const {
  static const Int zero = 0;
  static const Int one = 1;
  if (ti == si) return one;
  Mask t = members_[ti], s = members_[si];
  if (!subset_of(t, s) || t == s) return zero;
  std::uint64_t key = (std::uint64_t(ti) << 32) | std::uint64_t(si);
  auto it = mobius_memo_.find(key);
  if (it != mobius_memo_.end()) return it->second;
  Int acc = 0;
  // Members between ti and si in the sorted order cover all T <= U < S.
  for (int ui = ti; ui < si; ++ui) {
    Mask u = members_[ui];
    if (subset_of(t, u) && subset_of(u, s) && u != s) acc -= mobius(ti, ui);
  }
  return mobius_memo_.emplace(key, std::move(acc)).first->second;
}

SubsetFamily SubsetFamily::complements(int n) const {
  std::vector<Mask> out;
  out.reserve(members_.size());
  for (Mask s : members_) out.push_back(full_mask(n) & ~s);
  return SubsetFamily(std::move(out));
}

SubsetFamily SubsetFamily::without(Mask z) const {
  std::vector<Mask> out;
  out.reserve(members_.size());
  for (Mask s : members_)
    if (s != z) out.push_back(s);
  return SubsetFamily(std::move(out));
}

const Int& CoeffTable::at(Mask s) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == s) return values[i];
  throw Error("coefficient lookup for a set outside the family: " +
              to_string(s));
}

}  // namespace ecodim
