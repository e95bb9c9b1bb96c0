#include "ecodim/ecodim.hpp"

#include <stdexcept>

namespace ecodim {

CoeffTable coeff_a(const Matroid& m, const SubsetFamily& f) {
  CoeffTable t;
  t.sets = f.members();
  t.values.resize(f.size());
  for (int i = 0; i < f.size(); ++i) {
    Mask s = f.member(i);
    Int acc = m.corank_excess(s);
    for (int j = 0; j < i; ++j)
      if (subset_of(f.member(j), s) && f.member(j) != s) acc -= t.values[j];
    t.values[i] = std::move(acc);
  }
  return t;
}

CoeffTable coeff_b(const Matroid& m, const SubsetFamily& f) {
  CoeffTable t;
  t.sets = f.members();
  t.values.resize(f.size());
  const int k = m.rank();
  for (int ti = 0; ti < f.size(); ++ti) {
    Int acc = 0;
    for (int si = ti; si < f.size(); ++si) {
      Mask s = f.member(si);
      if (!subset_of(f.member(ti), s)) continue;
      int codim = k - m.rank(s);
      if (codim != 0) acc += codim * f.mobius(ti, si);
    }
    t.values[ti] = std::move(acc);
  }
  return t;
}

Int ec_with(const Matroid& m, const SubsetFamily& f) {
  CoeffTable a = coeff_a(m, f);
  Int acc = 0;
  const int k = m.rank();
  for (int i = 0; i < f.size(); ++i) {
    int codim = k - m.rank(f.member(i));
    if (codim != 0) acc += codim * a.values[i];
  }
  return acc;
}

SubsetFamily flacets(const Matroid& m) {
  std::vector<Mask> out;
  const Mask e = m.ground();
  for (Mask s = 1; s <= e; ++s)
    if (restriction_connected(m, s) && contraction_connected(m, s))
      out.push_back(s);
  out.push_back(e);  // harmless: its codimension term is zero
  return SubsetFamily(std::move(out));
}

Int ec(const Matroid& m) {
  // Per connected component, the flacet family matches the power set; across
  // components the power-set value additionally picks up the rank-corank
  // cross terms (each summand's dependencies are cut down by the other
  // summands' ranks). Summing both pieces reproduces the power-set value.
  std::vector<Mask> comps = m.connected_components();
  Int acc = 0;
  long cross = 0;
  std::vector<std::pair<int, int>> shape;  // (k_i, n_i - k_i)
  for (Mask comp : comps) {
    int k_i = m.rank(comp);
    shape.emplace_back(k_i, popcount(comp) - k_i);
    if (popcount(comp) == 1) continue;  // a lone loop or coloop contributes 0
    Minor part = restrict_to(m, comp);
    acc += ec_with(part.m, flacets(part.m));
  }
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (std::size_t j = 0; j < shape.size(); ++j)
      if (i != j) cross += static_cast<long>(shape[i].first) * shape[j].second;
  return acc + cross;
}

RemovalDelta removal_delta(const Matroid& m, const SubsetFamily& f, Mask z) {
  auto zi_opt = f.index_of(z);
  if (!zi_opt) throw Error("removal_delta: set not in family: " + to_string(z));
  const int zi = *zi_opt;

  CoeffTable a = coeff_a(m, f);
  CoeffTable b = coeff_b(m, f);
  Int ec_full = ec_with(m, f);

  SubsetFamily g = f.without(z);
  CoeffTable a2 = coeff_a(m, g);
  CoeffTable b2 = coeff_b(m, g);
  Int ec_red = ec_with(m, g);

  RemovalDelta d;
  d.ec_delta = a.values[zi] * b.values[zi];
  if (ec_full - ec_red != d.ec_delta)
    throw std::logic_error("removal identity failed for ec");

  d.a_delta.sets = g.members();
  d.b_delta.sets = g.members();
  for (int gi = 0; gi < g.size(); ++gi) {
    Mask s = g.member(gi);
    int si = *f.index_of(s);
    Int da = a.values[zi] * f.mobius(zi, si);
    Int db = f.mobius(si, zi) * b.values[zi];
    if (a.values[si] - a2.values[gi] != da)
      throw std::logic_error("removal identity failed for a at " + to_string(s));
    if (b.values[si] - b2.values[gi] != db)
      throw std::logic_error("removal identity failed for b at " + to_string(s));
    d.a_delta.values.push_back(std::move(da));
    d.b_delta.values.push_back(std::move(db));
  }
  return d;
}

}  // namespace ecodim
