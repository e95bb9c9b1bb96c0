#include "ecodim/matroid.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "ecodim/kernels.hpp"

namespace ecodim {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::RankEmpty: return "rank-of-empty-set";
    case Axiom::RankUnit: return "rank-unit-increase";
    case Axiom::RankExchange: return "rank-exchange";
    case Axiom::BasesNonempty: return "bases-nonempty";
    case Axiom::BasesAntichain: return "bases-antichain";
    case Axiom::BasesExchange: return "bases-exchange";
  }
  return "?";
}

namespace {

std::string violation_message(Axiom a, Mask sa, Mask sb, int x, int y) {
  std::ostringstream os;
  os << "axiom violation [" << axiom_name(a) << "]";
  if (sa || a != Axiom::RankEmpty) os << " A=" << to_string(sa);
  if (sb) os << " B=" << to_string(sb);
  if (x) os << " x=" << x;
  if (y) os << " y=" << y;
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom a, Mask sa, Mask sb, int x_, int y_)
    : Error(violation_message(a, sa, sb, x_, y_)),
      axiom(a),
      set_a(sa),
      set_b(sb),
      x(x_),
      y(y_) {}

Matroid Matroid::unchecked(int n, std::vector<std::uint8_t> table) {
  int k = table[full_mask(n)];
  return Matroid(n, k,
                 std::make_shared<const std::vector<std::uint8_t>>(
                     std::move(table)));
}

Mask Matroid::closure(Mask s) const {
  Mask out = s;
  int r = rank(s);
  for (int x = 1; x <= n_; ++x)
    if (!has_element(s, x) && rank(s | element_bit(x)) == r)
      out |= element_bit(x);
  return out;
}

std::vector<Mask> Matroid::flats() const {
  std::vector<Mask> out;
  for (Mask s = 0; s <= ground(); ++s)
    if (closure(s) == s) out.push_back(s);
  return out;
}

std::vector<Mask> Matroid::circuits() const {
  std::vector<Mask> out;
  for (Mask d = 1; d <= ground(); ++d) {
    int c = popcount(d);
    if (rank(d) >= c) continue;
    bool minimal = true;
    for (Mask m = d; m && minimal; m &= m - 1) {
      Mask without = d & ~(m & (~m + 1));
      if (rank(without) < popcount(without)) minimal = false;
    }
    if (minimal) out.push_back(d);
  }
  return out;
}

Mask Matroid::loops() const {
  Mask out = 0;
  for (int x = 1; x <= n_; ++x)
    if (rank(element_bit(x)) == 0) out |= element_bit(x);
  return out;
}

Mask Matroid::coloops() const {
  Mask out = 0;
  for (int x = 1; x <= n_; ++x)
    if (rank(ground() & ~element_bit(x)) == k_ - 1) out |= element_bit(x);
  return out;
}

bool Matroid::is_parallel(int x, int y) const {
  if (x == y) return false;
  return rank(element_bit(x)) == 1 && rank(element_bit(y)) == 1 &&
         rank(element_bit(x) | element_bit(y)) == 1;
}

std::vector<Mask> Matroid::bases() const {
  std::vector<Mask> out;
  for (Mask s = 0; s <= ground(); ++s)
    if (popcount(s) == k_ && rank(s) == k_) out.push_back(s);
  return out;
}

std::vector<Mask> Matroid::connected_components() const {
  std::vector<Mask> comp = kernels::component_meet(*table_, n_);
  std::vector<Mask> out;
  Mask seen = 0;
  for (int x = 1; x <= n_; ++x) {
    if (has_element(seen, x)) continue;
    out.push_back(comp[x - 1]);
    seen |= comp[x - 1];
  }
  return out;
}

bool Matroid::connected() const { return restriction_connected(*this, ground()); }

Matroid Matroid::dual() const {
  std::vector<std::uint8_t> t(std::size_t{1} << n_);
  const Mask e = ground();
  for (Mask s = 0; s <= e; ++s)
    t[s] = static_cast<std::uint8_t>(popcount(s) - k_ + rank(e & ~s));
  return unchecked(n_, std::move(t));
}

Matroid from_rank_table(int n, const std::vector<std::uint8_t>& table) {
  if (n < 1 || n > max_ground_size())
    throw SizeOverflow("ground-set size out of range: " + std::to_string(n));
  if (table.size() != (std::size_t{1} << n))
    throw Error("rank table must have 2^n entries");
  if (auto w = kernels::check_rank_axioms(table, n))
    throw AxiomViolation(w->axiom, w->f, 0, w->x, w->y);
  return Matroid::unchecked(n, table);
}

Matroid from_bases(int n, const std::vector<Mask>& bases_in) {
  if (n < 1 || n > max_ground_size())
    throw SizeOverflow("ground-set size out of range: " + std::to_string(n));
  if (bases_in.empty()) throw AxiomViolation(Axiom::BasesNonempty, 0, 0, 0, 0);
  std::vector<Mask> bs = bases_in;
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  for (Mask b : bs)
    if (!subset_of(b, full_mask(n))) throw Error("basis outside ground set");
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (i != j && subset_of(bs[i], bs[j]))
        throw AxiomViolation(Axiom::BasesAntichain, bs[i], bs[j], 0, 0);
  std::unordered_set<Mask> set(bs.begin(), bs.end());
  for (Mask b : bs)
    for (Mask b2 : bs) {
      for (Mask xm = b & ~b2; xm; xm &= xm - 1) {
        int x = std::countr_zero(xm) + 1;
        bool ok = false;
        for (Mask ym = b2 & ~b; ym && !ok; ym &= ym - 1) {
          int y = std::countr_zero(ym) + 1;
          ok = set.count((b & ~element_bit(x)) | element_bit(y)) > 0;
        }
        if (!ok) throw AxiomViolation(Axiom::BasesExchange, b, b2, x, 0);
      }
    }
  return Matroid::unchecked(n, kernels::rank_from_bases(n, bs));
}

Matroid rank3_from_lines(const LinePresentation& p) {
  if (p.n < 3 || p.n > max_ground_size())
    throw SizeOverflow("ground-set size out of range: " + std::to_string(p.n));
  for (Mask l : p.lines) {
    if (!subset_of(l, full_mask(p.n)))
      throw InvalidPresentation("line outside ground set");
    if (popcount(l) < 3)
      throw InvalidPresentation("line with fewer than 3 points: " + to_string(l));
  }
  for (std::size_t i = 0; i < p.lines.size(); ++i)
    for (std::size_t j = i + 1; j < p.lines.size(); ++j)
      if (popcount(p.lines[i] & p.lines[j]) > 1)
        throw InvalidPresentation("lines " + to_string(p.lines[i]) + " and " +
                                  to_string(p.lines[j]) +
                                  " share two or more points");
  std::vector<std::uint8_t> t(std::size_t{1} << p.n);
  for (Mask s = 0; s <= full_mask(p.n); ++s) {
    int pc = popcount(s);
    int r = pc < 3 ? pc : 3;
    if (pc >= 2)
      for (Mask l : p.lines)
        if (subset_of(s, l)) {
          r = 2;
          break;
        }
    t[s] = static_cast<std::uint8_t>(r);
  }
  return Matroid::unchecked(p.n, std::move(t));
}

Matroid uniform(int k, int n) {
  if (k > n) throw Error("uniform: k > n");
  if (n < 1 || n > max_ground_size())
    throw SizeOverflow("ground-set size out of range: " + std::to_string(n));
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (Mask s = 0; s <= full_mask(n); ++s)
    t[s] = static_cast<std::uint8_t>(std::min(popcount(s), k));
  return Matroid::unchecked(n, std::move(t));
}

Matroid direct_sum(const Matroid& m, const Matroid& nn) {
  int n = m.n() + nn.n();
  if (n > max_ground_size())
    throw SizeOverflow("direct sum exceeds ground-set cap");
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  const Mask f1 = m.ground();
  for (Mask s = 0; s <= full_mask(n); ++s)
    t[s] = static_cast<std::uint8_t>(m.rank(s & f1) + nn.rank(s >> m.n()));
  return Matroid::unchecked(n, std::move(t));
}

Matroid loop_extension(const Matroid& m) { return direct_sum(m, uniform(0, 1)); }
Matroid coloop_extension(const Matroid& m) {
  return direct_sum(m, uniform(1, 1));
}

namespace {

std::vector<int> label_map(Mask s) { return elements_of(s); }

Mask expand(Mask packed, const std::vector<int>& labels) {
  Mask out = 0;
  while (packed) {
    int b = std::countr_zero(packed);
    out |= element_bit(labels[b]);
    packed &= packed - 1;
  }
  return out;
}

}  // namespace

Minor restrict_to(const Matroid& m, Mask s) {
  auto labels = label_map(s);
  int nm = static_cast<int>(labels.size());
  std::vector<std::uint8_t> t(std::size_t{1} << nm);
  for (Mask q = 0; q <= full_mask(nm); ++q)
    t[q] = static_cast<std::uint8_t>(m.rank(expand(q, labels)));
  return Minor{Matroid::unchecked(nm, std::move(t)), labels};
}

Minor contract(const Matroid& m, Mask s) {
  Mask rest = m.ground() & ~s;
  auto labels = label_map(rest);
  int nm = static_cast<int>(labels.size());
  int rs = m.rank(s);
  std::vector<std::uint8_t> t(std::size_t{1} << nm);
  for (Mask q = 0; q <= full_mask(nm); ++q)
    t[q] = static_cast<std::uint8_t>(m.rank(expand(q, labels) | s) - rs);
  return Minor{Matroid::unchecked(nm, std::move(t)), labels};
}

bool restriction_connected(const Matroid& m, Mask s) {
  if (s == 0) return false;
  if (popcount(s) == 1) return m.rank(s) == 1;
  const int rs = m.rank(s);
  for (Mask a = (s - 1) & s; a; a = (a - 1) & s)
    if (m.rank(a) + m.rank(s & ~a) == rs) return false;
  return true;
}

bool contraction_connected(const Matroid& m, Mask s) {
  const Mask t = m.ground() & ~s;
  if (t == 0) return true;  // empty contraction
  const int rs = m.rank(s);
  const int total = m.rank() - rs;
  if (popcount(t) == 1) return total == 1;
  for (Mask a = (t - 1) & t; a; a = (a - 1) & t)
    if ((m.rank(a | s) - rs) + (m.rank((t & ~a) | s) - rs) == total)
      return false;
  return true;
}

}  // namespace ecodim
