#include "ecodim/valuative.hpp"

#include <algorithm>

#include "ecodim/ecodim.hpp"
#include "ecodim/kernels.hpp"

namespace ecodim {

void TriPoly::add(int dx, int dy, int dz, const Int& coeff) {
  if (coeff == 0) return;
  Key k{dx, dy, dz};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Int TriPoly::coeff(int dx, int dy, int dz) const {
  auto it = terms_.find(Key{dx, dy, dz});
  return it == terms_.end() ? Int(0) : it->second;
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
  TriPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k[0], k[1], k[2], c);
  return out;
}

TriPoly TriPoly::operator-(const TriPoly& o) const {
  TriPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k[0], k[1], k[2], -c);
  return out;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
  TriPoly out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      out.add(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
  return out;
}

Int TriPoly::eval(const Int& x, const Int& y, const Int& z) const {
  Int acc = 0;
  for (const auto& [k, c] : terms_) {
    Int term = c;
    for (int i = 0; i < k[0]; ++i) term *= x;
    for (int i = 0; i < k[1]; ++i) term *= y;
    for (int i = 0; i < k[2]; ++i) term *= z;
    acc += term;
  }
  return acc;
}

void BiPoly::add(int dx, int dy, const Int& coeff) {
  if (coeff == 0) return;
  Key k{dx, dy};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Int BiPoly::coeff(int dx, int dy) const {
  auto it = terms_.find(Key{dx, dy});
  return it == terms_.end() ? Int(0) : it->second;
}

Int BiPoly::eval(const Int& x, const Int& y) const {
  Int acc = 0;
  for (const auto& [k, c] : terms_) {
    Int term = c;
    for (int i = 0; i < k[0]; ++i) term *= x;
    for (int i = 0; i < k[1]; ++i) term *= y;
    acc += term;
  }
  return acc;
}

namespace {

constexpr int kSPolyMaxGround = 20;

TriPoly spoly_from_counts(const std::vector<std::uint64_t>& cube, int n) {
  TriPoly out;
  const int w = n + 1;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c) {
        std::uint64_t v = cube[(std::size_t(a) * w + b) * w + c];
        if (v) out.add(a, b, c, Int(static_cast<unsigned long>(v)));
      }
  return out;
}

}  // namespace

TriPoly s_poly(const Matroid& m) {
  if (m.n() > kSPolyMaxGround)
    throw SizeOverflow("nested-pair sum capped at n <= 20");
  return spoly_from_counts(kernels::nested_pair_counts(m.rank_table(), m.n()),
                           m.n());
}

TriPoly s_poly_serial(const Matroid& m) {
  if (m.n() > kSPolyMaxGround)
    throw SizeOverflow("nested-pair sum capped at n <= 20");
  return spoly_from_counts(
      kernels::nested_pair_counts_serial(m.rank_table(), m.n()), m.n());
}

BiPoly tutte(const Matroid& m) {
  // z = 0 collapses the pair sum to S = T; then shift both arguments.
  TriPoly s = s_poly(m);
  std::vector<std::vector<Int>> binom(m.n() + 1, std::vector<Int>(m.n() + 1, 0));
  for (int i = 0; i <= m.n(); ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  BiPoly out;
  for (const auto& [k, c] : s.terms()) {
    if (k[2] != 0) continue;
    // (x-1)^a (y-1)^b expanded.
    for (int i = 0; i <= k[0]; ++i)
      for (int j = 0; j <= k[1]; ++j) {
        Int term = c * binom[k[0]][i] * binom[k[1]][j];
        if ((k[0] - i + k[1] - j) % 2 == 1) term = -term;
        out.add(i, j, term);
      }
  }
  return out;
}

Int ec_from_s(const TriPoly& s) {
  // d/dx d/dy s at (1, 1, -1): each term contributes coeff * dx * dy with
  // sign (-1)^dz. Restricting to dx = dy = 1 would drop the contributions of
  // larger exponents and break the equality with ec (a rank-2 matroid with a
  // four-element parallel class is the smallest counterexample).
  Int acc = 0;
  for (const auto& [k, c] : s.terms()) {
    if (k[0] == 0 || k[1] == 0) continue;
    Int term = c * k[0] * k[1];
    if (k[2] % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Int ec_from_s(const Matroid& m) { return ec_from_s(s_poly(m)); }

std::vector<std::vector<int>> polytope_vertices(const Matroid& m) {
  std::vector<std::vector<int>> out;
  for (Mask b : m.bases()) {
    std::vector<int> v(m.n(), 0);
    for (int e = 1; e <= m.n(); ++e)
      if (has_element(b, e)) v[e - 1] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

int polytope_dim(const Matroid& m) {
  std::vector<Mask> bases = m.bases();
  if (bases.empty()) throw Error("matroid has no bases");
  // Rank of {v - v0} over the rationals; entries are -1/0/1, so exact
  // elimination over Rat is cheap.
  const int n = m.n();
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 1; i < bases.size(); ++i) {
    std::vector<Rat> row(n);
    for (int e = 1; e <= n; ++e)
      row[e - 1] = int(has_element(bases[i], e)) - int(has_element(bases[0], e));
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (int cc = col; cc < n; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

ValuationReport check_valuation(const SubdivisionWitness& w) {
  const int n = w.parent.n();
  std::vector<Mask> parent_bases = w.parent.bases();
  std::sort(parent_bases.begin(), parent_bases.end());
  const int parent_dim = polytope_dim(w.parent);

  for (const auto& face : w.internal_faces) {
    if (face.m.n() != n)
      throw GroundSetMismatch("face ground set differs from parent");
    for (Mask b : face.m.bases())
      if (!std::binary_search(parent_bases.begin(), parent_bases.end(), b))
        throw GroundSetMismatch("face vertex " + to_string(b) +
                                " is not a vertex of the parent");
    int d = polytope_dim(face.m);
    if (d != face.dim)
      throw DimensionMismatch("asserted dim " + std::to_string(face.dim) +
                              " but recomputed " + std::to_string(d));
  }

  ValuationReport rep;
  rep.euler_sum = 0;
  TriPoly signed_s;
  rep.signed_ec_sum = 0;
  for (const auto& face : w.internal_faces) {
    bool negative = (parent_dim - face.dim) % 2 != 0;
    rep.euler_sum += negative ? -1 : 1;
    TriPoly fs = s_poly(face.m);
    signed_s = negative ? signed_s - fs : signed_s + fs;
    Int fe = ec(face.m);
    if (negative)
      rep.signed_ec_sum -= fe;
    else
      rep.signed_ec_sum += fe;
  }
  rep.spoly_identity = signed_s == s_poly(w.parent);
  rep.parent_ec = ec(w.parent);
  rep.ec_identity = rep.signed_ec_sum == rep.parent_ec;
  return rep;
}

}  // namespace ecodim
