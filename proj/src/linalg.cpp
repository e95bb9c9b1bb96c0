#include <cstdint>
#include <vector>

#include "ecodim/matroid.hpp"

namespace ecodim {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<long long>(__int128(r) * b % p);
    b = static_cast<long long>(__int128(b) * b % p);
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

// Rank of the selected columns by row reduction mod p.
int rank_mod_p(const std::vector<std::vector<long long>>& cols, Mask sel,
               int rows, long long p) {
  std::vector<std::vector<long long>> m;
  for (Mask t = sel; t; t &= t - 1)
    m.push_back(cols[std::countr_zero(t)]);
  int rank = 0;
  for (int r = 0; r < rows && rank < static_cast<int>(m.size()); ++r) {
    int piv = -1;
    for (std::size_t c = rank; c < m.size(); ++c)
      if (m[c][r] % p != 0) {
        piv = static_cast<int>(c);
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    long long inv = mod_inv(((m[rank][r] % p) + p) % p, p);
    for (std::size_t c = rank + 1; c < m.size(); ++c) {
      long long f = static_cast<long long>(__int128(m[c][r]) * inv % p);
      if (f == 0) continue;
      for (int i = r; i < rows; ++i) {
        m[c][i] = static_cast<long long>(
            ((__int128(m[c][i]) - __int128(f) * m[rank][i]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

int rank_rational(const std::vector<std::vector<Rat>>& cols, Mask sel,
                  int rows) {
  std::vector<std::vector<Rat>> m;
  for (Mask t = sel; t; t &= t - 1)
    m.push_back(cols[std::countr_zero(t)]);
  int rank = 0;
  for (int r = 0; r < rows && rank < static_cast<int>(m.size()); ++r) {
    int piv = -1;
    for (std::size_t c = rank; c < m.size(); ++c)
      if (m[c][r] != 0) {
        piv = static_cast<int>(c);
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t c = rank + 1; c < m.size(); ++c) {
      if (m[c][r] == 0) continue;
      Rat f = m[c][r] / m[rank][r];
      for (int i = r; i < rows; ++i) m[c][i] -= f * m[rank][i];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid from_matrix(const RealizationMatrix& a) {
  if (a.rows < 1 || a.cols < 1) throw Error("matrix must be nonempty");
  if (a.cols > max_ground_size())
    throw SizeOverflow("too many columns: " + std::to_string(a.cols));
  if (static_cast<int>(a.entries.size()) != a.rows)
    throw Error("matrix row count mismatch");
  for (const auto& row : a.entries)
    if (static_cast<int>(row.size()) != a.cols)
      throw Error("matrix column count mismatch");

  const int n = a.cols;
  std::vector<std::uint8_t> table(std::size_t{1} << n);

  if (a.prime != 0) {
    if (a.prime > (1LL << 31) || !is_prime(a.prime))
      throw Error("field characteristic must be a prime <= 2^31");
    const long long p = a.prime;
    std::vector<std::vector<long long>> cols(
        n, std::vector<long long>(a.rows, 0));
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < n; ++c) {
        const Rat& q = a.entries[r][c];
        long long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
        if (den == 0) throw Error("entry denominator vanishes mod p");
        long long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
        cols[c][r] = static_cast<long long>(__int128(num) * mod_inv(den, p) % p);
      }
    for (Mask s = 0; s <= full_mask(n); ++s)
      table[s] = static_cast<std::uint8_t>(rank_mod_p(cols, s, a.rows, p));
  } else {
    std::vector<std::vector<Rat>> cols(n, std::vector<Rat>(a.rows));
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < n; ++c) cols[c][r] = a.entries[r][c];
    for (Mask s = 0; s <= full_mask(n); ++s)
      table[s] = static_cast<std::uint8_t>(rank_rational(cols, s, a.rows));
  }
  return Matroid::unchecked(n, std::move(table));
}

}  // namespace ecodim
