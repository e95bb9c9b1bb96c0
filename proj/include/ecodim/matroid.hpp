#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecodim/subsets.hpp"

namespace ecodim {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

enum class Axiom {
  RankEmpty,       // rk(empty) = 0
  RankUnit,        // rk(F+x) - rk(F) in {0,1}
  RankExchange,    // rk F = rk(F+x) = rk(F+y)  =>  rk(F+x+y) = rk F
  BasesNonempty,
  BasesAntichain,
  BasesExchange,
};

const char* axiom_name(Axiom a);

// Thrown by constructors when the input fails a matroid axiom. Carries the
// witnessing subsets/elements (1-based, 0 where unused).
struct AxiomViolation : Error {
  Axiom axiom;
  Mask set_a = 0;
  Mask set_b = 0;
  int x = 0;
  int y = 0;
  AxiomViolation(Axiom a, Mask sa, Mask sb, int x_, int y_);
};

struct InvalidPresentation : Error {
  using Error::Error;
};

struct SizeOverflow : Error {
  using Error::Error;
};

/**
 * A matroid on {1,...,n}, stored as the full rank table over all 2^n
 * subsets. Values are immutable after construction; copies share the table.
 */
class Matroid {
 public:
  int n() const { return n_; }
  int rank() const { return k_; }
  Mask ground() const { return full_mask(n_); }
  int rank(Mask s) const { return (*table_)[s]; }
  const std::vector<std::uint8_t>& rank_table() const { return *table_; }

  int corank_excess(Mask s) const { return popcount(s) - rank(s); }  // c(S)

  Mask closure(Mask s) const;
  std::vector<Mask> flats() const;
  std::vector<Mask> circuits() const;
  Mask loops() const;
  Mask coloops() const;
  bool is_parallel(int x, int y) const;
  std::vector<Mask> bases() const;

  // Circuit-connectivity classes, listed by smallest element. Loops and
  // coloops land in singleton classes.
  std::vector<Mask> connected_components() const;

  // Connectivity with the conventions used throughout: the one-element loop
  // matroid is not connected (it is a pure direct summand), the one-element
  // coloop matroid is.
  bool connected() const;

  Matroid dual() const;

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && *table_ == *o.table_;
  }

  // Constructors live as free functions; this is the trusted path they use.
  static Matroid unchecked(int n, std::vector<std::uint8_t> table);

 private:
  Matroid(int n, int k, std::shared_ptr<const std::vector<std::uint8_t>> t)
      : n_(n), k_(k), table_(std::move(t)) {}
  int n_;
  int k_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

// Validating constructors.
Matroid from_rank_table(int n, const std::vector<std::uint8_t>& table);
Matroid from_bases(int n, const std::vector<Mask>& bases);

// Exact matrix over GF(p) (prime <= 2^31) or over the rationals (prime = 0).
// The matroid's rank function is column-span dimension, computed by exact
// elimination.
struct RealizationMatrix {
  long long prime = 0;  // 0 means rationals
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Rat>> entries;  // rows x cols
};
Matroid from_matrix(const RealizationMatrix& a);

// Rank-3 matroid from a list of lines (each with >= 3 points, two lines
// sharing at most one point): rk S = min(#S,3), except collinear sets of
// size >= 2 have rank 2.
struct LinePresentation {
  int n = 0;
  std::vector<Mask> lines;
};
Matroid rank3_from_lines(const LinePresentation& p);

Matroid uniform(int k, int n);

Matroid direct_sum(const Matroid& m, const Matroid& nn);
Matroid loop_extension(const Matroid& m);
Matroid coloop_extension(const Matroid& m);

// Minors relabel the surviving elements to 1..m preserving order;
// parent_element[i-1] is the original label of new element i.
struct Minor {
  Matroid m;
  std::vector<int> parent_element;
};
Minor restrict_to(const Matroid& m, Mask s);
Minor contract(const Matroid& m, Mask s);

// Connectivity of M|S and M/S computed on the parent's rank table, without
// materializing the minor. Conventions as in Matroid::connected(); for
// contraction_connected(m, ground) the empty matroid counts as connected.
bool restriction_connected(const Matroid& m, Mask s);
bool contraction_connected(const Matroid& m, Mask s);

}  // namespace ecodim
