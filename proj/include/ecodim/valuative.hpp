#pragma once

#include <array>
#include <map>
#include <vector>

#include "ecodim/matroid.hpp"

namespace ecodim {

struct DimensionMismatch : Error {
  using Error::Error;
};
struct GroundSetMismatch : Error {
  using Error::Error;
};

// Sparse trivariate polynomial with exact integer coefficients.
class TriPoly {
 public:
  using Key = std::array<int, 3>;  // exponents of x, y, z

  void add(int dx, int dy, int dz, const Int& coeff);
  Int coeff(int dx, int dy, int dz) const;
  const std::map<Key, Int>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator-(const TriPoly& o) const;
  TriPoly operator*(const TriPoly& o) const;
  bool operator==(const TriPoly&) const = default;

  Int eval(const Int& x, const Int& y, const Int& z) const;

 private:
  std::map<Key, Int> terms_;  // no zero coefficients stored
};

// Sparse bivariate polynomial, same conventions.
class BiPoly {
 public:
  using Key = std::array<int, 2>;

  void add(int dx, int dy, const Int& coeff);
  Int coeff(int dx, int dy) const;
  const std::map<Key, Int>& terms() const { return terms_; }
  bool operator==(const BiPoly&) const = default;
  Int eval(const Int& x, const Int& y) const;

 private:
  std::map<Key, Int> terms_;
};

// s_M(x,y,z) = sum over S subseteq T of x^{#S-rk S} y^{k-rk T} z^{#T-#S}.
// Counting over all nested pairs is 3^n work; capped at n <= 20.
TriPoly s_poly(const Matroid& m);
TriPoly s_poly_serial(const Matroid& m);  // reference path

// t_M(x,y) = s_M(x-1, y-1, 0). Note this convention has x and y swapped
// relative to the common corank-nullity form; see README.
BiPoly tutte(const Matroid& m);

// Mixed derivative d/dx d/dy s_M evaluated at (1,1,-1): the sum over all
// terms of coeff * dx * dy * (-1)^dz. This is the Mobius form of the
// defining sum, so it always equals the expected codimension.
Int ec_from_s(const TriPoly& s);
Int ec_from_s(const Matroid& m);

// 0/1 indicator vectors of the bases.
std::vector<std::vector<int>> polytope_vertices(const Matroid& m);

// Dimension of the affine hull of the basis polytope, by exact elimination.
int polytope_dim(const Matroid& m);

struct SubdivisionFace {
  Matroid m;
  int dim = 0;  // asserted polytope dimension, re-checked
};
struct SubdivisionWitness {
  Matroid parent;
  std::vector<SubdivisionFace> internal_faces;
};

struct ValuationReport {
  Int euler_sum;          // must be 1
  bool spoly_identity;    // parent s equals the signed sum, coefficientwise
  bool ec_identity;       // same for the expected-codimension values
  Int parent_ec;
  Int signed_ec_sum;
  bool pass() const { return euler_sum == 1 && spoly_identity && ec_identity; }
};

// Verifies the signed inclusion-exclusion identity over the witness's
// internal faces. Throws GroundSetMismatch / DimensionMismatch when the
// witness is malformed (wrong ground set, vertex sets not nested, or an
// asserted dimension differing from the recomputed one).
ValuationReport check_valuation(const SubdivisionWitness& w);

}  // namespace ecodim
