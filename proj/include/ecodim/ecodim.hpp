#pragma once

#include "ecodim/family.hpp"
#include "ecodim/matroid.hpp"

namespace ecodim {

// c(S) = #S - rk S.
inline int corank_excess(const Matroid& m, Mask s) { return m.corank_excess(s); }

// a(S) = c(S) - sum_{T in family, T proper subset of S} a(T).
CoeffTable coeff_a(const Matroid& m, const SubsetFamily& f);

// b(T) = sum_{S in family} (k - rk S) mu(T,S).
CoeffTable coeff_b(const Matroid& m, const SubsetFamily& f);

// sum_{S in family} (k - rk S) a(S).
Int ec_with(const Matroid& m, const SubsetFamily& f);

// All nonempty S with both M|S and M/S connected (ground set included; the
// empty contraction counts as connected). Precondition: m is connected.
SubsetFamily flacets(const Matroid& m);

// Canonical expected codimension (the power-set value of the defining
// recursion), computed fast: each connected component contributes its value
// over its flacet family, and every ordered pair of distinct components
// (i, j) adds the cross term k_i * (n_j - k_j). Equality with the plain
// power-set evaluation is a tested property.
Int ec(const Matroid& m);

// Effect of deleting member z from the family, both predicted by the
// closed-form identities and recomputed from scratch; throws std::logic_error
// if the two disagree (they never should).
//   ec_f - ec_{f-z}  = a_f(z) * b_f(z)
//   a_f(S) - a_{f-z}(S) = a_f(z) * mu_f(z, S)
//   b_f(S) - b_{f-z}(S) = mu_f(S, z) * b_f(z)
struct RemovalDelta {
  Int ec_delta;
  CoeffTable a_delta;  // over family minus z
  CoeffTable b_delta;
};
RemovalDelta removal_delta(const Matroid& m, const SubsetFamily& f, Mask z);

}  // namespace ecodim
