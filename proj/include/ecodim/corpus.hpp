#pragma once

#include <cstdint>
#include <vector>

#include "ecodim/matroid.hpp"
#include "ecodim/positroid.hpp"
#include "ecodim/valuative.hpp"

namespace ecodim {

// Rank-3 matroid on [8] with collinear triples 123, 345, 567, 781.
Matroid square_matroid();

// Rank-3 matroid on [9] with the nine collinear triples
// 123, 456, 789, 157, 168, 247, 269, 348, 359. Its variety's codimension is
// reported in the literature as 8, one less than its invariant value here.
Matroid pappus_matroid();
constexpr int kPappusReportedCodim = 8;

// A concrete rational 3x8 realization of the square matroid (vertices of a
// quadrilateral with one extra point on each side).
RealizationMatrix square_model_matrix();

// The bundled demonstration permutation 3,6,5,8,7,10 on [6].
AffinePermutation demo_affine_permutation();

// U(2,4) split along x1+x2 = 1 into two halves glued along a square face.
SubdivisionWitness delta24_split_witness();

struct Gf2CorpusStats {
  long matrices_enumerated = 0;
  long connected_distinct = 0;
};

// All connected matroids on [n] realizable over GF(2), n <= 6, enumerated
// exhaustively from column multisets of k x n binary matrices, k <= n
// (rank n on n >= 2 elements forces all-coloops, which is disconnected, so
// spanning multisets with k <= n-1 cover everything).
std::vector<Matroid> gf2_connected_corpus(int n, Gf2CorpusStats* stats = nullptr);

// Same enumeration without the connectivity filter (every GF(2)-realizable
// matroid on [n], the free matroid included).
std::vector<Matroid> gf2_full_corpus(int n, Gf2CorpusStats* stats = nullptr);

// Seeded random GF(2)-realizable matroid on n elements (column matroid of a
// random k x n binary matrix, k in [1, n-1]).
Matroid random_gf2_matroid(int n, std::uint64_t seed);
Matroid random_connected_gf2_matroid(int n, std::uint64_t seed);

}  // namespace ecodim
