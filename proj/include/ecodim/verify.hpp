#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecodim/corpus.hpp"
#include "ecodim/family.hpp"
#include "ecodim/positroid.hpp"

namespace ecodim {

struct SuiteResult {
  std::string suite;
  bool pass = true;
  long checked = 0;
  std::vector<std::string> lines;       // one per sub-check
  std::string counterexample;           // first failure, if any

  void note(const std::string& line) { lines.push_back(line); }
  void fail(const std::string& why) {
    pass = false;
    if (counterexample.empty()) counterexample = why;
  }
  void check(bool ok, long weight, const std::string& why_if_bad) {
    checked += weight;
    if (!ok) fail(why_if_bad);
  }
};

// Suite names accepted by the CLI: axioms, duality, flacets, positroids,
// svals, valuation.
SuiteResult verify_axioms(std::uint64_t seed);
SuiteResult verify_duality(std::uint64_t seed, int trials);
SuiteResult verify_flacets(int exhaustive_n, int random_n7_cases,
                           std::uint64_t seed);
SuiteResult verify_positroids(int exhaustive_n, int samples_per_n,
                              std::uint64_t seed);
SuiteResult verify_svals(int exhaustive_n, int random_n7_cases,
                         std::uint64_t seed);
SuiteResult verify_valuation(const SubdivisionWitness& w);

// Helpers shared by the suites and the acceptance tests.
SubsetFamily cyclic_interval_family(int n);
bool noncrossing_on_cycle(const std::vector<Mask>& classes, int n);

// Entrywise comparison of the interval coefficients with the permutation
// matrix (proper intervals only); empty string when they agree.
std::string interval_coeff_mismatch(const AffinePermutation& p,
                                    const Matroid& m);

// The two counting identities behind the length formula, summed over all n
// pivot positions: sum #I = nk + n and sum d_I = l(pi) + n.
bool pivot_counting_identities(const AffinePermutation& p);

// Full battery run on one bounded affine permutation; empty string on
// success, otherwise a description of the first failing check.
std::string check_positroid_identities(const AffinePermutation& p);

}  // namespace ecodim
