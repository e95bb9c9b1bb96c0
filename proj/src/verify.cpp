#include "ecodim/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ecodim/ecodim.hpp"
#include "ecodim/kernels.hpp"
#include "ecodim/valuative.hpp"

namespace ecodim {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
}

// Random subset family on [n]: a handful of random masks, deduped.
SubsetFamily random_family(int n, std::mt19937_64& eng, bool with_ground) {
  int count = 3 + static_cast<int>(eng() % 10);
  std::vector<Mask> members;
  for (int i = 0; i < count; ++i)
    members.push_back(static_cast<Mask>(eng()) & full_mask(n));
  if (with_ground) members.push_back(full_mask(n));
  return SubsetFamily(std::move(members));
}

}  // namespace

SubsetFamily cyclic_interval_family(int n) {
  std::vector<Mask> members;
  for (int i = 1; i <= n; ++i)
    for (int d = 0; d <= n - 1; ++d)
      members.push_back(CyclicInterval{i, i + d}.mask(n));
  return SubsetFamily(std::move(members));
}

bool noncrossing_on_cycle(const std::vector<Mask>& classes, int n) {
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      // Walk the cycle restricted to the two classes and count label changes;
      // four or more cyclic alternations means they cross.
      int changes = 0;
      int prev = -1, first = -1;
      for (int e = 1; e <= n; ++e) {
        int label = has_element(classes[a], e)   ? 0
                    : has_element(classes[b], e) ? 1
                                                 : -1;
        if (label < 0) continue;
        if (first < 0) first = label;
        if (prev >= 0 && label != prev) ++changes;
        prev = label;
      }
      if (prev >= 0 && first >= 0 && prev != first) ++changes;
      if (changes >= 4) return false;
    }
  return true;
}

std::string interval_coeff_mismatch(const AffinePermutation& p,
                                    const Matroid& m) {
  const int n = p.n;
  SubsetFamily intervals = cyclic_interval_family(n);
  CoeffTable a = coeff_a(m, intervals);
  for (int i = 1; i <= n; ++i)
    for (int d = 0; d <= n - 2; ++d) {
      Mask im = CyclicInterval{i, i + d}.mask(n);
      Int expected = p.window[i - 1] == i + d ? 1 : 0;
      if (a.at(im) != expected) {
        std::ostringstream os;
        os << "interval coefficient at (" << i << "," << i + d << ") is "
           << a.at(im).get_str() << ", matrix entry is "
           << expected.get_str();
        return os.str();
      }
    }
  return {};
}

bool pivot_counting_identities(const AffinePermutation& p) {
  const int n = p.n;
  const int k = p.rank();
  long sum_card = 0, sum_d = 0;
  for (int i = 1; i <= n; ++i) {
    long j = p.window[i - 1];
    sum_card += j - i + 1;
    sum_d += ones_weakly_southwest(p, i, j);
  }
  return sum_card == static_cast<long>(n) * k + n &&
         sum_d == length(p) + n;
}

std::string check_positroid_identities(const AffinePermutation& p) {
  const int n = p.n;
  if (!p.valid()) return "window fails the bounded-permutation invariants";

  CyclicRankMatrix r = from_affine_permutation(p);
  if (!validate_rank_matrix(r)) return "derived rank matrix is invalid";
  AffinePermutation back = to_affine_permutation(r);
  if (!(back == p)) return "matrix -> permutation does not invert";

  Matroid m = positroid_from_interval_ranks(r);
  if (!is_positroid(m)) return "materialized matroid rejected by is_positroid";

  const long len = length(p);
  if (ec_positroid(p) != len) return "interval-family value differs from length";
  Int ec_power = ec_with(m, SubsetFamily::power_set(n));
  if (ec_power != len) return "power-set value differs from length";
  Int ec_intervals = ec_with(m, cyclic_interval_family(n));
  if (ec_intervals != len) return "cyclic-interval value differs from length";
  if (ec(m) != len) return "flacet-route value differs from length";

  if (std::string bad = interval_coeff_mismatch(p, m); !bad.empty()) return bad;
  if (!pivot_counting_identities(p)) return "pivot counting identities fail";

  if (!noncrossing_on_cycle(m.connected_components(), n))
    return "components are a crossing partition";
  for (Mask s = 1; s <= m.ground(); ++s)
    if (restriction_connected(m, s) && contraction_connected(m, s) &&
        !is_cyclic_interval(s, n))
      return "two-sided connected set " + to_string(s) + " is not an interval";

  // Essential bounds must regenerate the matroid.
  std::vector<std::pair<CyclicInterval, int>> bounds;
  for (const auto& e : essential_set(p))
    bounds.push_back({e.interval, e.rank_bound});
  try {
    if (!(positroid_from_interval_ranks(n, p.rank(), bounds) == m))
      return "essential bounds regenerate a different matroid";
  } catch (const Error& err) {
    return std::string("essential bounds fail to regenerate: ") + err.what();
  }
  return {};
}

SuiteResult verify_axioms(std::uint64_t seed) {
  SuiteResult res;
  res.suite = "axioms";

  // Crafted violations, one per rank axiom.
  {
    bool threw = false;
    try {
      from_rank_table(1, {1, 1});
    } catch (const AxiomViolation& v) {
      threw = v.axiom == Axiom::RankEmpty;
    }
    res.check(threw, 1, "rk(empty)=1 not rejected");
    res.note("rejects rk(empty) != 0");
  }
  {
    bool threw = false;
    try {
      from_rank_table(2, {0, 1, 0, 2});  // rk{2}=0 but rk{1,2}=2
    } catch (const AxiomViolation& v) {
      threw = v.axiom == Axiom::RankUnit;
    }
    res.check(threw, 1, "unit-increase violation not rejected");
    res.note("rejects a unit-increase violation with witness");
  }
  {
    bool threw = false;
    try {
      from_rank_table(2, {0, 0, 0, 1});  // exchange fails at F=empty
    } catch (const AxiomViolation& v) {
      threw = v.axiom == Axiom::RankExchange;
    }
    res.check(threw, 1, "exchange violation not rejected");
    res.note("rejects an exchange violation with witness");
  }

  // Every constructed matroid passes the exhaustive axiom scan.
  std::vector<Matroid> pool = {square_matroid(), pappus_matroid(),
                               uniform(0, 1),    uniform(1, 1),
                               uniform(2, 4),    uniform(3, 7)};
  std::mt19937_64 eng(seed);
  for (int i = 0; i < 40; ++i)
    pool.push_back(random_gf2_matroid(4 + i % 5, mix(seed, i)));
  std::size_t base_count = pool.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    pool.push_back(pool[i].dual());
    Mask s = static_cast<Mask>(eng()) & pool[i].ground();
    if (s) pool.push_back(restrict_to(pool[i], s).m);
    if (popcount(s) < pool[i].n()) pool.push_back(contract(pool[i], s).m);
  }
  for (const auto& m : pool) {
    auto w = kernels::check_rank_axioms(m.rank_table(), m.n());
    res.check(!w, 1, "constructed matroid fails an axiom");
  }
  res.note("axiom scan over " + std::to_string(pool.size()) +
           " constructed matroids (duals and minors included)");

  // Submodularity on random pairs, as a consequence of the axioms; the
  // larger-than-exhaustive sizes get 10^4 pairs each.
  long submodular_checked = 0;
  std::vector<Matroid> big = {uniform(8, 17), uniform(8, 17).dual(),
                              direct_sum(uniform(5, 9), uniform(3, 8))};
  for (const auto& m : pool) {
    for (int t = 0; t < 250; ++t) {
      Mask a = static_cast<Mask>(eng()) & m.ground();
      Mask b = static_cast<Mask>(eng()) & m.ground();
      ++submodular_checked;
      res.check(m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b), 1,
                "submodularity fails at " + to_string(a) + "," + to_string(b));
    }
  }
  for (const auto& m : big) {
    for (int t = 0; t < 10000; ++t) {
      Mask a = static_cast<Mask>(eng()) & m.ground();
      Mask b = static_cast<Mask>(eng()) & m.ground();
      ++submodular_checked;
      res.check(m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b), 1,
                "submodularity fails at " + to_string(a) + "," + to_string(b));
    }
  }
  res.note("submodularity on " + std::to_string(submodular_checked) +
           " random pairs (including n = 17 instances)");

  // Basis-axiom rejections.
  {
    bool threw = false;
    try {
      from_bases(2, {element_bit(1), element_bit(1) | element_bit(2)});
    } catch (const AxiomViolation& v) {
      threw = v.axiom == Axiom::BasesAntichain;
    }
    res.check(threw, 1, "antichain violation not rejected");
  }
  {
    bool threw = false;
    try {
      from_bases(4, {element_bit(1) | element_bit(2),
                     element_bit(3) | element_bit(4)});
    } catch (const AxiomViolation& v) {
      threw = v.axiom == Axiom::BasesExchange;
    }
    res.check(threw, 1, "basis-exchange violation not rejected");
    res.note("rejects bases {12},{34} (exchange) and {1},{12} (antichain)");
  }

  // from_bases(bases(M)) reproduces M on random GF(2) matroids.
  for (int i = 0; i < 100; ++i) {
    Matroid m = random_gf2_matroid(3 + i % 5, mix(seed, 1000 + i));
    res.check(from_bases(m.n(), m.bases()) == m, 1,
              "bases roundtrip changed the matroid");
  }
  res.note("bases -> from_bases roundtrip on 100 random GF(2) matroids");

  // Line presentations with a repeated point pair are rejected.
  {
    bool threw = false;
    try {
      LinePresentation p;
      p.n = 5;
      p.lines = {element_bit(1) | element_bit(2) | element_bit(3),
                 element_bit(1) | element_bit(2) | element_bit(4)};
      rank3_from_lines(p);
    } catch (const InvalidPresentation&) {
      threw = true;
    }
    res.check(threw, 1, "two lines through two common points not rejected");
  }
  return res;
}

SuiteResult verify_duality(std::uint64_t seed, int trials) {
  SuiteResult res;
  res.suite = "duality";
  std::mt19937_64 eng(seed);

  long dualization = 0, removal = 0, vanishing_sets = 0, sums = 0, algebra = 0;
  for (int t = 0; t < trials; ++t) {
    int n = 4 + static_cast<int>(eng() % 4);  // 4..7
    Matroid m = random_gf2_matroid(n, mix(seed, t));
    Matroid md = m.dual();

    // Dual rank formula and involution.
    res.check(md.dual() == m, 1, "dual is not an involution");
    bool formula = true;
    for (Mask s = 0; s <= m.ground(); ++s)
      formula &= md.rank(s) ==
                 popcount(s) - m.rank() + m.rank(m.ground() & ~s);
    res.check(formula, 1, "dual rank formula fails");
    ++algebra;

    // Dualization of the coefficient system over a random family.
    SubsetFamily f = random_family(n, eng, t % 2 == 0);
    SubsetFamily fc = f.complements(n);
    res.check(ec_with(m, f) == ec_with(md, fc), 1,
              "ec differs between a family and its complement family in the "
              "dual");
    CoeffTable a = coeff_a(m, f);
    CoeffTable b_dual = coeff_b(md, fc);
    bool coeffs = true;
    for (int i = 0; i < f.size(); ++i)
      coeffs &= a.values[i] == b_dual.at(m.ground() & ~f.member(i));
    res.check(coeffs, 1, "a(S) != b'(E-S) in the dual");
    ++dualization;

    // Removal identities (removal_delta recomputes and throws on mismatch).
    if (f.size() > 0) {
      Mask z = f.member(static_cast<int>(eng() % f.size()));
      try {
        removal_delta(m, f, z);
      } catch (const std::logic_error& err) {
        res.fail(err.what());
      }
      ++removal;
      res.checked += 3;  // three identities per draw
    }

    // Disconnected sets have vanishing a over the power set.
    if (n <= 7 || t % 4 == 0) {
      CoeffTable a_full = coeff_a(m, SubsetFamily::power_set(n));
      for (Mask s = 1; s <= m.ground(); ++s) {
        if (popcount(s) < 2 || restriction_connected(m, s)) continue;
        ++vanishing_sets;
        res.check(a_full.at(s) == 0, 1,
                  "a(" + to_string(s) + ") != 0 for a disconnected set");
        if (!res.pass) break;
      }
    }

    // Direct sums: the power-set value decomposes into the summands' values
    // plus the rank-corank cross terms (k, corank of one side against the
    // other). Verified both through ec() and against a direct power-set
    // evaluation of the sum.
    Matroid m2 = random_gf2_matroid(3 + static_cast<int>(eng() % 3),
                                    mix(seed, 7777 + t));
    const long cross =
        static_cast<long>(m.rank()) * (m2.n() - m2.rank()) +
        static_cast<long>(m2.rank()) * (m.n() - m.rank());
    Matroid ds = direct_sum(m, m2);
    res.check(ec(ds) == ec(m) + ec(m2) + cross, 1,
              "direct-sum decomposition with cross terms fails");
    if (ds.n() <= 9)
      res.check(ec(ds) == ec_with(ds, SubsetFamily::power_set(ds.n())), 1,
                "ec differs from the power-set value on a direct sum");
    res.check(ec(loop_extension(m)) == ec(m) + m.rank(), 1,
              "loop extension must add k to ec");
    res.check(ec(coloop_extension(m)) == ec(m) + (m.n() - m.rank()), 1,
              "coloop extension must add the corank to ec");
    ++sums;

    // Minor-duality: (M|S)* = M*/(E-S).
    Mask s = static_cast<Mask>(eng()) & m.ground();
    if (s) {
      res.check(restrict_to(m, s).m.dual() == contract(md, m.ground() & ~s).m,
                1, "(M|S)* != M*/(E-S)");
      res.check(direct_sum(m, m2).dual() == direct_sum(md, m2.dual()), 1,
                "(A+B)* != A*+B*");
    }
  }
  res.note("dual algebra on " + std::to_string(algebra) + " random matroids");
  res.note("dualization identities on " + std::to_string(dualization) +
           " (matroid, family) pairs");
  res.note("removal identities on " + std::to_string(removal) +
           " (matroid, family, member) triples");
  res.note("vanishing a on " + std::to_string(vanishing_sets) +
           " disconnected sets");
  res.note("direct-sum decomposition (with cross terms) plus loop/coloop "
           "extensions on " + std::to_string(sums) + " draws");
  return res;
}

SuiteResult verify_flacets(int exhaustive_n, int random_n7_cases,
                           std::uint64_t seed) {
  SuiteResult res;
  res.suite = "flacets";

  Gf2CorpusStats stats;
  std::vector<Matroid> corpus = gf2_connected_corpus(exhaustive_n, &stats);
  res.note("enumerated " + std::to_string(stats.matrices_enumerated) +
           " column multisets over GF(2), k <= " + std::to_string(exhaustive_n) +
           " (rank " + std::to_string(exhaustive_n) +
           " is all-coloops, hence disconnected)");
  res.note("distinct connected matroids on [" + std::to_string(exhaustive_n) +
           "]: " + std::to_string(stats.connected_distinct));

  std::vector<std::string> failures(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Matroid& m = corpus[i];
    Int full = ec_with(m, SubsetFamily::power_set(m.n()));
    Int flac = ec_with(m, flacets(m));
    if (full != flac)
      failures[i] = "power set gives " + full.get_str() + ", flacets give " +
                    flac.get_str();
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    res.check(failures[i].empty(), 1, failures[i]);
  }

  for (int t = 0; t < random_n7_cases; ++t) {
    Matroid m = random_connected_gf2_matroid(7, mix(seed, t));
    Int full = ec_with(m, SubsetFamily::power_set(7));
    Int flac = ec_with(m, flacets(m));
    res.check(full == flac, 1,
              "n=7 case " + std::to_string(t) + ": power set gives " +
                  full.get_str() + ", flacets give " + flac.get_str());
  }
  res.note("flacet family matches the power set exactly on all of the above "
           "plus " + std::to_string(random_n7_cases) + " random n=7 cases");
  return res;
}

SuiteResult verify_positroids(int exhaustive_n, int samples_per_n,
                              std::uint64_t seed) {
  SuiteResult res;
  res.suite = "positroids";

  for (int n = 1; n <= exhaustive_n; ++n) {
    std::vector<AffinePermutation> all = all_bounded_affine_permutations(n);
    std::vector<std::string> failures(all.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < all.size(); ++i)
      failures[i] = check_positroid_identities(all[i]);
    for (std::size_t i = 0; i < all.size(); ++i)
      res.check(failures[i].empty(), 1, failures[i]);
    res.note("n=" + std::to_string(n) + ": " + std::to_string(all.size()) +
             " bounded affine permutations, exhaustive");
  }

  for (int n = 6; n <= 8; ++n) {
    std::vector<std::string> failures(samples_per_n);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < samples_per_n; ++t) {
      AffinePermutation p =
          random_bounded_affine_permutation(n, mix(seed, n * 100000 + t));
      failures[t] = check_positroid_identities(p);
    }
    for (int t = 0; t < samples_per_n; ++t)
      res.check(failures[t].empty(), 1,
                "n=" + std::to_string(n) + " sample " + std::to_string(t) +
                    ": " + failures[t]);
    res.note("n=" + std::to_string(n) + ": " + std::to_string(samples_per_n) +
             " seeded random permutations");
  }

  // Minors of positroids are positroids (cyclic order inherited).
  std::mt19937_64 eng(seed);
  int minor_checks = 0;
  for (int t = 0; t < 500; ++t) {
    int n = 4 + static_cast<int>(eng() % 5);  // 4..8
    AffinePermutation p =
        random_bounded_affine_permutation(n, mix(seed, 900000 + t));
    Matroid m = positroid_from_interval_ranks(from_affine_permutation(p));
    Mask s = static_cast<Mask>(eng()) & m.ground();
    if (s == 0 || s == m.ground()) continue;
    res.check(is_positroid(restrict_to(m, s).m), 1,
              "restriction of a positroid rejected by is_positroid");
    res.check(is_positroid(contract(m, s).m), 1,
              "contraction of a positroid rejected by is_positroid");
    ++minor_checks;
  }
  res.note("restriction/contraction closure on " +
           std::to_string(minor_checks) + " random (positroid, subset) pairs");

  // The standard non-example: two crossing parallel pairs.
  {
    std::vector<Mask> bases;
    for (int a : {1, 3})
      for (int b : {2, 4}) bases.push_back(element_bit(a) | element_bit(b));
    Matroid crossing = from_bases(4, bases);
    res.check(crossing.rank(element_bit(1) | element_bit(3)) == 1 &&
                  crossing.rank(element_bit(2) | element_bit(4)) == 1,
              1, "crossing-pairs matroid misbuilt");
    res.check(!is_positroid(crossing), 1,
              "rk{1,3}=rk{2,4}=1 on [4] wrongly accepted as a positroid");
    res.note("rejects the crossing parallel-pairs matroid on [4]");
  }
  res.check(is_positroid(square_matroid()), 1,
            "square matroid should be a positroid in its given labeling");
  res.check(!is_positroid(pappus_matroid()), 1,
            "pappus matroid accepted as a positroid");
  res.check(is_positroid(uniform(2, 4)) && is_positroid(uniform(3, 7)), 1,
            "uniform matroids should be positroids");
  return res;
}

SuiteResult verify_svals(int exhaustive_n, int random_n7_cases,
                         std::uint64_t seed) {
  SuiteResult res;
  res.suite = "svals";

  // Every GF(2)-realizable matroid at this size, disconnected ones included.
  std::vector<Matroid> pool = gf2_full_corpus(exhaustive_n, nullptr);
  pool.push_back(uniform(0, 1));
  pool.push_back(uniform(1, 1));
  pool.push_back(direct_sum(uniform(1, 1), uniform(0, 1)));
  pool.push_back(square_matroid());
  pool.push_back(pappus_matroid());

  std::vector<std::string> failures(pool.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Matroid& m = pool[i];
    TriPoly s = s_poly(m);
    if (ec_from_s(s) != ec(m)) {
      failures[i] = "mixed derivative disagrees with ec";
      continue;
    }
    // Duality swap of the first two variables.
    TriPoly sd = s_poly(m.dual());
    TriPoly swapped;
    for (const auto& [k, c] : s.terms()) swapped.add(k[1], k[0], k[2], c);
    if (!(sd == swapped)) {
      failures[i] = "dual s-polynomial is not the x<->y swap";
      continue;
    }
    BiPoly t = tutte(m);
    for (const auto& [k, c] : t.terms())
      if (c < 0) failures[i] = "negative coefficient in the rank generating "
                               "polynomial";
    if (t.eval(1, 1) != static_cast<long>(m.bases().size()))
      failures[i] = "evaluation at (1,1) is not the number of bases";
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    res.check(failures[i].empty(), 1, failures[i]);
  res.note("mixed-derivative, duality-swap and rank-polynomial checks on " +
           std::to_string(pool.size()) + " matroids (every GF(2)-realizable "
           "matroid on [" + std::to_string(exhaustive_n) + "] plus "
           "reference cases)");

  for (int t = 0; t < random_n7_cases; ++t) {
    Matroid m = random_gf2_matroid(7, mix(seed, 31337 + t));
    res.check(ec_from_s(m) == ec(m), 1,
              "n=7 case " + std::to_string(t) +
                  ": mixed derivative disagrees with ec");
  }
  res.note(std::to_string(random_n7_cases) +
           " random n=7 mixed-derivative cross-checks");

  std::mt19937_64 eng(seed);
  for (int t = 0; t < 100; ++t) {
    Matroid a = random_gf2_matroid(3 + static_cast<int>(eng() % 4),
                                   mix(seed, 5000 + t));
    Matroid b = random_gf2_matroid(3 + static_cast<int>(eng() % 4),
                                   mix(seed, 6000 + t));
    res.check(s_poly(direct_sum(a, b)) == s_poly(a) * s_poly(b), 1,
              "s is not multiplicative over a direct sum");
  }
  res.note("multiplicativity over 100 random direct sums");
  return res;
}

SuiteResult verify_valuation(const SubdivisionWitness& w) {
  SuiteResult res;
  res.suite = "valuation";
  try {
    ValuationReport rep = check_valuation(w);
    res.check(rep.euler_sum == 1, 1,
              "signed face count is " + rep.euler_sum.get_str() + ", not 1");
    res.check(rep.spoly_identity, 1,
              "s-polynomial identity fails coefficientwise");
    res.check(rep.ec_identity, 1,
              "ec identity fails: parent " + rep.parent_ec.get_str() +
                  ", signed sum " + rep.signed_ec_sum.get_str());
    res.note("witness with " + std::to_string(w.internal_faces.size()) +
             " internal faces: signed face count " + rep.euler_sum.get_str());
  } catch (const Error& e) {
    res.fail(e.what());
  }

  // The trivial witness (the parent is its only internal face).
  try {
    SubdivisionWitness trivial{w.parent, {{w.parent, polytope_dim(w.parent)}}};
    ValuationReport rep = check_valuation(trivial);
    res.check(rep.pass(), 1, "trivial witness fails");
    res.note("trivial witness (parent only) passes");
  } catch (const Error& e) {
    res.fail(e.what());
  }
  return res;
}

}  // namespace ecodim
