// Command-line front end: parse matroid/permutation files, run the analyses,
// emit text or JSON reports, and drive the verification suites.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "ecodim/corpus.hpp"
#include "ecodim/ecodim.hpp"
#include "ecodim/io_json.hpp"
#include "ecodim/positroid.hpp"
#include "ecodim/valuative.hpp"
#include "ecodim/verify.hpp"

namespace {

using namespace ecodim;

constexpr int kExitInvariantViolation = 1;
constexpr int kExitParseError = 2;
constexpr int kExitAxiomViolation = 3;

Matroid load_matroid(const std::string& path) {
  return matroid_from_json(load_json_file(path));
}

SubsetFamily family_from_flag(const Matroid& m, const std::string& flag) {
  if (flag == "powerset") return SubsetFamily::power_set(m.n());
  if (flag == "flacets") {
    if (!m.connected())
      throw Error("flacet family requested for a disconnected matroid; "
                  "use `ec` which decomposes first");
    return flacets(m);
  }
  if (flag.rfind("file:", 0) == 0)
    return family_from_json(load_json_file(flag.substr(5)), m.n());
  throw ParseError("unknown family flag: " + flag +
                   " (expected powerset|flacets|file:<path>)");
}

Json analysis_json(const Matroid& m, const std::string& family_flag) {
  Json out;
  out["n"] = m.n();
  out["k"] = m.rank();
  Json comps = Json::array();
  for (Mask c : m.connected_components()) {
    Json jc = Json::array();
    for (int e : elements_of(c)) jc.push_back(e);
    comps.push_back(std::move(jc));
  }
  out["components"] = std::move(comps);
  Json loops = Json::array(), coloops = Json::array();
  for (int e : elements_of(m.loops())) loops.push_back(e);
  for (int e : elements_of(m.coloops())) coloops.push_back(e);
  out["loops"] = std::move(loops);
  out["coloops"] = std::move(coloops);

  Int e = ec(m);
  out["ec"] = int_to_json(e);
  out["family"] = family_flag;

  bool pos = is_positroid(m);
  out["positroid"] = pos;
  if (pos) {
    AffinePermutation p = to_affine_permutation(cyclic_rank_matrix(m));
    out["affine_permutation"] = permutation_to_json(p);
    out["length"] = static_cast<long>(length(p));
    out["ec_equals_length"] = Int(length(p)) == e;
  }

  if (m.n() <= 12) {
    TriPoly s = s_poly(m);
    Json digest;
    digest["terms"] = static_cast<long>(s.term_count());
    digest["ec_mixed_derivative"] = int_to_json(ec_from_s(s));
    out["s_poly_digest"] = std::move(digest);
  }

  if (m == pappus_matroid()) {
    Json note;
    note["paper_reported_codim"] = kPappusReportedCodim;
    note["ec_equals_reported_codim"] = e == kPappusReportedCodim;
    out["reference_constants"] = std::move(note);
  }
  return out;
}

void print_analysis_text(const Json& a) {
  std::cout << "n: " << a["n"] << "  k: " << a["k"] << "\n";
  std::cout << "components: " << a["components"].size() << " " <<
      a["components"].dump() << "\n";
  std::cout << "loops: " << a["loops"].dump()
            << "  coloops: " << a["coloops"].dump() << "\n";
  std::cout << "ec: " << a["ec"] << "  (family: "
            << a["family"].get<std::string>() << ")\n";
  std::cout << "positroid: " << (a["positroid"].get<bool>() ? "yes" : "no")
            << "\n";
  if (a.contains("affine_permutation")) {
    std::cout << "affine permutation:";
    for (const auto& v : a["affine_permutation"]["window"])
      std::cout << " " << v;
    std::cout << "  length: " << a["length"] << "  ec == length: "
              << (a["ec_equals_length"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (a.contains("s_poly_digest"))
    std::cout << "s-polynomial: " << a["s_poly_digest"]["terms"]
              << " terms, mixed derivative "
              << a["s_poly_digest"]["ec_mixed_derivative"] << "\n";
  if (a.contains("reference_constants")) {
    std::cout << "note: paper-reported codim: "
              << a["reference_constants"]["paper_reported_codim"]
              << (a["reference_constants"]["ec_equals_reported_codim"]
                          .get<bool>()
                      ? ", ec == codim"
                      : ", ec != codim")
              << "\n";
  }
}

void print_positroid_report(const AffinePermutation& p, bool as_json) {
  CyclicRankMatrix r = from_affine_permutation(p);
  long len = length(p);
  auto ess = essential_set(p);
  long ecv = ec_positroid(p);

  if (as_json) {
    Json out;
    out["permutation"] = permutation_to_json(p);
    Json rows = Json::array();
    for (int i = 1; i <= p.n; ++i) {
      Json row = Json::array();
      for (int j = i; j <= i + p.n; ++j) row.push_back(r.at(i, j));
      rows.push_back(std::move(row));
    }
    out["cyclic_rank_matrix"] = std::move(rows);
    out["length"] = len;
    out["essential_set"] = essential_to_json(ess);
    out["ec"] = ecv;
    out["ec_equals_length"] = ecv == len;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "window:";
  for (long v : p.window) std::cout << " " << v;
  std::cout << "\ncyclic rank matrix (rows i=1.." << p.n << ", columns i..i+"
            << p.n << "):\n";
  for (int i = 1; i <= p.n; ++i) {
    std::cout << "  ";
    for (int pad = 1; pad < i; ++pad) std::cout << "  ";
    for (int j = i; j <= i + p.n; ++j) std::cout << r.at(i, j) << " ";
    std::cout << "\n";
  }
  std::cout << "length: " << len << "\n";
  std::cout << "essential set:";
  if (ess.empty()) std::cout << " (empty)";
  for (const auto& e : ess)
    std::cout << " [" << e.interval.lo << "," << e.interval.hi
              << "]:" << e.rank_bound;
  std::cout << "\nec: " << ecv << "  ec == length: "
            << (ecv == len ? "yes" : "no") << "\n";
}

int print_suite(const SuiteResult& res, bool as_json) {
  if (as_json) {
    Json out;
    out["suite"] = res.suite;
    out["pass"] = res.pass;
    out["checks"] = res.checked;
    out["notes"] = res.lines;
    if (!res.pass) out["counterexample"] = res.counterexample;
    std::cout << out.dump(2) << "\n";
    return res.pass ? 0 : kExitInvariantViolation;
  }
  for (const auto& line : res.lines) std::cout << "  - " << line << "\n";
  std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.suite << " ("
            << res.checked << " checks)";
  if (!res.pass) std::cout << "\n  counterexample: " << res.counterexample;
  std::cout << "\n";
  return res.pass ? 0 : kExitInvariantViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expected-codimension toolkit for matroids and positroids"};
  app.require_subcommand(1);

  std::string input_path;
  std::vector<std::string> family_flags;
  bool as_json = false;
  std::uint64_t seed = 20240817;
  int nflag = 0;
  int samples = 1000;

  auto* cmd_ec = app.add_subcommand("ec", "expected codimension of a matroid");
  cmd_ec->add_option("input", input_path, "matroid JSON file")->required();
  cmd_ec->add_option("--family", family_flags,
                     "powerset|flacets|file:<path> (repeatable)");
  cmd_ec->add_flag("--json", as_json, "emit JSON");

  auto* cmd_analyze = app.add_subcommand("analyze", "full matroid report");
  cmd_analyze->add_option("input", input_path, "matroid JSON file")->required();
  cmd_analyze->add_flag("--json", as_json, "emit JSON");

  auto* cmd_pos = app.add_subcommand("positroid", "positroid encodings");
  cmd_pos->require_subcommand(1);
  std::string window_csv, ranks_path;
  auto* pos_perm = cmd_pos->add_subcommand("perm", "report from a window");
  pos_perm->add_option("window", window_csv, "comma-separated pi(1..n)")
      ->required();
  pos_perm->add_flag("--json", as_json, "emit JSON");
  auto* pos_ranks =
      cmd_pos->add_subcommand("ranks", "report from an interval-rank file");
  pos_ranks->add_option("input", ranks_path, "JSON with n, k, intervals")
      ->required();
  pos_ranks->add_flag("--json", as_json, "emit JSON");
  auto* pos_verify = cmd_pos->add_subcommand("verify", "sweep the length and coefficient identities");
  pos_verify->add_option("--n", nflag, "exhaustive bound (default 5)");
  pos_verify->add_option("--samples", samples, "random samples at n=6,7,8");
  pos_verify->add_option("--seed", seed, "random seed");
  pos_verify->add_flag("--json", as_json, "emit JSON");

  std::string eval_csv;
  bool check_ec = false;
  auto* cmd_spoly = app.add_subcommand("spoly", "trivariate s-polynomial");
  cmd_spoly->add_option("input", input_path, "matroid JSON file")->required();
  cmd_spoly->add_flag("--check-ec", check_ec,
                      "compare the mixed derivative against ec");
  auto* cmd_tutte = app.add_subcommand("tutte", "rank generating polynomial");
  cmd_tutte->add_option("input", input_path, "matroid JSON file")->required();
  cmd_tutte->add_option("--eval", eval_csv, "evaluate at x,y");

  std::string suite, witness_path;
  auto* cmd_verify = app.add_subcommand("verify", "run an invariant suite");
  cmd_verify
      ->add_option("suite", suite,
                   "axioms|duality|flacets|positroids|svals|valuation")
      ->required();
  cmd_verify->add_option("--n", nflag, "exhaustive bound");
  cmd_verify->add_option("--samples", samples, "random sample count");
  cmd_verify->add_option("--seed", seed, "random seed");
  cmd_verify->add_option("--witness", witness_path, "subdivision witness file");
  cmd_verify->add_flag("--json", as_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_ec) {
      Matroid m = load_matroid(input_path);
      if (family_flags.empty()) {
        Int e = ec(m);
        if (as_json) {
          Json out;
          out["ec"] = int_to_json(e);
          if (m == pappus_matroid()) {
            out["paper_reported_codim"] = kPappusReportedCodim;
            out["ec_equals_reported_codim"] = e == kPappusReportedCodim;
          }
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << e.get_str() << "\n";
          if (m == pappus_matroid())
            std::cout << "note: paper-reported codim: " << kPappusReportedCodim
                      << (e == kPappusReportedCodim ? ", ec == codim"
                                                    : ", ec != codim")
                      << "\n";
        }
        return 0;
      }
      Json out;
      std::vector<Int> values;
      for (const auto& flag : family_flags) {
        Int v = ec_with(m, family_from_flag(m, flag));
        values.push_back(v);
        out[flag] = int_to_json(v);
        if (!as_json) std::cout << flag << ": " << v.get_str() << "\n";
      }
      bool all_equal = std::all_of(values.begin(), values.end(),
                                   [&](const Int& v) { return v == values[0]; });
      out["all_equal"] = all_equal;
      if (as_json)
        std::cout << out.dump(2) << "\n";
      else if (values.size() > 1)
        std::cout << "all equal: " << (all_equal ? "yes" : "no") << "\n";
      return 0;
    }

    if (*cmd_analyze) {
      Matroid m = load_matroid(input_path);
      Json a = analysis_json(m, "flacets-by-component");
      if (as_json)
        std::cout << a.dump(2) << "\n";
      else
        print_analysis_text(a);
      return 0;
    }

    if (*pos_perm) {
      AffinePermutation p;
      std::stringstream ss(window_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) p.window.push_back(std::stol(tok));
      p.n = static_cast<int>(p.window.size());
      if (!p.valid())
        throw ParseError("window is not a bounded affine permutation "
                         "(need i <= pi(i) <= i+n and distinct residues)");
      print_positroid_report(p, as_json);
      return 0;
    }

    if (*pos_ranks) {
      Json j = load_json_file(ranks_path);
      if (!j.contains("n") || !j.contains("k") || !j.contains("intervals"))
        throw ParseError("interval-rank file needs n, k, intervals");
      int n = j["n"].get<int>();
      std::vector<std::pair<CyclicInterval, int>> bounds;
      for (const auto& e : j["intervals"]) {
        auto iv = e.at("interval");
        int lo = iv.at(0).get<int>(), hi = iv.at(1).get<int>();
        if (hi < lo) hi += n;
        bounds.push_back({CyclicInterval::normalized(lo, hi, n),
                          e.at("rank").get<int>()});
      }
      Matroid m = positroid_from_interval_ranks(n, j["k"].get<int>(), bounds);
      print_positroid_report(to_affine_permutation(cyclic_rank_matrix(m)),
                             as_json);
      return 0;
    }

    if (*pos_verify) {
      SuiteResult res =
          verify_positroids(nflag > 0 ? nflag : 5, samples, seed);
      return print_suite(res, as_json);
    }

    if (*cmd_spoly) {
      Matroid m = load_matroid(input_path);
      TriPoly s = s_poly(m);
      std::cout << tripoly_to_json(s).dump(2) << "\n";
      if (check_ec && ec_from_s(s) != ec(m)) {
        std::cerr << "mixed derivative disagrees with ec\n";
        return kExitInvariantViolation;
      }
      return 0;
    }

    if (*cmd_tutte) {
      Matroid m = load_matroid(input_path);
      BiPoly t = tutte(m);
      if (!eval_csv.empty()) {
        auto comma = eval_csv.find(',');
        if (comma == std::string::npos)
          throw ParseError("--eval expects x,y");
        Int x(eval_csv.substr(0, comma)), y(eval_csv.substr(comma + 1));
        std::cout << t.eval(x, y).get_str() << "\n";
        return 0;
      }
      std::cout << bipoly_to_json(t).dump(2) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      if (suite == "axioms") return print_suite(verify_axioms(seed), as_json);
      if (suite == "duality")
        return print_suite(verify_duality(seed, samples), as_json);
      if (suite == "flacets")
        return print_suite(
            verify_flacets(nflag > 0 ? nflag : 6, 100, seed), as_json);
      if (suite == "positroids")
        return print_suite(verify_positroids(nflag > 0 ? nflag : 5, samples,
                                             seed),
                           as_json);
      if (suite == "svals")
        return print_suite(verify_svals(nflag > 0 ? nflag : 6, 200, seed),
                           as_json);
      if (suite == "valuation") {
        SubdivisionWitness w =
            witness_path.empty()
                ? delta24_split_witness()
                : witness_from_json(load_json_file(witness_path));
        return print_suite(verify_valuation(w), as_json);
      }
      throw ParseError("unknown suite: " + suite);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const AxiomViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitAxiomViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAxiomViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return 0;
}
