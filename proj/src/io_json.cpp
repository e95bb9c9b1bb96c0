#include "ecodim/io_json.hpp"

#include <algorithm>
#include <fstream>

namespace ecodim {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<long>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer or a decimal string");
}

namespace {

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of elements");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("element must be an integer");
    out.push_back(e.get<int>());
  }
  return out;
}

Mask mask_from_list(const Json& j, int n) {
  Mask m = 0;
  for (int e : int_list(j)) {
    if (e < 1 || e > n)
      throw ParseError("element " + std::to_string(e) + " outside 1.." +
                       std::to_string(n));
    m |= element_bit(e);
  }
  return m;
}

Json mask_to_list(Mask m) {
  Json out = Json::array();
  for (int e : elements_of(m)) out.push_back(e);
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Rat r;
    if (r.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError("bad rational literal: " + j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw ParseError("matrix entries must be integers or \"a/b\" strings");
}

}  // namespace

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matroid file must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing ground-set size \"n\"");
  const int n = j["n"].get<int>();
  if (!j.contains("format") || !j["format"].is_string())
    throw ParseError("missing \"format\"");
  const std::string format = j["format"].get<std::string>();
  const Json& data = j.contains("data") ? j["data"] : Json();

  if (format == "bases") {
    if (!data.is_array()) throw ParseError("bases data must be an array");
    std::vector<Mask> bases;
    for (const auto& b : data) bases.push_back(mask_from_list(b, n));
    return from_bases(n, bases);
  }
  if (format == "rank_table") {
    if (!data.is_array()) throw ParseError("rank_table data must be an array");
    if (n < 1 || n > 30 || data.size() != (std::size_t{1} << n))
      throw ParseError("rank_table needs exactly 2^n entries");
    std::vector<std::uint8_t> table;
    for (const auto& v : data) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 255)
        throw ParseError("rank_table entries must be small naturals");
      table.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    return from_rank_table(n, table);
  }
  if (format == "lines") {
    if (!data.is_array()) throw ParseError("lines data must be an array");
    LinePresentation p;
    p.n = n;
    for (const auto& l : data) p.lines.push_back(mask_from_list(l, n));
    return rank3_from_lines(p);
  }
  if (format == "matrix") {
    if (!data.is_object() || !data.contains("rows"))
      throw ParseError("matrix data must be {\"p\": ..., \"rows\": [[...]]}");
    RealizationMatrix a;
    if (data.contains("p")) {
      if (data["p"].is_string() && data["p"].get<std::string>() == "Q")
        a.prime = 0;
      else if (data["p"].is_number_integer())
        a.prime = data["p"].get<long long>();
      else
        throw ParseError("\"p\" must be a prime or \"Q\"");
    }
    for (const auto& row : data["rows"]) {
      std::vector<Rat> r;
      for (const auto& v : row) r.push_back(rat_from_json(v));
      a.entries.push_back(std::move(r));
    }
    a.rows = static_cast<int>(a.entries.size());
    a.cols = a.rows ? static_cast<int>(a.entries[0].size()) : 0;
    if (a.cols != n) throw ParseError("matrix has a column per element; cols != n");
    return from_matrix(a);
  }
  throw ParseError("unknown matroid format: " + format);
}

Json matroid_to_json(const Matroid& m) {
  Json out;
  out["n"] = m.n();
  out["format"] = "bases";
  std::vector<std::vector<int>> lists;
  for (Mask b : m.bases()) lists.push_back(elements_of(b));
  std::sort(lists.begin(), lists.end());
  Json data = Json::array();
  for (const auto& b : lists) {
    Json jb = Json::array();
    for (int e : b) jb.push_back(e);
    data.push_back(std::move(jb));
  }
  out["data"] = std::move(data);
  return out;
}

SubsetFamily family_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
    throw ParseError("family file must be {\"sets\": [[...], ...]}");
  std::vector<Mask> members;
  for (const auto& s : j["sets"]) members.push_back(mask_from_list(s, n));
  return SubsetFamily(std::move(members));
}

Json family_to_json(const SubsetFamily& f) {
  Json sets = Json::array();
  for (Mask m : f.members()) sets.push_back(mask_to_list(m));
  Json out;
  out["sets"] = std::move(sets);
  return out;
}

Json coeff_table_to_json(const CoeffTable& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.sets.size(); ++i) {
    Json row;
    row["set"] = mask_to_list(t.sets[i]);
    row["value"] = int_to_json(t.values[i]);
    out.push_back(std::move(row));
  }
  return out;
}

AffinePermutation permutation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("window"))
    throw ParseError("permutation file must be {\"n\": ..., \"window\": [...]}");
  AffinePermutation p;
  p.n = j["n"].get<int>();
  for (const auto& v : j["window"]) {
    if (!v.is_number_integer()) throw ParseError("window entries must be integers");
    p.window.push_back(v.get<long>());
  }
  if (!p.valid()) throw ParseError("window is not a bounded affine permutation");
  return p;
}

Json permutation_to_json(const AffinePermutation& p) {
  Json out;
  out["n"] = p.n;
  out["window"] = p.window;
  return out;
}

Json essential_to_json(const std::vector<EssentialPosition>& es) {
  Json out = Json::array();
  for (const auto& e : es) {
    Json row;
    row["interval"] = Json::array({e.interval.lo, e.interval.hi});
    row["rank"] = e.rank_bound;
    out.push_back(std::move(row));
  }
  return out;
}

Json tripoly_to_json(const TriPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json t;
    t["x"] = k[0];
    t["y"] = k[1];
    t["z"] = k[2];
    t["coeff"] = int_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

TriPoly tripoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw ParseError("polynomial file must be {\"terms\": [...]}");
  TriPoly p;
  for (const auto& t : j["terms"])
    p.add(t.at("x").get<int>(), t.at("y").get<int>(), t.at("z").get<int>(),
          int_from_json(t.at("coeff")));
  return p;
}

Json bipoly_to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json t;
    t["x"] = k[0];
    t["y"] = k[1];
    t["coeff"] = int_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

SubdivisionWitness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parent") || !j.contains("internal_faces"))
    throw ParseError(
        "witness file must be {\"parent\": ..., \"internal_faces\": [...]}");
  SubdivisionWitness w{matroid_from_json(j["parent"]), {}};
  for (const auto& f : j["internal_faces"]) {
    if (!f.contains("matroid") || !f.contains("dim"))
      throw ParseError("each face needs \"matroid\" and \"dim\"");
    w.internal_faces.push_back(
        {matroid_from_json(f["matroid"]), f["dim"].get<int>()});
  }
  return w;
}

Json witness_to_json(const SubdivisionWitness& w) {
  Json out;
  out["parent"] = matroid_to_json(w.parent);
  Json faces = Json::array();
  for (const auto& f : w.internal_faces) {
    Json jf;
    jf["matroid"] = matroid_to_json(f.m);
    jf["dim"] = f.dim;
    faces.push_back(std::move(jf));
  }
  out["internal_faces"] = std::move(faces);
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace ecodim
