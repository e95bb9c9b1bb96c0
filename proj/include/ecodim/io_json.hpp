#pragma once

#include <json.hpp>

#include "ecodim/family.hpp"
#include "ecodim/matroid.hpp"
#include "ecodim/positroid.hpp"
#include "ecodim/valuative.hpp"

namespace ecodim {

using Json = nlohmann::ordered_json;

// Exact integers render as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms parse back.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

// Matroid files: {"n": int, "format": "bases"|"rank_table"|"lines"|"matrix",
// "data": ...}. Output is canonical bases format.
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

SubsetFamily family_from_json(const Json& j, int n);
Json family_to_json(const SubsetFamily& f);

Json coeff_table_to_json(const CoeffTable& t);

AffinePermutation permutation_from_json(const Json& j);
Json permutation_to_json(const AffinePermutation& p);

Json essential_to_json(const std::vector<EssentialPosition>& es);

Json tripoly_to_json(const TriPoly& p);
TriPoly tripoly_from_json(const Json& j);
Json bipoly_to_json(const BiPoly& p);

SubdivisionWitness witness_from_json(const Json& j);
Json witness_to_json(const SubdivisionWitness& w);

Json load_json_file(const std::string& path);

}  // namespace ecodim
