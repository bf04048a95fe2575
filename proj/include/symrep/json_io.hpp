#pragma once

#include <string>

#include <json.hpp>

#include "symrep/algebra.hpp"
#include "symrep/characters.hpp"
#include "symrep/irrep.hpp"
#include "symrep/representation.hpp"

namespace symrep {

using Json = nlohmann::ordered_json;

// Serializers used by the CLI and the file cache. All key orders are
// fixed, so dumps are byte-stable.

Json matrix_to_json(const IntMatrix& m);

// Formal sum as a list of {"perm": "[2 1 3]", "coeff": "-1"}; coefficients
// are decimal strings so arbitrary precision survives the round trip.
Json algebra_to_json(const IntAlgebra& x);
IntAlgebra algebra_from_json(const Json& j, int n);

// {"n", "partition", "dim", "scale", "gPrime", "gPrimeInverse"}
Json g_bundle_to_json(const IrrepBundle& b);

// {"n", "partition", "gPrime", "matrices": [{"perm", "x"}]}
Json rep_dump_to_json(const IrrepBundle& b, const std::vector<RepMatrix>& mats);

// {"n", "classes": [{"cycleType", "size"}], "rows": [{"partition", "chi"}]}
Json character_table_to_json(const CharacterTable& t);

std::string dump_json(const Json& j);

} // namespace symrep
