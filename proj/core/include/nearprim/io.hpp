#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "nearprim/automorphism.hpp"
#include "nearprim/group.hpp"
#include "nearprim/nearring.hpp"
#include "nearprim/ngroup.hpp"
#include "nearprim/primitivity.hpp"
#include "nearprim/sandwich.hpp"

namespace nearprim::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become Error(parse_error).
json parse(std::string_view text);

/// { "order": n, "table": [[...], ...] }
json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

/// { "image": [...] }
json to_json(const GroupMap& m);
GroupMap map_from_json(const json& j);

/// { "group": ..., "autos": [[...], ...], "phi": [...] }. "autos" lists
/// generators; the loaded S is the group they generate. A missing "autos"
/// means S = {id}.
json to_json(const SandwichScheme& s);
SandwichScheme scheme_from_json(const json& j);

/// { "group", "autos", "g": [...], "reps": [...], "j": [...], "f": [[e, x], ...] }
json to_json(const PhiRecipe& r);
PhiRecipe recipe_from_json(const json& j);

/// { "kind", "domain", "elements", "add", "mul" }. Tables are omitted (and
/// "tables" set to false) when the near-ring exceeds its table cap.
json to_json(const NearRing& n);

json to_json(const ElementSet& s);
json to_json(const TypeVerdict& v);
json to_json(const AxiomReport& r);
json to_json(const SandwichScheme& scheme, const PrimitivityVerdict& v);

}  // namespace nearprim::io
