#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "heckelr/products.hpp"
#include "heckelr/schurweyl.hpp"
#include "heckelr/symbols.hpp"

namespace heckelr::json_io {

using nlohmann::json;

inline constexpr int schema_version = 1;

json to_json(const Multisegment& m);
json to_json(const Symbol& s);
json to_json(const PairStructure& ps);
json to_json(const Expansion& e);
json to_json(const DrinfeldResult& d, Int rank);
json to_json(const ChargedPartition& cp);

// Parsers throw DomainError on malformed documents.
Multisegment multisegment_from_json(const json& j);
Symbol symbol_from_json(const json& j);
/// Offset and terms; the input symbol is not part of the expansion schema.
std::pair<Int, std::vector<ExpansionTerm>> expansion_from_json(const json& j);
DrinfeldResult drinfeld_from_json(const json& j);

} // namespace heckelr::json_io
