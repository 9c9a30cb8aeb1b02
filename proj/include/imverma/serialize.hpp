#pragma once

#include <json.hpp>

#include "imverma/crystal.hpp"

namespace imverma {

using Json = nlohmann::ordered_json;

/// Element payload: array of {"coeff": scalar-text, "monomial": [ints]},
/// sorted by monomial lexicographic order. Bit-exact round trip.
Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

/// {"lambda": {"h": rational, "d": rational}, "element": ...}
Json module_vector_to_json(const ModuleVector& v);
ModuleVector module_vector_from_json(const Json& j);

Json window_to_json(const WeightWindow& w);
WeightWindow window_from_json(const Json& j);

Json gram_to_json(const GramMatrix& g, bool with_mod_q2);
std::string gram_to_csv(const GramMatrix& g);

Json graph_to_json(const CrystalGraph& g);

}  // namespace imverma
