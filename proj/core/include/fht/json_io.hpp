#pragma once

#include <json.hpp>

#include "fht/affine_weyl.hpp"
#include "fht/characters.hpp"
#include "fht/root_system.hpp"

namespace fht {

class FusionElement;

// Character serialization: sorted support, weight coordinates as integer
// arrays.  These schemas are the golden-file formats of the test suite.
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json formal_character_to_json(const FormalCharacter& c);
FormalCharacter formal_character_from_json(const nlohmann::json& j);

nlohmann::json alternating_character_to_json(const AlternatingCharacter& c);
AlternatingCharacter alternating_character_from_json(const RootSystem& rs,
                                                     const nlohmann::json& j);

nlohmann::json periodic_character_to_json(const PeriodicCharacter& c);
PeriodicCharacter periodic_character_from_json(const RootSystem& rs, const nlohmann::json& j);

nlohmann::json fold_outcome_to_json(const FoldOutcome& f);
nlohmann::json fusion_element_to_json(const FusionElement& e);

} // namespace fht
