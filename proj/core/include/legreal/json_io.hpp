#pragma once

#include <json.hpp>

#include "legreal/front.hpp"
#include "legreal/rational.hpp"

namespace legreal {

// Wire format: rationals are {"num": "<int>", "den": "<positive int>"},
// always in lowest terms. nlohmann's object keys are sorted, so dumps are
// canonical and byte-stable.

using Json = nlohmann::json;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json point_to_json(const FrontPoint& p);
FrontPoint point_from_json(const Json& j);

Json strand_to_json(const FrontStrand& s);
FrontStrand strand_from_json(const Json& j);

Json front_to_json(const FrontDiagram& d);
FrontDiagram front_from_json(const Json& j);

std::string dump_canonical(const Json& j);

} // namespace legreal
