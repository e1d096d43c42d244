#pragma once

#include "abideal/affine.hpp"
#include "abideal/duality.hpp"
#include "abideal/ideals.hpp"
#include "abideal/rootsys.hpp"

#include <json.hpp>

#include <string>

namespace abideal {

// Key order is fixed everywhere so identical inputs emit byte-identical
// documents.
using Json = nlohmann::ordered_json;

Json to_json(const Root& r);
Json to_json(const AffineRoot& r);  // {"coeffs": [...], "delta": k}
Json ideal_to_json(const RootSystem& rs, const AbelianIdeal& ideal);
Json duality_report_to_json(const DualityReport& report);

// epsilon-coordinate rendering for the B and C families ("e1+e2", "2e1");
// empty string for other families.
std::string epsilon_str(const RootSystem& rs, const Root& r);

}  // namespace abideal
