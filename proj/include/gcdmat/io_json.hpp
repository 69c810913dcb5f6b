#pragma once

#include <json.hpp>

#include "gcdmat/divisibility.hpp"
#include "gcdmat/explorer.hpp"
#include "gcdmat/gcd_set.hpp"

// vendor/json.hpp provides nlohmann::json; only renderings of the
// documented report schemas live here. Exact rationals always serialize
// as strings "p/q"; set elements as numbers when they fit, else strings.

namespace gcdmat {

nlohmann::json json_int(const Int& v);
nlohmann::json json_of(const GcdSet& s);
nlohmann::json json_of(const ExactMatrix& m);
nlohmann::json json_of(const GcdSet& s, const StructureProfile& p);
nlohmann::json json_of(const DivisibilityReport& r, bool include_quotient);
nlohmann::json json_of(const Finding& f);
nlohmann::json json_of(const CampaignSummary& summary);

}  // namespace gcdmat
