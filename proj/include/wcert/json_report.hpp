#pragma once

#include <json.hpp>

#include "wcert/catalog.hpp"
#include "wcert/inequalities.hpp"
#include "wcert/special.hpp"

namespace wcert {

// Stable report schemas (documented in docs/report-schema.md, schema
// version 1).  nlohmann keeps object keys sorted, so serialization is
// byte-stable for identical inputs.

nlohmann::json to_json(const Interval& v);
nlohmann::json to_json(const DomainSpec& d);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const PropertyVerdict& v);
nlohmann::json to_json(const ClassifyResult& r);
nlohmann::json to_json(const IneqReport& r);
nlohmann::json to_json(const FuzzSummary& s);
nlohmann::json to_json(const Constants& c);
nlohmann::json to_json(const CaseOutcome& c);
nlohmann::json to_json(const EntryOutcome& e);
nlohmann::json catalog_to_json(const std::vector<EntryOutcome>& outcomes);

nlohmann::json config_to_json(const ClassifyConfig& cfg, const DomainSpec& d);
ClassifyConfig config_from_json(const nlohmann::json& j);
DomainSpec domain_from_json(const nlohmann::json& j);

}  // namespace wcert
