#pragma once
// JSON form of verification reports and normal forms.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylpi/identities.hpp"
#include "weylpi/rewriter.hpp"

namespace weylpi {

nlohmann::json to_json(const ConjectureReport& r);
/// Array of reports plus a summary object.
nlohmann::json to_json(const std::vector<ConjectureReport>& reports);
nlohmann::json to_json(const NormalForm& nf);
nlohmann::json to_json(const RewriteStep& step);

/// Structural check against docs/report.schema.json; returns the problems found.
std::vector<std::string> validate_report(const nlohmann::json& j);

}  // namespace weylpi
