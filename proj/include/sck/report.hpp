#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sck/engine.hpp"
#include "sck/validate.hpp"

namespace sck {

using Json = nlohmann::ordered_json;

Json to_json(const SaturationStats& stats);
Json to_json(const KnowledgeBase& kb, std::span<const Binding> bindings);
Json to_json(const KnowledgeBase& kb, const DerivationTree& tree);
Json to_json(const HarvestReport& report);
Json to_json(std::span<const Violation> violations);
Json rules_to_json(const std::vector<Rule>& rules);

std::string stats_text(const SaturationStats& stats);
std::string bindings_text(const KnowledgeBase& kb, std::span<const Binding> bindings);
std::string tree_text(const KnowledgeBase& kb, const DerivationTree& tree);
std::string harvest_text(const HarvestReport& report);
std::string violations_text(std::span<const Violation> violations);
std::string rules_text(const std::vector<Rule>& rules);

}  // namespace sck
