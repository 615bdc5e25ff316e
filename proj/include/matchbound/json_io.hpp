#pragma once

#include "matchbound/bounds.hpp"
#include "matchbound/generators.hpp"
#include "matchbound/lemmas.hpp"

#include <json.hpp>

namespace matchbound {

nlohmann::json to_json(const VerificationRecord& record);
nlohmann::json to_json(const LemmaRow& row);
nlohmann::json to_json(const SweepChecks& checks);
nlohmann::json to_json(const CampaignSpec& spec);
CampaignSpec campaign_from_json(const nlohmann::json& j);

}  // namespace matchbound
