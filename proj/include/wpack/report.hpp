#pragma once

#include <string>

#include <json.hpp>

#include "wpack/annealer.hpp"

namespace wpack {

/// JSON serialization of solve and campaign results (schema 1). Key order
/// is fixed so equal results serialize to identical bytes.
nlohmann::ordered_json config_to_json(const AnnealConfig& cfg);
AnnealConfig config_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const std::string& instance_name,
                                      const AnnealConfig& cfg,
                                      const SolveReport& rep);
Layout layout_from_json(const nlohmann::json& j);

nlohmann::ordered_json campaign_to_json(const std::string& instance_name,
                                        const AnnealConfig& cfg,
                                        const CampaignResult& result);

/// Serialize with wall-time fields zeroed; used for determinism checks.
nlohmann::ordered_json strip_wall_times(nlohmann::ordered_json j);

void write_json_file(const nlohmann::ordered_json& j, const std::string& path);
nlohmann::json read_json_file(const std::string& path);

}  // namespace wpack
