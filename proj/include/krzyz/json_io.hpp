#pragma once

#include <string>

#include <json.hpp>

#include "krzyz/extremal.hpp"
#include "krzyz/series.hpp"

namespace krzyz {

using ordered_json = nlohmann::ordered_json;

/// Degree-indexed array of [re, im] pairs.
ordered_json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const ordered_json& j);

ordered_json config_to_json(const CampaignConfig& config);
/// Overlay: fields present in j replace those of base; unknown keys throw.
CampaignConfig config_from_json(const ordered_json& j, CampaignConfig base = {});

ordered_json report_to_json(const OptimizationReport& report);

std::string trace_to_csv(const OptimizationReport& report);

/// Pretty dump with a trailing newline; key order follows insertion, doubles
/// round-trip exactly, so equal values give byte-equal text.
std::string dump_json(const ordered_json& j);

/// Write-to-temp-then-rename in the target directory.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace krzyz
