#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ifclone/report/pipeline.hpp"

namespace ifclone::report {

nlohmann::json bundle_to_json(const ReportBundle& bundle);

std::string render_interfaces_csv(const ReportBundle& bundle);
std::string render_associations_csv(const ReportBundle& bundle);
std::string render_markdown(const ReportBundle& bundle);

/// Fixed-precision decimal used everywhere a ratio is displayed (CSV,
/// markdown); JSON carries the full double.
std::string format_ratio(double value);

/// Write the selected formats into config.output_dir; returns the paths
/// written. Byte-stable across reruns on identical input.
std::vector<std::string> emit_reports(const ReportBundle& bundle, const AnalysisConfig& config);

} // namespace ifclone::report
