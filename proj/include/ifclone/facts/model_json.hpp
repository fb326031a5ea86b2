#pragma once

#include <string>

#include <json.hpp>

#include "ifclone/facts/types.hpp"

namespace ifclone::facts {

inline constexpr int kModelSchemaVersion = 1;

nlohmann::json model_to_json(const CodeModel& model);
CodeModel model_from_json(const nlohmann::json& doc);

void dump_model_file(const CodeModel& model, const std::string& path);
CodeModel load_model_file(const std::string& path);

} // namespace ifclone::facts
