#pragma once

#include <filesystem>
#include <json.hpp>

#include "rfgnn/ensemble/ensemble.hpp"

namespace rfgnn {

nlohmann::json train_config_to_json(const TrainConfig& cfg);
TrainConfig train_config_from_json(const nlohmann::json& j);

/// Checkpoint directory: ensemble.json (config, variant, explicit branch
/// specs) plus one branch_NNN.json per branch. Specs are stored outright so
/// a checkpoint survives RNG changes.
void save_ensemble(const std::filesystem::path& dir, EnsembleModel& ensemble);

EnsembleModel load_ensemble(const std::filesystem::path& dir);

} // namespace rfgnn
