#pragma once

#include <filesystem>
#include <string>

#include "rfgnn/graph/graph.hpp"

namespace rfgnn {

/// On-disk names referenced by manifest.json.
struct DatasetManifest {
    std::int32_t num_nodes = 0;
    std::int32_t num_features = 0;
    std::int32_t num_relations = 0;
    std::int32_t num_classes = 0;
    std::vector<std::string> class_names;
    std::string features_file = "features.csv";
    std::string edges_file = "edges.csv";
    std::string labels_file = "labels.csv";
    std::string splits_file = "splits.json";
};

/// Loads and validates a dataset directory (manifest.json plus the CSV/JSON
/// files it names). Duplicate edges are deduplicated, self-loops preserved.
/// Throws LoadError with file and line on any defect.
MultiRelationGraph load_dataset(const std::filesystem::path& dir);

/// Writes `g` in the same directory format (creates `dir` if needed).
void save_dataset(const std::filesystem::path& dir, const MultiRelationGraph& g);

} // namespace rfgnn
