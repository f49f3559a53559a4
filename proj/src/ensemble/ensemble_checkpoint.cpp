#include <fstream>
#include <iomanip>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/rng.hpp"
#include "rfgnn/ensemble/checkpoint.hpp"
#include "rfgnn/nn/checkpoint.hpp"

namespace rfgnn {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

std::string branch_file_name(std::size_t index) {
    return concat("branch_", std::setw(3), std::setfill('0'), index, ".json");
}

json edges_to_json(const std::vector<std::vector<Edge>>& rels) {
    json out = json::array();
    for (const auto& rel : rels) {
        json r = json::array();
        for (const auto& e : rel) r.push_back(json::array({e.src, e.dst}));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::vector<Edge>> edges_from_json(const json& j) {
    std::vector<std::vector<Edge>> out;
    for (const auto& rel : j) {
        std::vector<Edge> edges;
        for (const auto& e : rel) {
            edges.push_back({e.at(0).get<std::int32_t>(), e.at(1).get<std::int32_t>()});
        }
        out.push_back(std::move(edges));
    }
    return out;
}

json spec_to_json(const BranchSpec& spec) {
    return json{{"index", spec.index},
                {"seed", spec.seed},
                {"sampled_nodes", spec.sampled_nodes},
                {"selected_features", spec.selected_features},
                {"remaining_features", spec.remaining_features},
                {"kept_edges", edges_to_json(spec.kept_edges)}};
}

BranchSpec spec_from_json(const json& j) {
    BranchSpec spec;
    spec.index = j.at("index").get<std::int32_t>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.sampled_nodes = j.at("sampled_nodes").get<std::vector<std::int32_t>>();
    spec.selected_features =
        j.at("selected_features").get<std::vector<std::int32_t>>();
    spec.remaining_features =
        j.at("remaining_features").get<std::vector<std::int32_t>>();
    spec.kept_edges = edges_from_json(j.at("kept_edges"));
    return spec;
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    RFG_CHECK(out.good(), LoadError, "cannot write ", path.string());
    out << j.dump(2) << '\n';
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    RFG_CHECK(in.good(), LoadError, "cannot open ", path.string());
    json j = json::parse(in, nullptr, false);
    RFG_CHECK(!j.is_discarded(), LoadError, path.string(), ": invalid JSON");
    return j;
}

} // namespace

json train_config_to_json(const TrainConfig& cfg) {
    return json{{"alpha", cfg.alpha},
                {"beta", cfg.beta},
                {"gamma", cfg.gamma},
                {"s", cfg.s},
                {"epochs", cfg.epochs},
                {"lr", cfg.lr},
                {"weight_decay", cfg.weight_decay},
                {"dropout", cfg.dropout},
                {"backbone", backbone_config_to_json(cfg.backbone)},
                {"master_seed", cfg.master_seed}};
}

TrainConfig train_config_from_json(const json& j) {
    TrainConfig cfg;
    try {
        cfg.alpha = j.at("alpha").get<double>();
        cfg.beta = j.at("beta").get<double>();
        cfg.gamma = j.at("gamma").get<double>();
        cfg.s = j.at("s").get<std::int32_t>();
        cfg.epochs = j.at("epochs").get<std::int32_t>();
        cfg.lr = j.at("lr").get<double>();
        cfg.weight_decay = j.at("weight_decay").get<double>();
        cfg.dropout = j.at("dropout").get<double>();
        cfg.backbone = backbone_config_from_json(j.at("backbone"));
        cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw LoadError(concat("train config: ", e.what()));
    }
    cfg.validate();
    return cfg;
}

void save_ensemble(const std::filesystem::path& dir, EnsembleModel& ensemble) {
    RFG_CHECK(ensemble.models.size() == ensemble.specs.size(), Error,
              "ensemble has ", ensemble.specs.size(), " specs but ",
              ensemble.models.size(), " models");
    std::filesystem::create_directories(dir);

    json branches = json::array();
    for (std::size_t i = 0; i < ensemble.specs.size(); ++i) {
        json entry = spec_to_json(ensemble.specs[i]);
        entry["model_file"] = branch_file_name(i);
        branches.push_back(std::move(entry));

        auto& model = ensemble.models[i];
        json bj{{"format_version", kFormatVersion},
                {"backbone", backbone_config_to_json(model.backbone.config())},
                {"in_dim", std::visit([](const auto& p) { return p.in_dim; },
                                      model.backbone.params)},
                {"num_classes", model.num_classes},
                {"params", params_to_json(model.param_list())}};
        if (model.backbone.kind() == BackboneKind::rgcn) {
            bj["relations"] = std::get<RgcnParams>(model.backbone.params).relations;
        }
        if (model.fcn) {
            bj["fcn"] = json{{"in_dim", model.fcn->in_dim},
                             {"hidden", model.fcn->hidden},
                             {"out_dim", model.fcn->out_dim},
                             {"dropout", model.fcn->dropout}};
        }
        write_json(dir / branch_file_name(i), bj);
    }

    write_json(dir / "ensemble.json",
               json{{"format_version", kFormatVersion},
                    {"variant", to_string(ensemble.variant)},
                    {"num_classes", ensemble.num_classes},
                    {"config", train_config_to_json(ensemble.config)},
                    {"branches", std::move(branches)}});
}

EnsembleModel load_ensemble(const std::filesystem::path& dir) {
    const json root = read_json(dir / "ensemble.json");
    EnsembleModel ensemble;
    try {
        RFG_CHECK(root.at("format_version").get<int>() == kFormatVersion, LoadError,
                  "ensemble.json: unsupported format_version");
        ensemble.variant = variant_from_string(root.at("variant").get<std::string>());
        ensemble.num_classes = root.at("num_classes").get<std::int32_t>();
        ensemble.config = train_config_from_json(root.at("config"));

        for (const auto& entry : root.at("branches")) {
            ensemble.specs.push_back(spec_from_json(entry));
            const auto bj =
                read_json(dir / entry.at("model_file").get<std::string>());

            BranchModel model;
            model.num_classes = bj.at("num_classes").get<std::int32_t>();
            const auto cfg = backbone_config_from_json(bj.at("backbone"));
            const auto in_dim = bj.at("in_dim").get<std::int32_t>();
            const auto relations =
                bj.contains("relations") ? bj.at("relations").get<std::int32_t>() : 1;

            // Structure first (throwaway init), then overwrite from the file.
            SplitRng scratch(0);
            model.backbone = BackboneModel::init(cfg, in_dim, relations, scratch);
            if (bj.contains("fcn")) {
                const auto& fj = bj.at("fcn");
                model.fcn = FcnParams::init(fj.at("in_dim").get<std::int32_t>(),
                                            fj.at("hidden").get<std::int32_t>(),
                                            fj.at("out_dim").get<std::int32_t>(),
                                            fj.at("dropout").get<double>(), scratch);
            }
            model.head = HeadParams::init(cfg.out_dim, model.num_classes, scratch);
            params_from_json(bj.at("params"), model.param_list());
            ensemble.models.push_back(std::move(model));
        }
    } catch (const json::exception& e) {
        throw LoadError(concat(dir.string(), ": ", e.what()));
    }
    RFG_CHECK(!ensemble.models.empty(), LoadError, dir.string(),
              ": checkpoint has no branches");
    return ensemble;
}

} // namespace rfgnn
