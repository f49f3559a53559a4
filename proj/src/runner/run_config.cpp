#include "rfgnn/runner/run_config.hpp"

#include <set>

#include "rfgnn/core/error.hpp"
#include "rfgnn/ensemble/checkpoint.hpp"
#include "rfgnn/nn/checkpoint.hpp"

namespace rfgnn {

using nlohmann::json;

void RunConfig::validate() const {
    RFG_CHECK(dataset_dir.empty() != !synthetic.has_value(), ParameterError,
              "exactly one of a dataset directory or synthetic parameters "
              "must be given");
    RFG_CHECK(!seeds.empty(), ParameterError, "at least one seed is required");
    RFG_CHECK(threads >= 1, ParameterError, "threads must be >= 1, got ", threads);
    train.validate();
}

void apply_preset(TrainConfig& cfg, const std::string& name) {
    cfg.s = 10;
    if (name == "cresci15") {
        cfg.alpha = 0.95;
        cfg.beta = 0.95;
        cfg.gamma = 0.95;
    } else if (name == "twibot20") {
        cfg.alpha = 0.8;
        cfg.beta = 0.8;
        cfg.gamma = 0.9;
    } else if (name == "mgtab") {
        cfg.alpha = 0.6;
        cfg.beta = 0.9;
        cfg.gamma = 0.8;
    } else {
        throw ParameterError(
            concat("unknown preset '", name, "' (cresci15|twibot20|mgtab)"));
    }
}

json synthetic_params_to_json(const SyntheticParams& p) {
    return json{{"nodes", p.nodes},
                {"classes", p.classes},
                {"p_in", p.p_in},
                {"p_out", p.p_out},
                {"informative_dims", p.informative_dims},
                {"redundant_dims", p.redundant_dims},
                {"noise_dims", p.noise_dims},
                {"class_separation", p.class_separation},
                {"relations", p.relations},
                {"seed", p.seed}};
}

SyntheticParams synthetic_params_from_json(const json& j) {
    SyntheticParams p;
    try {
        if (j.contains("nodes")) p.nodes = j.at("nodes").get<std::int32_t>();
        if (j.contains("classes")) p.classes = j.at("classes").get<std::int32_t>();
        if (j.contains("p_in")) p.p_in = j.at("p_in").get<double>();
        if (j.contains("p_out")) p.p_out = j.at("p_out").get<double>();
        if (j.contains("informative_dims")) {
            p.informative_dims = j.at("informative_dims").get<std::int32_t>();
        }
        if (j.contains("redundant_dims")) {
            p.redundant_dims = j.at("redundant_dims").get<std::int32_t>();
        }
        if (j.contains("noise_dims")) {
            p.noise_dims = j.at("noise_dims").get<std::int32_t>();
        }
        if (j.contains("class_separation")) {
            p.class_separation = j.at("class_separation").get<double>();
        }
        if (j.contains("relations")) {
            p.relations = j.at("relations").get<std::int32_t>();
        }
        if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw LoadError(concat("synthetic params: ", e.what()));
    }
    return p;
}

RunConfig run_config_from_json(const json& j) {
    static const std::set<std::string> known{
        "dataset",  "synthetic", "preset", "variant", "train",
        "seeds",    "out",       "threads"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        RFG_CHECK(known.contains(key), LoadError,
                  "config: unknown key '", key, "'");
    }

    RunConfig cfg;
    try {
        if (j.contains("preset")) {
            apply_preset(cfg.train, j.at("preset").get<std::string>());
        }
        if (j.contains("dataset")) {
            cfg.dataset_dir = j.at("dataset").get<std::string>();
        }
        if (j.contains("synthetic")) {
            cfg.synthetic = synthetic_params_from_json(j.at("synthetic"));
        }
        if (j.contains("variant")) {
            cfg.variant = variant_from_string(j.at("variant").get<std::string>());
        }
        if (j.contains("train")) {
            // Partial override of TrainConfig defaults (after any preset).
            const auto& t = j.at("train");
            json merged = train_config_to_json(cfg.train);
            for (const auto& [key, value] : t.items()) {
                if (key == "backbone") {
                    for (const auto& [bk, bv] : value.items()) {
                        merged["backbone"][bk] = bv;
                    }
                } else {
                    merged[key] = value;
                }
            }
            cfg.train = train_config_from_json(merged);
        }
        if (j.contains("seeds")) {
            cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        }
        if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
        if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    } catch (const json::exception& e) {
        throw LoadError(concat("config: ", e.what()));
    }
    return cfg;
}

json run_config_to_json(const RunConfig& cfg) {
    json j{{"variant", to_string(cfg.variant)},
           {"train", train_config_to_json(cfg.train)},
           {"seeds", cfg.seeds},
           {"threads", cfg.threads}};
    if (!cfg.dataset_dir.empty()) j["dataset"] = cfg.dataset_dir;
    if (cfg.synthetic) j["synthetic"] = synthetic_params_to_json(*cfg.synthetic);
    if (!cfg.out_dir.empty()) j["out"] = cfg.out_dir;
    return j;
}

} // namespace rfgnn
