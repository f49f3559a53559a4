#include "rfgnn/nn/checkpoint.hpp"

#include <set>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

using nlohmann::json;

json backbone_config_to_json(const BackboneConfig& cfg) {
    return json{{"kind", to_string(cfg.kind)}, {"layers", cfg.layers},
                {"hidden", cfg.hidden},        {"out_dim", cfg.out_dim},
                {"dropout", cfg.dropout},      {"sgc_power", cfg.sgc_power}};
}

BackboneConfig backbone_config_from_json(const json& j) {
    BackboneConfig cfg;
    try {
        cfg.kind = backbone_kind_from_string(j.at("kind").get<std::string>());
        cfg.layers = j.at("layers").get<std::int32_t>();
        cfg.hidden = j.at("hidden").get<std::int32_t>();
        cfg.out_dim = j.at("out_dim").get<std::int32_t>();
        cfg.dropout = j.at("dropout").get<double>();
        cfg.sgc_power = j.at("sgc_power").get<std::int32_t>();
    } catch (const json::exception& e) {
        throw LoadError(concat("backbone config: ", e.what()));
    }
    cfg.validate();
    return cfg;
}

json params_to_json(const std::vector<ParamTensor*>& params) {
    json out = json::object();
    for (const ParamTensor* p : params) {
        const auto& v = p->value;
        out[p->name] = json{
            {"rows", v.rows()},
            {"cols", v.cols()},
            {"data", std::vector<double>(v.data(), v.data() + v.size())}};
    }
    return out;
}

void params_from_json(const json& j, const std::vector<ParamTensor*>& params) {
    RFG_CHECK(j.is_object(), LoadError, "checkpoint params: expected an object");
    std::set<std::string> known;
    for (ParamTensor* p : params) {
        RFG_CHECK(j.contains(p->name), LoadError,
                  "checkpoint params: missing tensor '", p->name, "'");
        const auto& entry = j.at(p->name);
        std::size_t rows = 0, cols = 0;
        std::vector<double> data;
        try {
            rows = entry.at("rows").get<std::size_t>();
            cols = entry.at("cols").get<std::size_t>();
            data = entry.at("data").get<std::vector<double>>();
        } catch (const json::exception& e) {
            throw LoadError(concat("checkpoint tensor '", p->name, "': ", e.what()));
        }
        RFG_CHECK(rows == p->value.rows() && cols == p->value.cols(), LoadError,
                  "checkpoint tensor '", p->name, "' is (", rows, "x", cols,
                  "), model expects ", shape_str(p->value));
        RFG_CHECK(data.size() == rows * cols, LoadError, "checkpoint tensor '",
                  p->name, "': data length ", data.size(), " != ", rows * cols);
        std::copy(data.begin(), data.end(), p->value.data());
        known.insert(p->name);
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        RFG_CHECK(known.contains(key), LoadError,
                  "checkpoint params: unknown tensor '", key, "'");
    }
}

} // namespace rfgnn
