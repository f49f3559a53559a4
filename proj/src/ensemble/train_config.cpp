#include "rfgnn/ensemble/train_config.hpp"

#include "rfgnn/core/error.hpp"

namespace rfgnn {

std::string to_string(Variant v) {
    switch (v) {
    case Variant::ensemble_only:
        return "e";
    case Variant::ensemble_subgraph:
        return "es";
    case Variant::full:
        return "full";
    }
    return "?";
}

Variant variant_from_string(const std::string& name) {
    if (name == "e") return Variant::ensemble_only;
    if (name == "es") return Variant::ensemble_subgraph;
    if (name == "full") return Variant::full;
    throw ParameterError(concat("unknown variant '", name, "' (e|es|full)"));
}

void TrainConfig::validate() const {
    RFG_CHECK(alpha > 0.0 && alpha <= 1.0, ParameterError,
              "alpha must be in (0,1], got ", alpha);
    RFG_CHECK(beta > 0.0 && beta <= 1.0, ParameterError,
              "beta must be in (0,1], got ", beta);
    RFG_CHECK(gamma > 0.0 && gamma <= 1.0, ParameterError,
              "gamma must be in (0,1], got ", gamma);
    RFG_CHECK(s >= 1, ParameterError, "branch count must be >= 1, got ", s);
    RFG_CHECK(epochs >= 1, ParameterError, "epochs must be >= 1, got ", epochs);
    RFG_CHECK(lr > 0.0, ParameterError, "learning rate must be positive, got ", lr);
    RFG_CHECK(weight_decay >= 0.0, ParameterError,
              "weight decay must be >= 0, got ", weight_decay);
    RFG_CHECK(dropout >= 0.0 && dropout < 1.0, ParameterError,
              "dropout must be in [0,1), got ", dropout);
    backbone.validate();
}

} // namespace rfgnn
