#pragma once

#include "json.hpp"

#include "qht/classifiers.hpp"
#include "qht/hadamard_test.hpp"

namespace qht {

inline void to_json(nlohmann::json& j, const InnerProductResult& r) {
    j = nlohmann::json{{"value", r.value},
                       {"raw_expectation", r.raw_expectation},
                       {"scale", r.scale},
                       {"stderr", r.std_error},
                       {"shots", r.shots},
                       {"seed", r.seed}};
}

inline void from_json(const nlohmann::json& j, InnerProductResult& r) {
    j.at("value").get_to(r.value);
    j.at("raw_expectation").get_to(r.raw_expectation);
    j.at("scale").get_to(r.scale);
    j.at("stderr").get_to(r.std_error);
    j.at("shots").get_to(r.shots);
    j.at("seed").get_to(r.seed);
}

inline void to_json(nlohmann::json& j, const LogisticHyperparams& h) {
    j = nlohmann::json{{"learning_rate", h.learning_rate},
                       {"batch_size", h.batch_size},
                       {"epochs", h.epochs},
                       {"seed", h.seed}};
}

inline void from_json(const nlohmann::json& j, LogisticHyperparams& h) {
    j.at("learning_rate").get_to(h.learning_rate);
    j.at("batch_size").get_to(h.batch_size);
    j.at("epochs").get_to(h.epochs);
    j.at("seed").get_to(h.seed);
}

inline void to_json(nlohmann::json& j, const LogisticModel& m) {
    j = nlohmann::json{{"weights", m.weights},
                       {"bias", m.bias},
                       {"hyperparams", m.hyperparams},
                       {"seed", m.hyperparams.seed}};
}

inline void from_json(const nlohmann::json& j, LogisticModel& m) {
    j.at("weights").get_to(m.weights);
    j.at("bias").get_to(m.bias);
    j.at("hyperparams").get_to(m.hyperparams);
}

inline void to_json(nlohmann::json& j, const CentroidModel& m) {
    j = nlohmann::json{{"c0", m.c0}, {"c1", m.c1}, {"b", m.offset_b}};
}

inline void from_json(const nlohmann::json& j, CentroidModel& m) {
    j.at("c0").get_to(m.c0);
    j.at("c1").get_to(m.c1);
    j.at("b").get_to(m.offset_b);
    const std::size_t dim = m.c0.size();
    m.w_diff.resize(dim);
    m.c_mid.resize(dim);
    for (std::size_t f = 0; f < dim; ++f) {
        m.w_diff[f] = m.c0[f] - m.c1[f];
        m.c_mid[f] = 0.5 * (m.c0[f] + m.c1[f]);
    }
}

} // namespace qht
