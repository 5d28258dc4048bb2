#include "tsetlin/model_store.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tsetlin/errors.hpp"

namespace tsetlin {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json config_to_json(const TMConfig& c) {
    return json{{"clauses", c.n_clauses},
                {"t_margin", c.t_margin},
                {"s", c.s},
                {"states_per_action", c.states_per_action},
                {"boost_true_positive", c.boost_true_positive},
                {"learnable_t", c.learnable_t},
                {"tie_to_zero", c.tie_to_zero},
                {"seed", c.seed},
                {"epochs", c.epochs},
                {"initial_weight", c.initial_weight}};
}

TMConfig config_from_json(const json& j) {
    TMConfig c;
    c.n_clauses = j.at("clauses").get<int>();
    c.t_margin = j.at("t_margin").get<int>();
    c.s = j.at("s").get<double>();
    c.states_per_action = j.at("states_per_action").get<int>();
    c.boost_true_positive = j.at("boost_true_positive").get<bool>();
    c.learnable_t = j.at("learnable_t").get<bool>();
    c.tie_to_zero = j.at("tie_to_zero").get<bool>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.epochs = j.at("epochs").get<int>();
    c.initial_weight = j.at("initial_weight").get<std::int32_t>();
    return c;
}

json machine_to_json(const Machine& m) {
    return json{{"clauses", m.states.clauses},
                {"features", m.states.features},
                {"states_per_action", m.states.states_per_action},
                {"t_margin", m.t_margin},
                {"states", m.states.states},
                {"weights", m.weights}};
}

Machine machine_from_json(const json& j) {
    Machine m;
    m.states.clauses = j.at("clauses").get<int>();
    m.states.features = j.at("features").get<int>();
    m.states.states_per_action = j.at("states_per_action").get<int>();
    m.t_margin = j.at("t_margin").get<int>();
    m.states.states = j.at("states").get<std::vector<std::int32_t>>();
    m.weights = j.at("weights").get<std::vector<std::int32_t>>();

    const auto expect = static_cast<std::size_t>(m.states.clauses) *
                        static_cast<std::size_t>(m.states.columns());
    if (m.states.states.size() != expect)
        throw ModelError("machine states array has wrong length");
    if (m.weights.size() != static_cast<std::size_t>(m.states.clauses))
        throw ModelError("machine weights array has wrong length");
    for (std::int32_t s : m.states.states)
        if (s < 1 || s > 2 * m.states.states_per_action)
            throw ModelError("machine state outside the legal range");
    for (std::int32_t w : m.weights)
        if (w < 0) throw ModelError("negative clause weight");
    return m;
}

}  // namespace

std::vector<ClauseBank> TMModel::banks() const {
    std::vector<ClauseBank> banks;
    banks.reserve(machines.size());
    for (const Machine& m : machines) banks.push_back(m.bank());
    return banks;
}

Prediction TMModel::predict_bits(const BitVector& x) const {
    if (machines.empty()) throw ModelError("model has no machines");
    const std::vector<ClauseBank> b = banks();
    return predict({b.data(), b.size()}, x, config.tie_to_zero);
}

Prediction TMModel::predict_raw(const std::vector<double>& row) const {
    return predict_bits(binarizer.encode(row));
}

std::string model_to_json(const TMModel& model) {
    json j;
    j["format"] = "tsetlin-model";
    j["version"] = kFormatVersion;
    j["config"] = config_to_json(model.config);
    j["machines"] = json::array();
    for (const Machine& m : model.machines) j["machines"].push_back(machine_to_json(m));
    j["binarizer"] = {{"thresholds", model.binarizer.thresholds}};
    j["class_names"] = model.class_names;
    j["feature_names"] = model.feature_names;
    j["bit_names"] = model.bit_names;
    j["feature_min"] = model.feature_min;
    j["feature_max"] = model.feature_max;
    j["feature_mean"] = model.feature_mean;
    return j.dump(2);
}

TMModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ModelError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        if (j.value("format", "") != "tsetlin-model")
            throw ModelError("not a tsetlin model file (missing format tag)");
        const int version = j.at("version").get<int>();
        if (version != kFormatVersion)
            throw ModelError("unsupported model format version " + std::to_string(version) +
                             " (this build reads version " + std::to_string(kFormatVersion) +
                             ")");
        TMModel model;
        model.config = config_from_json(j.at("config"));
        for (const json& mj : j.at("machines")) model.machines.push_back(machine_from_json(mj));
        if (model.machines.empty()) throw ModelError("model has no machines");
        model.binarizer.thresholds =
            j.at("binarizer").at("thresholds").get<std::vector<std::vector<double>>>();
        model.class_names = j.at("class_names").get<std::vector<std::string>>();
        model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        model.bit_names = j.at("bit_names").get<std::vector<std::string>>();
        model.feature_min = j.at("feature_min").get<std::vector<double>>();
        model.feature_max = j.at("feature_max").get<std::vector<double>>();
        model.feature_mean = j.at("feature_mean").get<std::vector<double>>();

        const int bits = model.binarizer.output_bits();
        for (const Machine& m : model.machines)
            if (m.states.features != bits)
                throw ModelError("machine width does not match the binarizer output");
        return model;
    } catch (const json::exception& e) {
        throw ModelError(std::string("model file is missing fields: ") + e.what());
    }
}

void save_model(const TMModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << model_to_json(model) << '\n';
    if (!out) throw InputError("failed writing '" + path + "'");
}

TMModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

std::size_t machine_payload_bytes(const TMModel& model) {
    json j = json::array();
    for (const Machine& m : model.machines)
        j.push_back({{"states", m.states.states}, {"weights", m.weights}});
    return j.dump().size();
}

}  // namespace tsetlin
