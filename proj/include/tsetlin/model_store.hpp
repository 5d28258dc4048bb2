#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsetlin/binarize.hpp"
#include "tsetlin/config.hpp"
#include "tsetlin/model.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

// A trained model ready for inference: one machine per class (a single
// machine for binary problems), the binarizer it was trained through, and
// enough dataset metadata to read raw rows and print readable output.
struct TMModel {
    TMConfig config;
    std::vector<Machine> machines;
    Binarizer binarizer;
    std::vector<std::string> class_names;
    std::vector<std::string> feature_names;      // raw CSV columns
    std::vector<std::string> bit_names;          // one per encoded bit
    std::vector<double> feature_min, feature_max, feature_mean;  // training ranges

    bool binary() const { return machines.size() == 1; }
    int n_classes() const { return binary() ? 2 : static_cast<int>(machines.size()); }
    int input_bits() const { return machines.empty() ? 0 : machines.front().features(); }

    std::vector<ClauseBank> banks() const;
    Prediction predict_bits(const BitVector& x) const;
    Prediction predict_raw(const std::vector<double>& row) const;
};

// Versioned JSON round trip. load/from throw ModelError on anything that is
// not a well-formed model file of the current format version.
std::string model_to_json(const TMModel& model);
TMModel model_from_json(const std::string& text);
void save_model(const TMModel& model, const std::string& path);
TMModel load_model(const std::string& path);

// Size of the learned parameters alone (states and weights of every machine)
// in serialized form; the memory-footprint figure reported by the bench.
std::size_t machine_payload_bytes(const TMModel& model);

}  // namespace tsetlin
