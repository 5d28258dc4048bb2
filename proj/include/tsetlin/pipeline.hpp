#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsetlin/binarize.hpp"
#include "tsetlin/config.hpp"
#include "tsetlin/model_store.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

// End-to-end training knobs on top of the core hyperparameters.
struct TrainOptions {
    TMConfig config;
    int bits_per_feature = 4;
    double test_fraction = 0.2;  // 0 trains on everything
    std::string label_column;    // empty: last CSV column
};

struct TrainReport {
    TMModel model;
    std::vector<TrainHistory> histories;  // one per machine
    std::vector<std::string> warnings;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    bool has_test = false;
    int train_size = 0;
    int test_size = 0;
};

// Stratified split, thresholds fitted on the training side only, then one
// machine (two classes) or one per class. Throws InputError on unusable
// data (fewer than two classes, empty training side, and the like). The
// monitor, when given, is forwarded to the fit loop.
TrainReport train_model(const RawData& raw, const TrainOptions& opt,
                        const EpochMonitor& monitor = nullptr);

// Accuracy of a trained model on raw rows.
double evaluate(const TMModel& model, const RawData& raw);

// Row-per-class confusion counts; entry [a][p] counts label a predicted p.
std::vector<std::vector<int>> confusion(const TMModel& model, const RawData& raw);

struct BenchOptions {
    TrainOptions base;
    std::vector<double> s_values = {2.0, 10.0};
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    double target_accuracy = 0.95;
    int epoch_cap = 1000;
};

// One bench measurement: a full training run at one (s, seed) pair.
struct BenchRow {
    double s = 0.0;
    std::uint64_t seed = 0;
    int epochs_to_target = 0;  // epoch count when test accuracy first hit the target
    bool reached = false;      // false: capped out, epochs_to_target == epoch_cap
    double seconds = 0.0;      // wall time of the training loop
    std::size_t model_bytes = 0;
    double test_accuracy = 0.0;  // where training stopped
    double mean_clause_len = 0.0;
};

// Trains to the target test accuracy (or the epoch cap) for every (s, seed)
// combination, reporting convergence speed and serialized model size.
std::vector<BenchRow> run_bench(const RawData& raw, const BenchOptions& opt);

// Median of an unsorted sample (mean of the middle two on even sizes).
double median(std::vector<double> values);

}  // namespace tsetlin
