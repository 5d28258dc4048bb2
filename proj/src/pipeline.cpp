#include "tsetlin/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <utility>

#include "tsetlin/errors.hpp"
#include "tsetlin/interpret.hpp"

namespace tsetlin {

namespace {

void column_ranges(const RawData& raw, TMModel& model) {
    const std::size_t n_features = raw.rows.front().size();
    model.feature_min.assign(n_features, std::numeric_limits<double>::max());
    model.feature_max.assign(n_features, std::numeric_limits<double>::lowest());
    model.feature_mean.assign(n_features, 0.0);
    for (const auto& row : raw.rows) {
        for (std::size_t f = 0; f < n_features; ++f) {
            model.feature_min[f] = std::min(model.feature_min[f], row[f]);
            model.feature_max[f] = std::max(model.feature_max[f], row[f]);
            model.feature_mean[f] += row[f];
        }
    }
    for (double& m : model.feature_mean) m /= static_cast<double>(raw.rows.size());
}

// Machines + telemetry for an encoded training set, binary or one-vs-rest.
std::pair<std::vector<Machine>, std::vector<TrainHistory>> fit_machines(
    const Dataset& data, const TMConfig& cfg, const EpochMonitor& monitor) {
    if (data.n_classes < 2) throw InputError("training data has fewer than two classes");
    if (data.n_classes == 2) {
        auto [machine, history] = train_binary(data, cfg, monitor);
        std::vector<Machine> machines;
        machines.push_back(std::move(machine));
        std::vector<TrainHistory> histories;
        histories.push_back(std::move(history));
        return {std::move(machines), std::move(histories)};
    }
    OneVsRestResult r = fit_one_vs_rest(data, cfg, monitor);
    return {std::move(r.machines), std::move(r.histories)};
}

double dataset_accuracy(const TMModel& model, const Dataset& data) {
    const std::vector<ClauseBank> banks = model.banks();
    return accuracy({banks.data(), banks.size()}, data, model.config.tie_to_zero);
}

Dataset encode_with(const TMModel& model, const RawData& raw) {
    Dataset data = encode_all(raw, model.binarizer);
    if (data.n_classes < model.n_classes()) data.n_classes = model.n_classes();
    return data;
}

}  // namespace

TrainReport train_model(const RawData& raw, const TrainOptions& opt,
                        const EpochMonitor& monitor) {
    opt.config.validate();
    if (raw.rows.empty()) throw InputError("no training rows");
    if (opt.bits_per_feature < 1) throw InputError("bits per feature must be >= 1");
    if (opt.test_fraction < 0.0 || opt.test_fraction >= 1.0)
        throw InputError("test fraction must be in [0, 1)");
    if (raw.class_names.size() < 2) throw InputError("training data has fewer than two classes");

    auto [train_idx, test_idx] = stratified_split(raw.labels, opt.test_fraction, opt.config.seed);
    if (train_idx.empty()) throw InputError("split left no training rows");
    const RawData train_raw = take_rows(raw, train_idx);
    const RawData test_raw = take_rows(raw, test_idx);

    TrainReport report;
    report.train_size = static_cast<int>(train_idx.size());
    report.test_size = static_cast<int>(test_idx.size());
    report.has_test = !test_idx.empty();

    TMModel& model = report.model;
    model.config = opt.config;
    model.binarizer = fit_thresholds(train_raw.rows, opt.bits_per_feature, &report.warnings);
    if (model.binarizer.output_bits() == 0)
        throw InputError("binarization produced no bits; every feature is constant");
    model.class_names = raw.class_names;
    model.feature_names = raw.feature_names;
    column_ranges(train_raw, model);

    const Dataset train = encode_all(train_raw, model.binarizer);
    model.bit_names = train.feature_names;

    auto [machines, histories] = fit_machines(train, opt.config, monitor);
    model.machines = std::move(machines);
    report.histories = std::move(histories);

    report.train_accuracy = dataset_accuracy(model, train);
    if (report.has_test) report.test_accuracy = evaluate(model, test_raw);
    return report;
}

double evaluate(const TMModel& model, const RawData& raw) {
    if (raw.rows.empty()) throw InputError("no rows to evaluate");
    const Dataset data = encode_with(model, raw);
    return dataset_accuracy(model, data);
}

std::vector<std::vector<int>> confusion(const TMModel& model, const RawData& raw) {
    const int k = model.n_classes();
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(k),
                                         std::vector<int>(static_cast<std::size_t>(k), 0));
    for (std::size_t i = 0; i < raw.rows.size(); ++i) {
        const int predicted = model.predict_raw(raw.rows[i]).label;
        counts.at(static_cast<std::size_t>(raw.labels[i]))
            .at(static_cast<std::size_t>(predicted))++;
    }
    return counts;
}

std::vector<BenchRow> run_bench(const RawData& raw, const BenchOptions& opt) {
    if (opt.epoch_cap < 1) throw InputError("bench epoch cap must be >= 1");
    if (opt.s_values.empty() || opt.seeds.empty())
        throw InputError("bench needs at least one s value and one seed");

    std::vector<BenchRow> rows;
    for (double s : opt.s_values) {
        for (std::uint64_t seed : opt.seeds) {
            TrainOptions run = opt.base;
            run.config.s = s;
            run.config.seed = seed;
            run.config.epochs = opt.epoch_cap;

            auto [train_idx, test_idx] =
                stratified_split(raw.labels, run.test_fraction, run.config.seed);
            if (train_idx.empty() || test_idx.empty())
                throw InputError("bench needs both training and test rows; "
                                 "raise the test fraction or the dataset size");
            const RawData train_raw = take_rows(raw, train_idx);
            const RawData test_raw = take_rows(raw, test_idx);

            TMModel model;
            model.config = run.config;
            model.binarizer = fit_thresholds(train_raw.rows, run.bits_per_feature);
            if (model.binarizer.output_bits() == 0)
                throw InputError("binarization produced no bits; every feature is constant");
            model.class_names = raw.class_names;
            model.feature_names = raw.feature_names;
            column_ranges(train_raw, model);

            const Dataset train = encode_all(train_raw, model.binarizer);
            model.bit_names = train.feature_names;
            const Dataset test = encode_with(model, test_raw);

            BenchRow row;
            row.s = s;
            row.seed = seed;
            row.epochs_to_target = opt.epoch_cap;

            const auto started = std::chrono::steady_clock::now();
            const EpochMonitor monitor = [&](int epoch, std::span<const Machine> machines) {
                std::vector<ClauseBank> banks;
                banks.reserve(machines.size());
                for (const Machine& m : machines) banks.push_back(m.bank());
                row.test_accuracy =
                    accuracy({banks.data(), banks.size()}, test, run.config.tie_to_zero);
                if (row.test_accuracy >= opt.target_accuracy) {
                    row.reached = true;
                    row.epochs_to_target = epoch + 1;
                    return true;
                }
                return false;
            };

            auto [machines, histories] = fit_machines(train, run.config, monitor);
            row.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                    .count();

            model.machines = std::move(machines);
            row.model_bytes = machine_payload_bytes(model);
            double len_sum = 0.0;
            for (const Machine& m : model.machines)
                len_sum += clause_length_stats(m).mean_all;
            row.mean_clause_len = len_sum / static_cast<double>(model.machines.size());
            rows.push_back(row);
        }
    }
    return rows;
}

double median(std::vector<double> values) {
    if (values.empty()) throw InputError("median of an empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace tsetlin
