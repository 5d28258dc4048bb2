#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsetlin/model.hpp"
#include "tsetlin/rng.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin::test {

// Replays a fixed list of unit-interval draws, so a test can force every
// Bernoulli and table decision. u64 draws (shuffling) fall back to a seeded
// engine and are not counted.
class ScriptedRng final : public RandomSource {
public:
    explicit ScriptedRng(std::vector<double> units, std::uint64_t fallback_seed = 7)
        : units_(std::move(units)), fallback_(fallback_seed) {}

    std::uint64_t next_u64() override { return fallback_.next_u64(); }

    double next_unit() override {
        if (cursor_ >= units_.size())
            throw std::runtime_error("ScriptedRng: script exhausted after " +
                                     std::to_string(units_.size()) + " draws");
        return units_[cursor_++];
    }

    std::size_t consumed() const { return cursor_; }

private:
    std::vector<double> units_;
    std::size_t cursor_ = 0;
    Rng fallback_;
};

inline Dataset xor_dataset() {
    Dataset d;
    d.samples = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    d.labels = {0, 1, 1, 0};
    d.n_classes = 2;
    d.class_names = {"0", "1"};
    d.feature_names = {"x1", "x2"};
    return d;
}

inline Dataset and_dataset() {
    Dataset d;
    d.samples = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    d.labels = {0, 0, 0, 1};
    d.n_classes = 2;
    d.class_names = {"0", "1"};
    d.feature_names = {"x1", "x2"};
    return d;
}

// Bank straight from include masks; `include_ids` holds literal ids per
// clause (k < features: x_k, k >= features: its negation).
inline ClauseBank bank_from_ids(int features, const std::vector<std::vector<int>>& include_ids,
                                std::vector<std::int32_t> weights) {
    ClauseBank bank;
    bank.clauses = static_cast<int>(include_ids.size());
    bank.features = features;
    bank.weights = std::move(weights);
    bank.include.assign(static_cast<std::size_t>(bank.clauses) *
                            static_cast<std::size_t>(2 * features),
                        0);
    for (std::size_t i = 0; i < include_ids.size(); ++i)
        for (int id : include_ids[i])
            bank.include[i * static_cast<std::size_t>(2 * features) +
                         static_cast<std::size_t>(id)] = 1;
    return bank;
}

// Machine whose actions mirror `include_ids`: included cells sit at N+1,
// excluded ones at N.
inline Machine machine_from_ids(int features, int states_per_action,
                                const std::vector<std::vector<int>>& include_ids,
                                std::vector<std::int32_t> weights, int t_margin) {
    Machine m;
    m.states.clauses = static_cast<int>(include_ids.size());
    m.states.features = features;
    m.states.states_per_action = states_per_action;
    m.states.states.assign(static_cast<std::size_t>(m.states.clauses) *
                               static_cast<std::size_t>(2 * features),
                           states_per_action);
    for (std::size_t i = 0; i < include_ids.size(); ++i)
        for (int id : include_ids[i]) m.states.at(static_cast<int>(i), id) = states_per_action + 1;
    m.weights = std::move(weights);
    m.t_margin = t_margin;
    return m;
}

// Uniformly random machine for fuzzing: states anywhere in [1, 2N], weights
// in [0, 5].
inline Machine random_machine(int clauses, int features, int states_per_action,
                              RandomSource& rng) {
    Machine m;
    m.states.clauses = clauses;
    m.states.features = features;
    m.states.states_per_action = states_per_action;
    m.states.states.resize(static_cast<std::size_t>(clauses) *
                           static_cast<std::size_t>(2 * features));
    for (auto& s : m.states.states)
        s = 1 + static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(
                2 * states_per_action)));
    m.weights.resize(static_cast<std::size_t>(clauses));
    for (auto& w : m.weights) w = static_cast<std::int32_t>(rng.below(6));
    m.t_margin = 1 + static_cast<int>(rng.below(10));
    return m;
}

inline BitVector random_bits(int n, RandomSource& rng) {
    BitVector x(static_cast<std::size_t>(n));
    for (auto& b : x) b = static_cast<std::uint8_t>(rng.below(2));
    return x;
}

inline std::string data_dir() {
#ifdef TM_DATA_DIR
    return TM_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace tsetlin::test
