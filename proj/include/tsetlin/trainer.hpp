#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tsetlin/automata.hpp"
#include "tsetlin/config.hpp"
#include "tsetlin/feedback.hpp"
#include "tsetlin/model.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

// Binarized training set. Labels are dense class ids starting at 0.
struct Dataset {
    std::vector<BitVector> samples;
    std::vector<int> labels;
    int n_classes = 0;
    std::vector<std::string> feature_names;  // one per bit column
    std::vector<std::string> class_names;
};

// One trainable class machine: automaton states, clause weights, and the
// voting margin (a copy of the configured T unless learnable_t moves it).
struct Machine {
    StateMatrix states;
    std::vector<std::int32_t> weights;
    int t_margin = 0;

    int clauses() const { return states.clauses; }
    int features() const { return states.features; }

    // Action/weight snapshot for evaluation.
    ClauseBank bank() const { return ClauseBank::from_states(states, weights); }
};

// Boundary-initialized machine drawing from `rng`.
Machine make_machine(const TMConfig& cfg, int features, RandomSource& rng);

// How a clause's step went, as seen by the weight update: it was selected
// and fired with the right polarity for the target (TruePositive), with the
// wrong one (FalsePositive), or it was not selected or did not fire (NoFire).
enum class WeightEvent : std::uint8_t { TruePositive, FalsePositive, NoFire };

// Unit-step stochastic weight learning: +1 on a true positive, -1 on a false
// positive but never below zero, unchanged otherwise.
std::int32_t update_weight(std::int32_t w, WeightEvent event);

// Annealing step for a learnable margin: a correct prediction relaxes T by
// one, a wrong one raises it by one; T never drops below 1.
int update_threshold(int t, bool correct);

// Optional per-step instrumentation captured by fit_sample.
struct StepTrace {
    std::int64_t vote = 0;
    double probability = 0.0;
    std::vector<std::uint8_t> selected;
    std::vector<std::uint8_t> clause_out;
    std::vector<WeightEvent> events;
    std::vector<std::int32_t> weight_delta;
};

// One stochastic gradient step on a single (sample, target) pair: decide
// feedback, update the weights from the same decision, move the automata,
// and optionally anneal T off the pre-update vote.
void fit_sample(Machine& m, const BitVector& x, bool y, const TMConfig& cfg, RandomSource& rng,
                StepTrace* trace = nullptr);

// Per-epoch telemetry of one machine's fit.
struct TrainHistory {
    std::vector<double> accuracy;             // on the training set, Infer mode
    std::vector<double> mean_clause_len_pos;  // includes per positive clause
    std::vector<double> mean_clause_len_neg;
    std::vector<double> mean_weight;

    int epochs() const { return static_cast<int>(accuracy.size()); }
    // Header "epoch,accuracy,mean_clause_len_pos,mean_clause_len_neg,mean_weight".
    std::string to_csv() const;
};

// Called after every epoch with the machines as they stand (one entry for a
// binary fit, one per class otherwise); return true to stop early.
using EpochMonitor = std::function<bool(int epoch, std::span<const Machine> machines)>;

// cfg.epochs passes over `data` (binary labels required), shuffling sample
// order each epoch from the same stream that feeds the feedback draws. Pass
// the stream that initialized the machine to make the whole run a pure
// function of one seed.
TrainHistory fit(Machine& m, const Dataset& data, const TMConfig& cfg, RandomSource& rng,
                 const EpochMonitor& monitor = nullptr);

// Seed stream, boundary init, full fit in one call.
std::pair<Machine, TrainHistory> train_binary(const Dataset& data, const TMConfig& cfg,
                                              const EpochMonitor& monitor = nullptr);

struct OneVsRestResult {
    std::vector<Machine> machines;        // one per class
    std::vector<TrainHistory> histories;  // binary-task telemetry per machine
};

// One machine per class, each trained on labels relabeled to (label == c).
// Every machine draws from its own stream derived from (cfg.seed, c), and
// epochs run in lockstep across classes so the monitor sees the whole
// ensemble after each round.
OneVsRestResult fit_one_vs_rest(const Dataset& data, const TMConfig& cfg,
                                const EpochMonitor& monitor = nullptr);

// Fraction of samples whose multiclass (or binary, for one machine)
// prediction matches the label.
double accuracy(std::span<const ClauseBank> banks, const Dataset& data, bool tie_to_zero = true);

}  // namespace tsetlin
