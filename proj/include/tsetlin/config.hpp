#pragma once

#include <cstdint>

namespace tsetlin {

// Hyperparameters of one training run. Defaults are sensible for small
// binary problems; real datasets usually want more clauses and epochs.
struct TMConfig {
    int n_clauses = 20;           // even; polarity alternates with the index
    int t_margin = 15;            // voting target T >= 1
    double s = 3.0;               // specificity >= 1; larger s keeps more literals
    int states_per_action = 100;  // N; automaton states span [1, 2N]
    bool boost_true_positive = false;  // certainty 1 on true-positive include cells
    bool learnable_t = false;          // anneal T with prediction correctness
    bool tie_to_zero = true;           // binary decision: predict 1 iff vote >= 1
    std::uint64_t seed = 42;
    int epochs = 100;
    std::int32_t initial_weight = 1;

    // Throws InputError on out-of-range values.
    void validate() const;
};

}  // namespace tsetlin
