#include "tsetlin/automata.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tsetlin {

FeedbackMatrices::FeedbackMatrices(int n_clauses, int n_columns)
    : clauses(n_clauses),
      columns(n_columns),
      ia(static_cast<std::size_t>(n_clauses) * static_cast<std::size_t>(n_columns), 0),
      ib(ia.size(), 0),
      ii(ia.size(), 0) {}

StateMatrix init_states(int clauses, int features, int states_per_action, RandomSource& rng) {
    if (clauses <= 0 || features <= 0 || states_per_action <= 0)
        throw std::invalid_argument("init_states: dimensions must be positive");
    if (clauses % 2 != 0)
        throw std::invalid_argument(
            "init_states: clause count must be even, got " + std::to_string(clauses));

    StateMatrix a;
    a.clauses = clauses;
    a.features = features;
    a.states_per_action = states_per_action;
    a.states.resize(static_cast<std::size_t>(clauses) * static_cast<std::size_t>(a.columns()));
    const std::int32_t n = states_per_action;
    for (auto& s : a.states) s = n + static_cast<std::int32_t>(rng.below(2));
    return a;
}

TaAction ta_action(std::int32_t state, int states_per_action) {
    if (state < 1 || state > 2 * states_per_action)
        throw std::out_of_range("ta_action: state " + std::to_string(state) +
                                " outside [1, " + std::to_string(2 * states_per_action) + "]");
    return state > states_per_action ? TaAction::Include : TaAction::Exclude;
}

StateMatrix apply_feedback(const StateMatrix& a, const FeedbackMatrices& f) {
    if (f.clauses != a.clauses || f.columns != a.columns())
        throw std::invalid_argument("apply_feedback: matrix shapes differ");

    StateMatrix out = a;
    const std::int32_t lo = 1;
    const std::int32_t hi = 2 * a.states_per_action;
    for (std::size_t i = 0; i < out.states.size(); ++i) {
        std::int32_t s = out.states[i] + f.ii[i] + f.ia[i] - f.ib[i];
        out.states[i] = std::clamp(s, lo, hi);
    }
    return out;
}

}  // namespace tsetlin
