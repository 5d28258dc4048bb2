#include "tsetlin/model.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tsetlin {

BitVector literals(const BitVector& x) {
    BitVector lit(2 * x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        lit[k] = x[k] ? 1 : 0;
        lit[x.size() + k] = x[k] ? 0 : 1;
    }
    return lit;
}

bool eval_clause(std::span<const std::uint8_t> include_row, const BitVector& lit, EvalMode mode) {
    if (include_row.size() != lit.size())
        throw std::invalid_argument("eval_clause: literal width " + std::to_string(lit.size()) +
                                    " does not match clause width " +
                                    std::to_string(include_row.size()));
    bool any_include = false;
    for (std::size_t k = 0; k < lit.size(); ++k) {
        if (!include_row[k]) continue;
        any_include = true;
        if (!lit[k]) return false;
    }
    if (!any_include) return mode == EvalMode::Train;
    return true;
}

ClauseBank ClauseBank::from_states(const StateMatrix& a, std::vector<std::int32_t> weights) {
    if (static_cast<int>(weights.size()) != a.clauses)
        throw std::invalid_argument("ClauseBank: need one weight per clause");
    for (std::int32_t w : weights)
        if (w < 0) throw std::invalid_argument("ClauseBank: weights must be >= 0");

    ClauseBank bank;
    bank.clauses = a.clauses;
    bank.features = a.features;
    bank.weights = std::move(weights);
    bank.include.resize(a.states.size());
    for (std::size_t i = 0; i < a.states.size(); ++i)
        bank.include[i] = ta_action(a.states[i], a.states_per_action) == TaAction::Include;
    return bank;
}

std::span<const std::uint8_t> ClauseBank::include_row(int clause) const {
    const std::size_t cols = static_cast<std::size_t>(2 * features);
    return {include.data() + static_cast<std::size_t>(clause) * cols, cols};
}

std::int64_t vote_sum(const ClauseBank& bank, const BitVector& lit, EvalMode mode) {
    std::int64_t v = 0;
    for (int i = 0; i < bank.clauses; ++i) {
        if (!eval_clause(bank.include_row(i), lit, mode)) continue;
        v += static_cast<std::int64_t>(bank.polarity(i)) * bank.weights[i];
    }
    return v;
}

Prediction predict(std::span<const ClauseBank> banks, const BitVector& x, bool tie_to_zero) {
    if (banks.empty()) throw std::invalid_argument("predict: no clause banks");

    const BitVector lit = literals(x);
    Prediction p;
    p.votes.reserve(banks.size());
    for (const ClauseBank& bank : banks) p.votes.push_back(vote_sum(bank, lit, EvalMode::Infer));

    if (banks.size() == 1) {
        const std::int64_t cut = tie_to_zero ? 1 : 0;
        p.label = p.votes[0] >= cut ? 1 : 0;
        return p;
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < p.votes.size(); ++c)
        if (p.votes[c] > p.votes[best]) best = c;
    p.label = static_cast<int>(best);
    return p;
}

}  // namespace tsetlin
