#include "tsetlin/feedback.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tsetlin {

namespace {

FeedbackProbs make_probs(double reward, double penalty) {
    FeedbackProbs p;
    p.reward = reward;
    p.penalty = penalty;
    p.inaction = 1.0 - reward - penalty;
    return p;
}

[[noreturn]] void impossible_cell(const char* table) {
    throw std::logic_error(std::string(table) +
                           ": cell (clause=1, literal=0, Include) is unreachable; an included "
                           "false literal forces the clause output to 0");
}

}  // namespace

FeedbackProbs type_i_probs(bool clause_out, bool literal, TaAction action, double s,
                           bool boost_true_positive) {
    if (s < 1.0) throw std::invalid_argument("type_i_probs: s must be >= 1");
    const double low = 1.0 / s;         // the rare move
    const double high = (s - 1.0) / s;  // the dominant move

    if (clause_out && literal) {
        // True-positive cell: lock the literal in. reward Include, penalize
        // Exclude; boosting raises both from (s-1)/s to certainty.
        const double p = boost_true_positive ? 1.0 : high;
        return action == TaAction::Include ? make_probs(p, 0.0) : make_probs(0.0, p);
    }
    if (clause_out && !literal) {
        if (action == TaAction::Include) impossible_cell("type_i_probs");
        // Keeping a false literal excluded from a firing clause is mildly
        // rewarded, which erodes the clause toward fewer conditions.
        return make_probs(low, 0.0);
    }
    // Non-firing clause: gently forget. Includes are penalized, excludes
    // rewarded, both at rate 1/s.
    return action == TaAction::Include ? make_probs(0.0, low) : make_probs(low, 0.0);
}

FeedbackProbs type_ii_probs(bool clause_out, bool literal, TaAction action) {
    if (clause_out && !literal) {
        if (action == TaAction::Include) impossible_cell("type_ii_probs");
        // The one active cell: include the literal that would have blocked
        // this false positive.
        return make_probs(0.0, 1.0);
    }
    return make_probs(0.0, 0.0);  // pure inaction
}

Outcome sample_outcome(const FeedbackProbs& probs, RandomSource& rng) {
    const double u = rng.next_unit();
    if (u < probs.reward) return Outcome::Reward;
    if (u < probs.reward + probs.penalty) return Outcome::Penalty;
    return Outcome::Inaction;
}

int state_delta(Outcome outcome, TaAction action) {
    if (outcome == Outcome::Inaction) return 0;
    const bool deepen = outcome == Outcome::Reward;
    const bool include = action == TaAction::Include;
    return (deepen == include) ? +1 : -1;
}

double feedback_probability(std::int64_t vote, int t_margin, bool y) {
    if (t_margin < 1) throw std::invalid_argument("feedback_probability: T must be >= 1");
    const auto t = static_cast<std::int64_t>(t_margin);
    const std::int64_t v = std::clamp(vote, -t, t);
    const std::int64_t gap = y ? t - v : t + v;
    return static_cast<double>(gap) / static_cast<double>(2 * t);
}

FeedbackDecision decide_feedback(const ClauseBank& bank, const StateMatrix& states,
                                 const BitVector& lit, bool y, const TMConfig& cfg,
                                 RandomSource& rng) {
    if (states.clauses != bank.clauses || states.features != bank.features)
        throw std::invalid_argument("decide_feedback: bank and states have different shapes");
    if (static_cast<int>(lit.size()) != states.columns())
        throw std::invalid_argument("decide_feedback: literal vector has wrong width");

    const int cols = states.columns();
    FeedbackDecision dec;
    dec.selected.assign(static_cast<std::size_t>(bank.clauses), 0);
    dec.clause_out.assign(static_cast<std::size_t>(bank.clauses), 0);
    dec.moves = FeedbackMatrices(bank.clauses, cols);

    for (int i = 0; i < bank.clauses; ++i)
        dec.clause_out[i] = eval_clause(bank.include_row(i), lit, EvalMode::Train);
    dec.vote = 0;
    for (int i = 0; i < bank.clauses; ++i)
        if (dec.clause_out[i])
            dec.vote += static_cast<std::int64_t>(bank.polarity(i)) * bank.weights[i];
    dec.probability = feedback_probability(dec.vote, cfg.t_margin, y);

    for (int i = 0; i < bank.clauses; ++i) {
        if (!rng.bernoulli(dec.probability)) continue;
        dec.selected[i] = 1;

        const bool positive = bank.polarity(i) > 0;
        const bool type_one = y == positive;  // concordant clauses learn the pattern
        const bool fired = dec.clause_out[i] != 0;
        if (!type_one && !fired) continue;  // Type II leaves silent clauses alone

        for (int k = 0; k < cols; ++k) {
            const TaAction act = ta_action(states.at(i, k), states.states_per_action);
            const FeedbackProbs probs =
                type_one ? type_i_probs(fired, lit[k], act, cfg.s, cfg.boost_true_positive)
                         : type_ii_probs(fired, lit[k], act);
            const int d = state_delta(sample_outcome(probs, rng), act);
            if (d == 0) continue;
            const std::size_t cell = dec.moves.index(i, k);
            if (type_one) {
                (d > 0 ? dec.moves.ia : dec.moves.ib)[cell] = 1;
            } else {
                dec.moves.ii[cell] = 1;  // Type II only ever moves toward Include
            }
        }
    }
    return dec;
}

FeedbackMatrices sample_feedback(const ClauseBank& bank, const StateMatrix& states,
                                 const BitVector& lit, bool y, const TMConfig& cfg,
                                 RandomSource& rng) {
    return decide_feedback(bank, states, lit, y, cfg, rng).moves;
}

}  // namespace tsetlin
