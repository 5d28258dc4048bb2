#pragma once

#include <cstdint>
#include <vector>

#include "tsetlin/automata.hpp"
#include "tsetlin/config.hpp"
#include "tsetlin/model.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

enum class Outcome : std::uint8_t { Reward, Inaction, Penalty };

// Reward/inaction/penalty distribution of one feedback table cell. Inaction
// is stored as the complement of the other two so the three always sum to
// exactly 1.0.
struct FeedbackProbs {
    double reward = 0.0;
    double inaction = 1.0;
    double penalty = 0.0;
};

// Type I feedback table: reinforces clauses toward matching patterns. Keyed
// by the clause output, the literal value and the automaton's current
// action; s >= 1 is the specificity. The cell (clause=1, literal=0,
// Include) cannot occur, because an included false literal forces the clause
// to 0; asking for it throws std::logic_error. With boost_true_positive the
// two (clause=1, literal=1) cells escalate to certainty: reward 1 on
// Include, penalty 1 on Exclude.
FeedbackProbs type_i_probs(bool clause_out, bool literal, TaAction action, double s,
                           bool boost_true_positive);

// Type II feedback table: combats false positives by pushing excluded false
// literals toward inclusion (penalty 1 on the (clause=1, literal=0, Exclude)
// cell). Every other reachable cell is pure inaction; (clause=1, literal=0,
// Include) is impossible and throws std::logic_error.
FeedbackProbs type_ii_probs(bool clause_out, bool literal, TaAction action);

// Draws one outcome from the distribution. Consumes exactly one unit draw
// regardless of the cell's probabilities.
Outcome sample_outcome(const FeedbackProbs& probs, RandomSource& rng);

// State move of an outcome: a reward deepens the current action, a penalty
// pushes toward the opposite one, inaction holds. +1 is toward Include.
int state_delta(Outcome outcome, TaAction action);

// Clause update probability from the voting error. The vote is clamped to
// [-T, T] first; then p = (T - v) / 2T for a positive target and
// p = (T + v) / 2T for a negative one, so clauses stop receiving feedback
// once the vote sum has safely cleared the margin.
double feedback_probability(std::int64_t vote, int t_margin, bool y);

// Everything one training step decides before any state is touched.
struct FeedbackDecision {
    std::vector<std::uint8_t> selected;    // per clause: won the Bernoulli draw
    std::vector<std::uint8_t> clause_out;  // per clause: fired on this sample (Train mode)
    std::int64_t vote = 0;                 // weighted sum the selection was based on
    double probability = 0.0;              // the Bernoulli parameter used
    FeedbackMatrices moves;
};

// Runs the per-clause selection and per-literal table sampling for one
// (sample, target) pair. Draw order is fixed: one selection draw per clause
// in index order, then, immediately after a clause wins selection, one draw
// per literal cell that needs sampling. Type I touches all 2*o cells of the
// clause; Type II touches them only when the clause fired (its cells are
// deterministic but still cost one draw each, keeping the cost of a cell
// uniform); a selected non-firing clause under Type II consumes nothing
// beyond its selection draw.
FeedbackDecision decide_feedback(const ClauseBank& bank, const StateMatrix& states,
                                 const BitVector& lit, bool y, const TMConfig& cfg,
                                 RandomSource& rng);

// decide_feedback reduced to the state moves.
FeedbackMatrices sample_feedback(const ClauseBank& bank, const StateMatrix& states,
                                 const BitVector& lit, bool y, const TMConfig& cfg,
                                 RandomSource& rng);

}  // namespace tsetlin
