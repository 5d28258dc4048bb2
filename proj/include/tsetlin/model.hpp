#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsetlin/automata.hpp"

namespace tsetlin {

// Dense bit vector; one byte per bit keeps indexing trivial.
using BitVector = std::vector<std::uint8_t>;

// A clause with no included literals behaves differently while learning and
// while predicting: during training it outputs 1 so that Type I feedback has
// something to refine, at inference it outputs 0 so that an unlearned clause
// casts no vote.
enum class EvalMode : std::uint8_t { Train, Infer };

// Literal vector of an input: [x_0 .. x_{o-1}, !x_0 .. !x_{o-1}].
BitVector literals(const BitVector& x);

// Index of the complementary literal (x_k <-> !x_k).
inline int complement_literal(int literal, int features) {
    return literal < features ? literal + features : literal - features;
}

// Conjunction over the included literals; excluded positions do not
// constrain the output.
bool eval_clause(std::span<const std::uint8_t> include_row, const BitVector& lit, EvalMode mode);

// Include masks and integer clause weights of one class machine, the
// read-only form used for evaluation. Even clause indices vote for the
// class, odd indices against it.
struct ClauseBank {
    int clauses = 0;
    int features = 0;
    std::vector<std::uint8_t> include;  // clauses x 2*features, row-major
    std::vector<std::int32_t> weights;  // one per clause, always >= 0

    // Snapshot of the current actions of a state matrix.
    static ClauseBank from_states(const StateMatrix& a, std::vector<std::int32_t> weights);

    std::span<const std::uint8_t> include_row(int clause) const;

    int polarity(int clause) const { return clause % 2 == 0 ? +1 : -1; }
};

// Weighted vote: sum of w_i over firing positive clauses minus the same over
// firing negative clauses.
std::int64_t vote_sum(const ClauseBank& bank, const BitVector& lit, EvalMode mode);

struct Prediction {
    std::vector<std::int64_t> votes;  // one entry per bank
    int label = 0;
};

// Inference over one bank (binary: label 1 iff the vote clears the tie rule,
// v >= 1 under tie_to_zero, else v >= 0) or several (one-vs-rest: argmax of
// the vote sums, ties resolved to the lowest class id).
Prediction predict(std::span<const ClauseBank> banks, const BitVector& x, bool tie_to_zero = true);

}  // namespace tsetlin
