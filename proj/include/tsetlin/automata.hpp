#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tsetlin/rng.hpp"

namespace tsetlin {

// Action selected by one Tsetlin automaton. With N states per action, states
// 1..N mean Exclude and states N+1..2N mean Include.
enum class TaAction : std::uint8_t { Exclude = 0, Include = 1 };

// States of all clauses x literals automata of one class machine, row-major.
// A machine over o features has 2*o literal columns: column k < o is the
// plain input bit x_k, column o + k its negation. Entries stay in [1, 2N].
struct StateMatrix {
    int clauses = 0;
    int features = 0;
    int states_per_action = 0;  // N
    std::vector<std::int32_t> states;

    int columns() const { return 2 * features; }

    std::size_t index(int clause, int literal) const {
        return static_cast<std::size_t>(clause) * static_cast<std::size_t>(columns()) +
               static_cast<std::size_t>(literal);
    }

    std::int32_t at(int clause, int literal) const { return states[index(clause, literal)]; }
    std::int32_t& at(int clause, int literal) { return states[index(clause, literal)]; }
};

// Per-step feedback flags, one matrix per move direction. For a single
// training step at most one flag is set per cell: ia drives a state up
// (deeper include), ib down, ii up via false-positive suppression.
struct FeedbackMatrices {
    int clauses = 0;
    int columns = 0;
    std::vector<std::uint8_t> ia;
    std::vector<std::uint8_t> ib;
    std::vector<std::uint8_t> ii;

    FeedbackMatrices() = default;
    FeedbackMatrices(int n_clauses, int n_columns);

    std::size_t index(int clause, int literal) const {
        return static_cast<std::size_t>(clause) * static_cast<std::size_t>(columns) +
               static_cast<std::size_t>(literal);
    }
};

// Fresh state matrix with every automaton placed uniformly on one of the two
// states adjacent to the decision boundary, N or N+1, so initial actions are
// an unbiased coin flip and one step of feedback can change them. Clause
// count must be even (clause polarity alternates by index) and positive, as
// must features and states_per_action. Throws std::invalid_argument.
StateMatrix init_states(int clauses, int features, int states_per_action, RandomSource& rng);

// State-to-action map: Include iff state > N. Throws std::out_of_range when
// the state has left [1, 2N].
TaAction ta_action(std::int32_t state, int states_per_action);

// One learning step over the whole matrix: a + ii + ia - ib, every entry then
// clipped back into [1, 2N]. Pure: returns the moved copy. Dimension
// mismatches throw std::invalid_argument.
StateMatrix apply_feedback(const StateMatrix& a, const FeedbackMatrices& f);

}  // namespace tsetlin
