#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsetlin/model.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

// Conjunction of literal ids (0..2o-1, negations in the upper half), sorted
// ascending and unique. No literals means the constant-true conjunction.
struct Term {
    std::vector<int> ids;

    bool is_true() const { return ids.empty(); }
    bool operator==(const Term&) const = default;
};

// OR over terms; no terms means the constant-false expression, and any
// constant-true term makes the whole expression true.
struct DnfExpression {
    int arity = 0;  // number of raw input bits o
    std::vector<Term> terms;

    bool operator==(const DnfExpression&) const = default;
};

// The conjunction a clause's include row encodes. nullopt when the row
// includes some literal together with its negation: such a clause can never
// fire and has no propositional reading.
std::optional<Term> extract_term(std::span<const std::uint8_t> include_row, int features);

// DNF over the class's strongest evidence: positive-polarity clauses with
// weight > 0 that can actually fire at inference (non-empty, consistent
// include sets), ranked by weight descending with ties to the lower clause
// index, the top_k of them OR-ed together and simplified. `picked`, when
// given, receives the chosen clause indices in rank order.
DnfExpression class_dnf(const Machine& m, int top_k = 10, std::vector<int>* picked = nullptr);

// Equivalence-preserving cleanup to a fixpoint: drops inconsistent and
// duplicate terms, absorbs supersets (t subset of u makes u redundant), and
// resolves against single-literal terms (given the term {a}, any other term
// may drop a literal "not a").
DnfExpression simplify(DnfExpression e);

// Truth value on an input bit vector of length arity.
bool eval_dnf(const DnfExpression& e, const BitVector& x);

// Exhaustive truth-table comparison; arity is capped at 20 bits (throws
// std::invalid_argument beyond, over a million rows).
bool equivalent(const DnfExpression& a, const DnfExpression& b);

// Include-count statistics over a machine's clauses, split by polarity.
struct ClauseLengthStats {
    double mean_pos = 0.0;
    double mean_neg = 0.0;
    double mean_all = 0.0;
    int max_pos = 0;
    int max_neg = 0;
};

ClauseLengthStats clause_length_stats(const Machine& m);

// Text form: "x1 ∧ ¬x3 ∨ x0" with 0-based bit indices, literals ordered by
// feature. Constant true renders as "⊤", constant false as "⊥". When bit
// names are supplied (from Dataset::feature_names), they replace the xK
// tokens.
std::string render(const Term& t, int arity, std::span<const std::string> names = {});
std::string render(const DnfExpression& e, std::span<const std::string> names = {});

// Inverse of render for the xK form (also accepts ASCII "!xK", "&", "|").
// Throws InputError on malformed input or indices outside the arity.
DnfExpression parse_dnf(const std::string& text, int arity);

// Signed 1-based ids for serialization: +(k+1) encodes bit k, -(k+1) its
// negation. Terms keep their order; ids are sorted by feature.
std::vector<std::vector<int>> to_signed_ids(const DnfExpression& e);
DnfExpression from_signed_ids(const std::vector<std::vector<int>>& terms, int arity);

}  // namespace tsetlin
