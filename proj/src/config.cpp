#include "tsetlin/config.hpp"

#include <string>

#include "tsetlin/errors.hpp"

namespace tsetlin {

void TMConfig::validate() const {
    if (n_clauses <= 0 || n_clauses % 2 != 0)
        throw InputError("clauses must be a positive even number, got " +
                         std::to_string(n_clauses));
    if (t_margin < 1)
        throw InputError("T must be >= 1, got " + std::to_string(t_margin));
    if (s < 1.0)
        throw InputError("s must be >= 1, got " + std::to_string(s));
    if (states_per_action < 1)
        throw InputError("state count must be >= 2 and even, got " +
                         std::to_string(2 * states_per_action));
    if (epochs < 0)
        throw InputError("epochs must be >= 0, got " + std::to_string(epochs));
    if (initial_weight < 0)
        throw InputError("initial weight must be >= 0, got " +
                         std::to_string(initial_weight));
}

}  // namespace tsetlin
