#pragma once

#include <stdexcept>
#include <string>

namespace tsetlin {

// User-facing failure classes. The CLI maps InputError to exit code 2 and
// ModelError to exit code 3; anything else escaping is a programming error.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsetlin
