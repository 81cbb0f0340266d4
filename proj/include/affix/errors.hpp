#pragma once

#include <stdexcept>
#include <string>

namespace affix {

/// Malformed input: unknown symbol, out-of-range state, bad file, clashing alphabet.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A search ran past its SearchBudget before reaching a verdict.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace affix
