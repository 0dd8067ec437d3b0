#pragma once

#include <stdexcept>
#include <string>

namespace lpc {

/// A construction or operation was called with parameters outside its domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A received word could not be mapped back to a codeset.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The word is not a codeword of the code it was given to (wrong weight, bad column layout, ...).
class MalformedCodeword : public DecodeError {
public:
    using DecodeError::DecodeError;
};

/// Exhaustive work would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A code or mapping file does not match its schema or violates an invariant.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lpc
