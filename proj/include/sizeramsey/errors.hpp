#pragma once

#include <stdexcept>
#include <string>

namespace sizeramsey {

/// Malformed textual input (spec files, rationals, CLI parameters).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size guard refused the instance (LP column cap, injection guards, ...).
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search ran out of its node budget before deciding.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sizeramsey
