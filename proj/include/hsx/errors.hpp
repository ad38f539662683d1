#pragma once

#include <stdexcept>
#include <string>

namespace hsx {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (bad hypergraph, bad level, bad set, ...).
/// Maps to process exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured size limit was exceeded (face budget, oracle vertex cap,
/// splittability enumeration cap). Maps to process exit code 3.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace hsx
