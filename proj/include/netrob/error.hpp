#pragma once

#include <stdexcept>
#include <string>

namespace netrob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on argument shapes was violated (e.g. mask built for another graph).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A node or edge was queried or attacked after it had already been removed.
class RemovedTargetError : public Error {
public:
    using Error::Error;
};

/// The operation requires a directed (or undirected) graph and got the other kind.
class GraphKindError : public Error {
public:
    using Error::Error;
};

/// Infeasible or out-of-range configuration values.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Input data could not be parsed. Carries the offending line when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// No alive target is left for the attack strategy.
class NoTargetError : public Error {
public:
    using Error::Error;
};

}  // namespace netrob
