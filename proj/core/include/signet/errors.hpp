#pragma once

#include <stdexcept>
#include <string>

namespace signet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A matrix entry or input value is NaN or infinite.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// Operands have incompatible dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value fails a domain precondition (invalid parameter, bad config field).
class DomainError : public Error {
public:
    using Error::Error;
};

/// One integration step moved an entry by more than blowup_threshold/2.
class StepTooLargeError : public Error {
public:
    using Error::Error;
};

/// Leading eigenvalue is (numerically) degenerate; the dependent result is ill-defined.
class DegenerateEigenvalueError : public Error {
public:
    using Error::Error;
};

/// Modularity matrix is undefined because the network has no weight at all.
class AllZeroNetworkError : public Error {
public:
    using Error::Error;
};

/// Null-model ensemble produced zero mean imbalance.
class DegenerateNullError : public Error {
public:
    using Error::Error;
};

/// Bifurcation formula requires a positive leading eigenvalue.
class NonPositiveEigenvalueError : public Error {
public:
    using Error::Error;
};

/// Requested fixed-point branch does not exist past the saddle-node point.
class BeyondBifurcationError : public Error {
public:
    using Error::Error;
};

/// The unperturbed system is already past the peace-to-war threshold.
class AlreadyUnstableError : public Error {
public:
    using Error::Error;
};

/// The perturbed bias matrix stays below the destabilization threshold.
class NotDestabilizingError : public Error {
public:
    using Error::Error;
};

/// Transient never decayed below the recovery window threshold.
class DidNotRecoverError : public Error {
public:
    using Error::Error;
};

/// Too few usable points for a fit.
class InsufficientPointsError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Carries a 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(-1) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Same dyad appears twice within one layer.
class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

/// Operation requires at least one record.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Bad command-line / config-file input. CLI maps this to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File system failure. CLI maps this to exit code 4.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace signet
