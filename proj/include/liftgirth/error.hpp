#pragma once

#include <stdexcept>
#include <string>

namespace liftgirth {

/// Base of every error thrown by the library. The CLI maps each subclass to
/// its own exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph, lift or map files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A MultiGraph or LiftAssignment whose structure violates its invariants.
class StructuralError : public Error {
public:
    StructuralError(const std::string& what, int edge_id)
        : Error(what + " (edge " + std::to_string(edge_id) + ")"), edge_id_(edge_id) {}
    int edge_id() const noexcept { return edge_id_; }

private:
    int edge_id_;
};

/// An operation was called outside its domain (inadmissible graph, girth below g0, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A randomized procedure ran out of samples or steps.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// An invariant that the algorithm guarantees did not hold.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace liftgirth
