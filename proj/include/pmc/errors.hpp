#ifndef PMC_ERRORS_HPP
#define PMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pmc {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix/vector shapes do not line up.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Linear system has no unique rational solution.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// A word contains a symbol outside the automaton's alphabet.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// Reference to a state that does not exist in the model.
class StateError : public Error {
public:
    using Error::Error;
};

/// A depth bound is too small for the requested computation.
class BoundError : public Error {
public:
    using Error::Error;
};

/// A path uses a transition the model does not have.
class PathError : public Error {
public:
    using Error::Error;
};

/// Model checking was asked for a path formula outside the supported fragment.
class UnsupportedFragmentError : public Error {
public:
    using Error::Error;
};

/// A construction that needs a nonempty word was given the empty word.
class EmptyWordError : public Error {
public:
    using Error::Error;
};

/// Epsilon rules diverge (cycle or unbounded counter growth) with positive mass.
class EpsilonCycleError : public Error {
public:
    using Error::Error;
};

/// A model violates its construction invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Text input rejected; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace pmc

#endif
