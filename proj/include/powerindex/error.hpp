#ifndef POWERINDEX_ERROR_HPP
#define POWERINDEX_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator or operation was given a size outside its domain.
class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

/// A vertex id does not name a vertex of the graph.
class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

/// w lies outside [1/2, 1), or was not given as an exact fraction.
class InvalidWinConditionError : public Error {
 public:
  using Error::Error;
};

/// diameter() on a disconnected graph.
class InfiniteDiameterError : public Error {
 public:
  using Error::Error;
};

/// An operation needed vertex labels the graph does not carry.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A wave descriptor violates the interrupter parity constraint.
class InvalidWaveError : public Error {
 public:
  using Error::Error;
};

/// A configuration does not fit the graph it is paired with.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// The requested threshold mode is not meaningful for the operation.
class UnsupportedModeError : public Error {
 public:
  using Error::Error;
};

/// classify_dominance() was handed a run that exhausted its step budget.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph text. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace powerindex

#endif  // POWERINDEX_ERROR_HPP
