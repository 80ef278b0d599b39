#ifndef DSG_ERROR_HPP
#define DSG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke an operation's precondition (wrong graph kind, index out of range, bad epsilon).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Density of the empty set is undefined.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

class NoEdgesError : public Error {
 public:
  using Error::Error;
};

/// Instance too large for an exhaustive solver.
class RefusedError : public Error {
 public:
  using Error::Error;
};

class EmptyPredictionError : public Error {
 public:
  using Error::Error;
};

class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace detail
}  // namespace dsg

#endif
