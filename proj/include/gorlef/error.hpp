#ifndef GORLEF_ERROR_HPP
#define GORLEF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gorlef {

// Error categories. The numeric values are shared with the C API status codes.
enum class ErrorCode : int {
  invalid_argument = 1,
  parse = 2,
  domain = 3,
  not_regular_sequence = 4,
  slp_evidence = 5,
  degenerate_algebra = 6,
  io = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Precondition violations: degree out of range, size mismatch, zero element where
// a nonzero one is required.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class NotRegularSequence : public Error {
 public:
  NotRegularSequence(int degree, std::size_t expected, std::size_t found)
      : Error(ErrorCode::not_regular_sequence,
              "not a regular sequence: Hilbert function differs in degree " +
                  std::to_string(degree) + " (expected " + std::to_string(expected) +
                  ", found " + std::to_string(found) + ")"),
        degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

// Raised when the fiber of the incidence correspondence over a sampled point is empty.
class SlpEvidence : public Error {
 public:
  explicit SlpEvidence(const std::string& what) : Error(ErrorCode::slp_evidence, what) {}
};

class DegenerateAlgebra : public Error {
 public:
  explicit DegenerateAlgebra(const std::string& what)
      : Error(ErrorCode::degenerate_algebra, what) {}
};

}  // namespace gorlef

#endif  // GORLEF_ERROR_HPP
