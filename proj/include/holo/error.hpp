#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holo {

enum class ErrorKind {
  SingularPoint,
  DimensionMismatch,
  NonInvertibleStep,
  InvalidArgument,
  NotUnimodular,
  NotDiagonal,
  InvalidAxis,
  OutsideDomain,
  ZeroOnContour,
  BudgetExhausted,
  OutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class NotUnimodularError : public Error {
 public:
  explicit NotUnimodularError(std::int64_t det)
      : Error(ErrorKind::NotUnimodular, "determinant is " + std::to_string(det)), det_(det) {}

  std::int64_t det() const noexcept { return det_; }

 private:
  std::int64_t det_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require_dimension(std::size_t expected, std::size_t actual, std::string_view what) {
  if (expected != actual) {
    fail(ErrorKind::DimensionMismatch, std::string(what) + ": expected dimension " + std::to_string(expected) +
                                           ", got " + std::to_string(actual));
  }
}

}  // namespace holo
