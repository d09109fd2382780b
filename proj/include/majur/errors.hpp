#pragma once

#include <stdexcept>
#include <string>

namespace majur {

// Error category doubles as the CLI process exit code.
enum class ErrorCategory : int {
  input = 2,   // malformed scenario, bad argument, contract violation
  budget = 3,  // subset enumeration would exceed the evaluation budget
  io = 4,      // unreadable input / unwritable output
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }
  int exit_code() const noexcept { return static_cast<int>(category_); }

 private:
  ErrorCategory category_;
};

#define MAJUR_DEFINE_ERROR(NAME, CATEGORY)                    \
  struct NAME : Error {                                       \
    explicit NAME(const std::string& message)                 \
        : Error(ErrorCategory::CATEGORY, message) {}          \
  }

MAJUR_DEFINE_ERROR(ZeroVector, input);
MAJUR_DEFINE_ERROR(DimensionMismatch, input);
MAJUR_DEFINE_ERROR(NotHermitian, input);
MAJUR_DEFINE_ERROR(NotConverged, input);
MAJUR_DEFINE_ERROR(TotalMismatch, input);
MAJUR_DEFINE_ERROR(EmptySet, input);
MAJUR_DEFINE_ERROR(NegativeIncrement, input);
MAJUR_DEFINE_ERROR(LambdaOutOfRange, input);
MAJUR_DEFINE_ERROR(WeightMismatch, input);
MAJUR_DEFINE_ERROR(UnknownName, input);
MAJUR_DEFINE_ERROR(ZeroComponent, input);
MAJUR_DEFINE_ERROR(InvalidMeasurement, input);
MAJUR_DEFINE_ERROR(InvalidArgument, input);
MAJUR_DEFINE_ERROR(SchemaError, input);
MAJUR_DEFINE_ERROR(BudgetExceeded, budget);
MAJUR_DEFINE_ERROR(IoError, io);

#undef MAJUR_DEFINE_ERROR

}  // namespace majur
