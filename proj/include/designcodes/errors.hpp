#pragma once

#include <stdexcept>
#include <string>

#include "designcodes/bigint.hpp"

namespace dcodes {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class NotASubfield : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty generator list") {}
};

class RaggedRows : public Error {
 public:
  RaggedRows() : Error("generator rows have different lengths") {}
};

class ZeroCode : public Error {
 public:
  ZeroCode() : Error("minimum distance of the zero code is undefined") {}
};

class NoSuchWeight : public Error {
 public:
  using Error::Error;
};

class NotATDesign : public Error {
 public:
  using Error::Error;
};

class FullSpace : public Error {
 public:
  FullSpace() : Error("code of the design is the full space") {}
};

class TNotLessThanD : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

/// A construction produced parameters that disagree with the closed form it is
/// supposed to satisfy.
class ConstructionMismatch : public Error {
 public:
  using Error::Error;
};

/// A theorem's implication was checked and found false.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class WeightEnumeratorMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a computation would need more work than the caller allowed.
/// `min_work()` is a lower estimate of the work the computation needs.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, BigInt min_work)
      : Error(what + " (estimated work " + min_work.str() + ")"), min_work_(std::move(min_work)) {}

  const BigInt& min_work() const noexcept { return min_work_; }

 private:
  BigInt min_work_;
};

}  // namespace dcodes
