#pragma once

#include <stdexcept>
#include <string>

namespace butson {

/// Operands live in cyclotomic rings of different order.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimensions or grid shapes do not fit the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checked 64-bit coefficient arithmetic overflowed.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class UnknownMatrix : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidAssignment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHadamard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of the floating-point layer (root finding, rank decisions).
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

/// A singular value sits too close to the rank threshold to decide.
class IndeterminateRank : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace butson
