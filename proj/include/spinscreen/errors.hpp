#pragma once

#include <stdexcept>
#include <string>

namespace spinscreen {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The four angular momenta admit no valid (j12, j23) pair.
class EmptyDomainError : public Error {
 public:
  using Error::Error;
};

/// Factorial argument beyond the memo table cap.
class FactorialRangeError : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle invoked outside its guarded range.
class OracleRangeError : public Error {
 public:
  using Error::Error;
};

/// Three-term recurrence could not produce a usable column.
class RecurrenceBreakdownError : public Error {
 public:
  explicit RecurrenceBreakdownError(const std::string& msg, int column = -1)
      : Error(msg), column_index(column) {}
  int column_index;
};

/// Side lengths violate the triangle inequality beyond tolerance.
class NotATriangleError : public Error {
 public:
  using Error::Error;
};

/// Requested ridge/caustic point lies outside the physical strip.
class OutOfScreenError : public Error {
 public:
  using Error::Error;
};

/// No real caustic root on the requested line.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// R-schedule not strictly increasing or entries invalid.
class InvalidScheduleError : public Error {
 public:
  using Error::Error;
};

/// Malformed half-integer or numeric input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinscreen
