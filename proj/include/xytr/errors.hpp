#pragma once

#include <stdexcept>
#include <string>

namespace xytr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class PoleEverywhere : public Error {
 public:
  PoleEverywhere() : Error("substitution makes the denominator identically zero") {}
};

class PoleAtLimit : public Error {
 public:
  PoleAtLimit() : Error("genuine pole at the limit point") {}
};

class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class DegenerateKernel : public Error {
 public:
  using Error::Error;
};

class UnsupportedEulerCharacteristic : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

class NonInvertibleY : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class Rejection {
  IrrationalRamification,
  NonSimpleRamification,
  CoincidingRamification,
  RegularityViolation,
};

const char* rejection_name(Rejection r);

class CurveRejected : public Error {
 public:
  CurveRejected(Rejection kind, const std::string& detail)
      : Error(std::string(rejection_name(kind)) + ": " + detail), kind_(kind) {}
  Rejection kind() const { return kind_; }

 private:
  Rejection kind_;
};

}  // namespace xytr
