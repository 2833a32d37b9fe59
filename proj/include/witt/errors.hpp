#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace witt {

// Base class for everything thrown on purpose. Anything escaping that is NOT
// an Error is a bug (CLI maps those to exit code 3).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// operands built over different variable lists / orders
struct VarMismatchError : Error {
  using Error::Error;
};

// operands belong to different presented rings
struct RingMismatchError : Error {
  using Error::Error;
};

// presentation collapsed: 1 lies in the relation ideal
struct ZeroRingError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// a would-be hom does not kill a relation; carries the offender
struct IllDefinedHomError : Error {
  std::string relation;
  IllDefinedHomError(const std::string& msg, std::string rel)
      : Error(msg), relation(std::move(rel)) {}
};

struct FormError : Error {
  using Error::Error;
};

struct FieldError : Error {
  using Error::Error;
};

struct CycleError : Error {
  using Error::Error;
};

struct SessionError : Error {
  using Error::Error;
};

struct UnknownScenarioError : Error {
  using Error::Error;
};

// an internal invariant failed (e.g. a certificate we just built does not
// verify); distinct from user error on purpose
struct InternalError : Error {
  using Error::Error;
};

}  // namespace witt
