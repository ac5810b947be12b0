// Error codes for precondition and construction failures. Bounded-search
// negatives (BoundExhausted, Failure, NoCommonR) are ordinary return values,
// not exceptions; see the per-module result types.
#pragma once

#include <stdexcept>
#include <string>

namespace psgcr {

enum class Err {
  ElementNotInUniverse,
  EmptyFamily,
  AlreadyHasIdentity,
  UniverseCapExceeded,
  NotAssociative,
  BadTable,
  IndexOutOfRange,
  EmptyIndexSet,
  LengthCapExceeded,
  LengthMismatch,
  PrefixInvalid,
  PrefixTooShort,
  PoolNotRClosed,
  NoSuitableA,
  NoSuitableA2,
  UndefinedComposition,
  NotCommutative,
  UndefinedProduct,
  NotInA,
  NoHSequence,
  RTooSmall,
  NoIdentity,
  WitnessInvalid,
  ProjectionWitnessInvalid,
  ParseError,
  InvalidPrefix,
  UnknownFamily,
  UnknownName,
  BadArgument,
};

const char* err_name(Err e);

class PsgError : public std::runtime_error {
public:
  PsgError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& what) {
  throw PsgError(code, what);
}

} // namespace psgcr
