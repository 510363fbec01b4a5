#pragma once

#include <stdexcept>
#include <string>

namespace lanesim {

enum class Errc {
  NonIntegerCellCount,
  InvalidCellWidth,
  DegenerateVelocity,
  RangeNotMultipleOfDx,
  RangeTooSmall,
  KernelWiderThanDomain,
  LengthMismatch,
  LaneIndexOutOfRange,
  ProfileOutOfRange,
  CflViolation,
  RangeViolation,
  StateMismatch,
  GridMismatch,
  SchemaError,
  SemanticError,
  SnapshotTimeOutOfRange,
  IoError,
};

const char* errc_name(Errc c);

/// Library error; carries a machine-checkable code next to the message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lanesim
