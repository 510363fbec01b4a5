#include "lanesim/errors.hpp"

namespace lanesim {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonIntegerCellCount:
      return "NonIntegerCellCount";
    case Errc::InvalidCellWidth:
      return "InvalidCellWidth";
    case Errc::DegenerateVelocity:
      return "DegenerateVelocity";
    case Errc::RangeNotMultipleOfDx:
      return "RangeNotMultipleOfDx";
    case Errc::RangeTooSmall:
      return "RangeTooSmall";
    case Errc::KernelWiderThanDomain:
      return "KernelWiderThanDomain";
    case Errc::LengthMismatch:
      return "LengthMismatch";
    case Errc::LaneIndexOutOfRange:
      return "LaneIndexOutOfRange";
    case Errc::ProfileOutOfRange:
      return "ProfileOutOfRange";
    case Errc::CflViolation:
      return "CflViolation";
    case Errc::RangeViolation:
      return "RangeViolation";
    case Errc::StateMismatch:
      return "StateMismatch";
    case Errc::GridMismatch:
      return "GridMismatch";
    case Errc::SchemaError:
      return "SchemaError";
    case Errc::SemanticError:
      return "SemanticError";
    case Errc::SnapshotTimeOutOfRange:
      return "SnapshotTimeOutOfRange";
    case Errc::IoError:
      return "IoError";
  }
  return "UnknownError";
}

}  // namespace lanesim
