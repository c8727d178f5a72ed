#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dehn {

enum class ErrorKind {
  VarCountMismatch,
  OrderMismatch,
  BadIndex,
  NonzeroConstantTerm,
  InvalidPotential,
  BadCurve,
  NoInvariantExtension,
  InadmissibleSeedOrder,
  OutsideNeighborhood,
  BoundaryCase,
  PrecisionTooLow,
  NotUpperHalfPlane,
  Singular,
  DegenerateImage,
  NeedExactShapes,
  InconsistentRows,
  BadSlope,
  FieldMismatch,
  Parse,
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

// Domain failure raised by library operations. The kind maps one-to-one onto
// the error names used in reports and the CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dehn
