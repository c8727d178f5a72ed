#include "dehn/error.hpp"

namespace dehn {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VarCountMismatch: return "VarCountMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::InvalidPotential: return "InvalidPotential";
    case ErrorKind::BadCurve: return "BadCurve";
    case ErrorKind::NoInvariantExtension: return "NoInvariantExtension";
    case ErrorKind::InadmissibleSeedOrder: return "InadmissibleSeedOrder";
    case ErrorKind::OutsideNeighborhood: return "OutsideNeighborhood";
    case ErrorKind::BoundaryCase: return "BoundaryCase";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::NotUpperHalfPlane: return "NotUpperHalfPlane";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DegenerateImage: return "DegenerateImage";
    case ErrorKind::NeedExactShapes: return "NeedExactShapes";
    case ErrorKind::InconsistentRows: return "InconsistentRows";
    case ErrorKind::BadSlope: return "BadSlope";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace dehn
