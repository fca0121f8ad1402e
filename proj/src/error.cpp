#include <altab/error.hpp>

namespace altab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LabelOrder: return "LabelOrder";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ArrowOffShape: return "ArrowOffShape";
    case ErrorCode::DuplicateArrow: return "DuplicateArrow";
    case ErrorCode::PointedCellOccupied: return "PointedCellOccupied";
    case ErrorCode::EmptyColumn: return "EmptyColumn";
    case ErrorCode::ZeroWithOneAboveAndLeft: return "ZeroWithOneAboveAndLeft";
    case ErrorCode::NonTotalFilling: return "NonTotalFilling";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NothingToCut: return "NothingToCut";
    case ErrorCode::EmptyLineObstruction: return "EmptyLineObstruction";
    case ErrorCode::LabelNotExtremal: return "LabelNotExtremal";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::InvalidRestriction: return "InvalidRestriction";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::NotPacked: return "NotPacked";
    case ErrorCode::LabelGap: return "LabelGap";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::InvalidArcDiagram: return "InvalidArcDiagram";
    case ErrorCode::RepeatedLetter: return "RepeatedLetter";
    case ErrorCode::BadTerminalLetter: return "BadTerminalLetter";
    case ErrorCode::BadSeparator: return "BadSeparator";
    case ErrorCode::NonStandardLabels: return "NonStandardLabels";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::MarkOnFreeLine: return "MarkOnFreeLine";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NonUnitLog: return "NonUnitLog";
    case ErrorCode::NonZeroExpConstant: return "NonZeroExpConstant";
  }
  return "Unknown";
}

}  // namespace altab
