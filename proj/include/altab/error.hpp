#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altab {

enum class ErrorCode {
  // tableau validation
  LabelOrder,
  SizeMismatch,
  ArrowOffShape,
  DuplicateArrow,
  PointedCellOccupied,
  // permutation tableaux
  EmptyColumn,
  ZeroWithOneAboveAndLeft,
  NonTotalFilling,
  // text formats
  SyntaxError,
  // decomposition
  NothingToCut,
  EmptyLineObstruction,
  LabelNotExtremal,
  NotFree,
  NotASubset,
  InvalidRestriction,
  LabelCollision,
  // trees
  NotPacked,
  LabelGap,
  WrongClass,
  InvalidTree,
  InvalidArcDiagram,
  // permutations
  RepeatedLetter,
  BadTerminalLetter,
  BadSeparator,
  NonStandardLabels,
  NotSymmetric,
  // enumeration
  ResourceLimit,
  DegenerateParams,
  SingularSystem,
  MarkOnFreeLine,
  TruncationTooSmall,
  NonUnitLog,
  NonZeroExpConstant,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One violated rule found while checking a candidate object.
struct Violation {
  ErrorCode code;
  std::string message;
};

/// Thrown by the validating constructors; carries every violation found, not
/// just the first one.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : Error(violations.empty() ? ErrorCode::LabelOrder : violations.front().code,
              summarize(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) {
      if (!out.empty()) out += "; ";
      out += v.message;
    }
    return out;
  }

  std::vector<Violation> violations_;
};

}  // namespace altab
