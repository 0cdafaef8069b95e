#pragma once

#include <stdexcept>
#include <string>

namespace latcut {

/// Base for all domain errors. `code()` is the stable name used by the CLI
/// when reporting a failure (exit status 2).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define LATCUT_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

LATCUT_DEFINE_ERROR(InvalidBody);
LATCUT_DEFINE_ERROR(FNotInterior);
LATCUT_DEFINE_ERROR(NotUnimodular);
LATCUT_DEFINE_ERROR(UnboundedEnumeration);
LATCUT_DEFINE_ERROR(NotConvexCombination);
LATCUT_DEFINE_ERROR(VerticalRay);
LATCUT_DEFINE_ERROR(SlopeNotBetween);
LATCUT_DEFINE_ERROR(ParamOutOfRange);
LATCUT_DEFINE_ERROR(FNotInRegion);
LATCUT_DEFINE_ERROR(RayConditionFails);
LATCUT_DEFINE_ERROR(NotViolated);
LATCUT_DEFINE_ERROR(InfeasibleProblem);
LATCUT_DEFINE_ERROR(UnboundedProblem);
LATCUT_DEFINE_ERROR(InternalError);

#undef LATCUT_DEFINE_ERROR

/// Input syntax failures (CLI exit status 1), distinct from domain errors.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latcut
