#pragma once

#include <stdexcept>
#include <string>

namespace llab {

enum class Errc {
  DegenerateQuadruple,
  ArcsNotSeparated,
  DegenerateConfiguration,
  NoIntersection,
  NotHyperbolic,
  PointNotInArc,
  NumericalDegeneracy,
  EnumerationBudget,
  BudgetTooSmall,
  RepresentationsMismatched,
  ScaleRangeTooNarrow,
  DerivativeUnstable,
  TruncationBudget,
  DepthTooSmall,
  SeedCoverageError,
  RegularityInsufficient,
  TailDiverges,
  MemoryBudget,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace llab
