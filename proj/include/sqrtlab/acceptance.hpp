#pragma once

#include <string>
#include <vector>

#include "sqrtlab/report.hpp"
#include "sqrtlab/sweeps.hpp"

namespace sqrtlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;  // quick mode leaves out the long-running criteria
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriteria = 12;

/// One acceptance criterion, 1..kCriteria.  Sweep-backed criteria compare
/// against `cal`.  opts.quick shrinks every grid to a subset of the full one.
CriterionResult run_criterion(int id, const SweepOptions& opts, const Calibration& cal);

std::vector<CriterionResult> run_acceptance(const SweepOptions& opts, const Calibration& cal);

/// `[PASS] 3 energy identity (1.2 s): detail`
std::string format_criterion(const CriterionResult& r);

}  // namespace sqrtlab
