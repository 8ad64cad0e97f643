#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sqrtlab/report.hpp"
#include "sqrtlab/weights.hpp"

namespace sqrtlab {

/// Runs body(i) for i in [0, n) on up to `threads` workers.  Callers write
/// into slot i, so output order never depends on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

struct SweepOptions {
  double slack_exponent = 2.0;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  bool quick = false;                  // smaller grids, same per-cell seeds
  std::vector<std::uint64_t> qset;     // overrides the default moduli
  std::vector<WeightClass> weights;    // overrides the default weight classes
};

struct SweepTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, double> max_ratio;  // calibration key -> largest ratio seen
  std::vector<std::string> failures;        // exact side conditions that broke
};

/// Sweep names, each feeding one or more calibration keys.
const std::vector<std::string>& sweep_names();
std::vector<std::string> sweep_keys(std::string_view sweep);
const std::vector<std::string>& calibration_keys();

/// DomainError for an unknown name.
SweepTable run_sweep(std::string_view name, const SweepOptions& opts);

/// Every sweep at full size; constants frozen with freeze_constant.
Calibration recalibrate(const SweepOptions& opts, std::ostream* log = nullptr);

/// `# sweep=... seed=... rng=... slack_exponent=...` then the header and rows.
void write_csv(std::ostream& out, const SweepTable& table, const SweepOptions& opts);

/// Keys whose max ratio exceeds the frozen constant.
std::vector<std::string> calibration_violations(const SweepTable& table, const Calibration& cal);

/// Per-cell generator seed mixed from the run seed and cell coordinates.
std::uint64_t cell_seed(std::uint64_t seed, std::string_view tag, std::uint64_t a, std::uint64_t b = 0,
                        std::uint64_t c = 0);

std::vector<std::uint64_t> dyadic_points(std::uint64_t limit);

}  // namespace sqrtlab
