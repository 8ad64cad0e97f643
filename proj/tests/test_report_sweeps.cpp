#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "sqrtlab/errors.hpp"
#include "sqrtlab/report.hpp"
#include "sqrtlab/sweeps.hpp"

using namespace sqrtlab;

TEST(Report, CheckBound) {
  const BoundCheckReport r = check_bound("x", 3.0, 2.0, 1.6, 2.0);
  EXPECT_DOUBLE_EQ(r.ratio, 1.5);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(check_bound("x", 3.0, 2.0, 1.4).pass);
  EXPECT_EQ(check_bound("x", 0.0, 0.0, 1.0).ratio, 0.0);
  EXPECT_FALSE(check_bound("x", 1.0, 0.0, 1e300).pass);
}

TEST(Report, FreezeConstant) {
  EXPECT_DOUBLE_EQ(freeze_constant(1.0), 1.5);
  EXPECT_DOUBLE_EQ(freeze_constant(3.8666), 5.8);
  EXPECT_DOUBLE_EQ(freeze_constant(0.0123), 0.019);
  EXPECT_DOUBLE_EQ(freeze_constant(1.0000000000000013), 1.5);
  EXPECT_GE(freeze_constant(4.67), 4.67 * 1.5);
  EXPECT_EQ(format_double(freeze_constant(3.8666)), "5.8");
}

TEST(Report, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Report, CsvWriter) {
  std::ostringstream out;
  CsvWriter w(out, {"q", "name", "v"});
  w.cell(std::uint64_t{7}).cell("a").cell(0.5);
  w.end_row();
  w.cell(-1).cell("b").cell(2.0);
  w.end_row();
  EXPECT_EQ(out.str(), "q,name,v\n7,a,0.5\n-1,b,2\n");
}

TEST(Report, CalibrationRoundTrip) {
  Calibration c;
  c.set("alpha", 1.2345, freeze_constant(1.2345));
  c.set_note("test");
  c.set_slack_exponent(3.0);
  c.set_seed(9);
  const auto path = std::filesystem::temp_directory_path() / "sqrtlab_cal_test.json";
  c.save(path);
  const Calibration d = Calibration::load(path);
  std::filesystem::remove(path);
  EXPECT_TRUE(d.contains("alpha"));
  EXPECT_FALSE(d.contains("beta"));
  EXPECT_EQ(d.constant("alpha"), c.constant("alpha"));
  EXPECT_EQ(d.measured("alpha"), 1.2345);
  EXPECT_EQ(d.note(), "test");
  EXPECT_EQ(d.slack_exponent(), 3.0);
  EXPECT_EQ(d.seed(), 9u);
  EXPECT_THROW(d.constant("beta"), std::out_of_range);
}

TEST(Report, ShippedCalibrationCoversEveryKey) {
  const Calibration cal = Calibration::load(Calibration::default_path());
  for (const std::string& k : calibration_keys()) {
    ASSERT_TRUE(cal.contains(k)) << k;
    EXPECT_GE(cal.constant(k), cal.measured(k)) << k;
  }
}

TEST(Sweeps, RegistryIsConsistent) {
  std::size_t keys = 0;
  for (const std::string& s : sweep_names()) keys += sweep_keys(s).size();
  EXPECT_EQ(keys, calibration_keys().size());
  EXPECT_THROW(run_sweep("nope", {}), DomainError);
  EXPECT_EQ(dyadic_points(10), (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_TRUE(dyadic_points(0).empty());
}

TEST(Sweeps, CellSeedsDependOnEveryCoordinate) {
  const std::uint64_t base = cell_seed(42, "x", 1, 2, 3);
  EXPECT_EQ(base, cell_seed(42, "x", 1, 2, 3));
  EXPECT_NE(base, cell_seed(43, "x", 1, 2, 3));
  EXPECT_NE(base, cell_seed(42, "y", 1, 2, 3));
  EXPECT_NE(base, cell_seed(42, "x", 2, 2, 3));
  EXPECT_NE(base, cell_seed(42, "x", 1, 3, 3));
  EXPECT_NE(base, cell_seed(42, "x", 1, 2, 4));
}

TEST(Sweeps, ParallelForCoversEverySlotAndPropagates) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw DomainError("boom");
               }),
               DomainError);
  std::atomic<int> n{0};
  parallel_for(0, 2, [&](std::size_t) { ++n; });
  EXPECT_EQ(n.load(), 0);
}

TEST(Sweeps, QuickGridsStayWithinFrozenConstants) {
  const Calibration cal = Calibration::load(Calibration::default_path());
  SweepOptions opts;
  opts.quick = true;
  opts.slack_exponent = cal.slack_exponent();
  opts.seed = cal.seed();
  for (const std::string& name : sweep_names()) {
    const SweepTable t = run_sweep(name, opts);
    EXPECT_FALSE(t.rows.empty()) << name;
    EXPECT_TRUE(t.failures.empty()) << name << ": " << (t.failures.empty() ? "" : t.failures.front());
    EXPECT_TRUE(calibration_violations(t, cal).empty()) << name;
    for (const std::string& k : sweep_keys(name)) EXPECT_TRUE(t.max_ratio.count(k)) << name << " " << k;
    for (const auto& row : t.rows) EXPECT_EQ(row.size(), t.columns.size()) << name;
  }
}

TEST(Sweeps, OutputIndependentOfThreadCount) {
  SweepOptions one;
  one.quick = true;
  SweepOptions two = one;
  two.threads = 2;
  for (const char* name : {"thm14", "lemma63", "propB1"}) {
    std::ostringstream a, b;
    write_csv(a, run_sweep(name, one), one);
    write_csv(b, run_sweep(name, two), two);
    EXPECT_EQ(a.str(), b.str()) << name;
  }
}

TEST(Sweeps, QuickRowsAreASubsetOfFullRows) {
  SweepOptions quick;
  quick.quick = true;
  quick.qset = {101};
  SweepOptions full = quick;
  full.quick = false;
  const SweepTable q = run_sweep("lemma65", quick);
  const SweepTable f = run_sweep("lemma65", full);
  ASSERT_FALSE(q.rows.empty());
  EXPECT_LE(q.rows.size(), f.rows.size());
  for (const auto& row : q.rows) EXPECT_NE(std::find(f.rows.begin(), f.rows.end(), row), f.rows.end());
}

TEST(Sweeps, CsvCarriesProvenance) {
  SweepOptions opts;
  opts.quick = true;
  opts.qset = {31};
  std::ostringstream out;
  write_csv(out, run_sweep("A4", opts), opts);
  const std::string s = out.str();
  EXPECT_EQ(s.rfind("# sweep=A4 seed=42 rng=mt19937_64 slack_exponent=2\n", 0), 0u);
  EXPECT_NE(s.find("q,a,h,M,sum_A4,energy,envelope,ratio\n"), std::string::npos);
}
