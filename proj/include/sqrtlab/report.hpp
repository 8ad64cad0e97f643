#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqrtlab {

/// measured <= constant * envelope, with the ratio kept for auditing.
struct BoundCheckReport {
  std::string name;
  double measured = 0.0;
  double envelope = 0.0;
  double slack_exponent = 0.0;
  double ratio = 0.0;
  double constant = 1.0;
  bool pass = false;
};

/// ratio = measured / envelope (0 when both vanish), pass = ratio <= constant.
BoundCheckReport check_bound(std::string name, double measured, double envelope, double constant,
                             double slack_exponent = 0.0);

/// Frozen constants for the asymptotic bound sweeps, keyed by sweep name.
class Calibration {
 public:
  static std::filesystem::path default_path();

  static Calibration load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  bool contains(std::string_view key) const;
  double constant(std::string_view key) const;  // throws std::out_of_range
  double measured(std::string_view key) const;
  void set(std::string_view key, double measured, double constant);

  const std::string& note() const { return note_; }
  void set_note(std::string note) { note_ = std::move(note); }
  double slack_exponent() const { return slack_exponent_; }
  void set_slack_exponent(double s) { slack_exponent_ = s; }
  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }

 private:
  struct Entry {
    double measured;
    double constant;
  };
  std::map<std::string, Entry, std::less<>> entries_;
  std::string note_;
  double slack_exponent_ = 2.0;
  std::uint64_t seed_ = 42;
};

/// Rounds max_ratio * margin up to two significant digits.
double freeze_constant(double max_ratio, double margin = 1.5);

/// Shortest round-trip decimal, '.' separator, no locale.
std::string format_double(double v);

/// CSV with a fixed header; cells are numbers or bare strings.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  CsvWriter& cell(double v);
  CsvWriter& cell(std::int64_t v);
  CsvWriter& cell(std::uint64_t v);
  CsvWriter& cell(int v) { return cell(static_cast<std::int64_t>(v)); }
  CsvWriter& cell(std::string_view s);
  void end_row();

 private:
  void sep();

  std::ostream& out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
};

}  // namespace sqrtlab
