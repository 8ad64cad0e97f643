#include "sqrtlab/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace sqrtlab {

BoundCheckReport check_bound(std::string name, double measured, double envelope, double constant,
                             double slack_exponent) {
  BoundCheckReport r;
  r.name = std::move(name);
  r.measured = measured;
  r.envelope = envelope;
  r.slack_exponent = slack_exponent;
  r.constant = constant;
  if (envelope > 0.0) {
    r.ratio = measured / envelope;
  } else {
    r.ratio = measured == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.pass = r.ratio <= constant;
  return r;
}

std::filesystem::path Calibration::default_path() {
  return std::filesystem::path(SQRTLAB_DATA_DIR) / "calibration.json";
}

Calibration Calibration::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open calibration fixture " + path.string());
  const nlohmann::json j = nlohmann::json::parse(in);
  Calibration c;
  c.note_ = j.value("note", "");
  c.slack_exponent_ = j.value("slack_exponent", 2.0);
  c.seed_ = j.value("seed", std::uint64_t{42});
  for (const auto& [key, v] : j.at("constants").items()) {
    c.entries_[key] = Entry{v.at("measured").get<double>(), v.at("constant").get<double>()};
  }
  return c;
}

void Calibration::save(const std::filesystem::path& path) const {
  nlohmann::ordered_json j;
  j["note"] = note_;
  j["slack_exponent"] = slack_exponent_;
  j["seed"] = seed_;
  nlohmann::ordered_json constants = nlohmann::ordered_json::object();
  for (const auto& [key, e] : entries_) {
    constants[key] = {{"measured", e.measured}, {"constant", e.constant}};
  }
  j["constants"] = constants;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write calibration fixture " + path.string());
  out << j.dump(2) << '\n';
}

bool Calibration::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

double Calibration::constant(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::out_of_range("no calibration constant for " + std::string(key));
  return it->second.constant;
}

double Calibration::measured(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::out_of_range("no calibration constant for " + std::string(key));
  return it->second.measured;
}

void Calibration::set(std::string_view key, double measured, double constant) {
  entries_[std::string(key)] = Entry{measured, constant};
}

double freeze_constant(double max_ratio, double margin) {
  const double v = max_ratio * margin;
  if (!(v > 0.0)) return 0.0;
  const int exponent = static_cast<int>(std::floor(std::log10(v))) - 1;
  const double digits = std::ceil(v / std::pow(10.0, exponent) - 1e-9);
  // Round-trip through decimal text so the stored constant is the shortest
  // double for "dd e exponent".
  const std::string text = std::to_string(static_cast<long long>(digits)) + "e" + std::to_string(exponent);
  return std::strtod(text.c_str(), nullptr);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::sep() {
  if (in_row_ == columns_) throw std::logic_error("CsvWriter: too many cells in row");
  if (in_row_++) out_ << ',';
}

CsvWriter& CsvWriter::cell(double v) {
  sep();
  out_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::cell(std::int64_t v) {
  sep();
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out_.write(buf, res.ptr - buf);
  return *this;
}

CsvWriter& CsvWriter::cell(std::uint64_t v) {
  sep();
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out_.write(buf, res.ptr - buf);
  return *this;
}

CsvWriter& CsvWriter::cell(std::string_view s) {
  sep();
  out_ << s;
  return *this;
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) throw std::logic_error("CsvWriter: short row");
  out_ << '\n';
  in_row_ = 0;
}

}  // namespace sqrtlab
