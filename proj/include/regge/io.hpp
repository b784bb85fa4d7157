#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regge/asympt.hpp"
#include "regge/charfn.hpp"
#include "regge/kernel.hpp"
#include "regge/partialinv.hpp"
#include "regge/reconstruct.hpp"

namespace regge {

/// Seventeen significant digits, enough for a lossless round trip.
std::string format_number(double v);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Parses the JSON problem description; every failure is a ConfigError.
ReggeProblem parse_problem(const std::string& json_text);
ReggeProblem load_problem(const std::string& path);
std::string problem_to_json(const ReggeProblem& p);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  CsvTable& row(std::vector<std::string> cells);
  CsvTable& row(const std::vector<double>& values);
  std::string str() const;
  void write(const std::string& path) const { write_file_atomic(path, str()); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Columns k, re, im, multiplicity, residual, plus predicted_re, predicted_im
/// when a model is given.
CsvTable spectrum_table(const Spectrum& sp, const AsymptoticModel* predict = nullptr);
CsvTable charfn_table(const std::vector<CharFnSample>& samples);
CsvTable kernel_table(const KernelGrid& kg);
CsvTable tail_table(const std::vector<TailEntry>& tail);
CsvTable critical_table(const CriticalDiagnostics& d);

/// Zero-set file: "# order_at_origin=s" then rows re, im, multiplicity.
std::string zero_set_to_string(const ZeroSet& zs);
ZeroSet parse_zero_set(const std::string& text);
ZeroSet load_zero_set(const std::string& path);

struct SvgSeries {
  std::vector<Complex> points;
  std::string color = "#1f4e9c";
  bool hollow = false;
  std::string label;
};

/// Static scatter plot of one or more point series in the complex plane.
std::string svg_scatter(const std::vector<SvgSeries>& series, const std::string& title);

}  // namespace regge
