#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwerner/types.hpp"

namespace qwerner::cli {

// Shortest decimal representation capped at 12 significant digits;
// locale-independent, '.' decimal separator. Formatted cells are a fixpoint
// of parse -> format.
std::string format_number(double x);

// A flag value that is either a fixed scalar "f" or a closed range
// "start:stop:step" (stop inclusive, step > 0).
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  static Range parse(const std::string& text);
  static Range fixed(double v) { return Range{v, v, 1.0}; }
  std::vector<double> values() const;
};

enum class Format { Csv, Json };

struct PointOptions {
  Parity parity = Parity::Plus;
  double alpha_sq = 0.0;
  double beta_sq = 0.0;
  double a = 0.0;
  std::optional<double> theta;
  std::optional<double> phi;  // accepted for completeness; no reported quantity depends on it
};

struct SweepSpec {
  Parity parity = Parity::Plus;
  Range a;
  Range alpha_sq;
  Range beta_sq;
  std::optional<Range> theta;  // omitted: rows are reported at theta_opt
  std::string out_path;
  Format format = Format::Csv;
  int threads = 1;
};

struct FigureOptions {
  std::string id;  // fig1..fig6
  std::string out_dir;
  int grid = 101;
  std::array<double, 3> photon_settings = {0.5, 1.5, 3.0};
  int threads = 1;
};

struct VerifyOptions {
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  bool use_printed_eq23 = false;
};

// All runners return the process exit code: 0 success, 1 verification
// failure, 2 usage/validation error.
int run_point(const PointOptions& opt, std::ostream& out);
int run_sweep(const SweepSpec& spec, std::ostream& err);
int run_figure(const FigureOptions& opt, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out);

}  // namespace qwerner::cli
