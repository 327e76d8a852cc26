#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "qwerner/cli.hpp"
#include "qwerner/closed_form.hpp"
#include "qwerner/errors.hpp"
#include "qwerner/minimizer.hpp"
#include "qwerner/report.hpp"

namespace qwerner::cli {

namespace {

// Evaluates fn(i) for i in [0, n) across `threads` strided workers. Output
// stays deterministic because every row is written to its own preallocated
// slot. The first exception thrown by any worker is rethrown after joining.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out;
}

struct SweepPoint {
  double a = 0.0;
  double alpha_sq = 0.0;
  double beta_sq = 0.0;
  std::optional<double> theta;
};

struct SweepRow {
  SweepPoint point;
  CorrelationReport report;
  std::string error;  // empty on success
};

SweepRow evaluate_row(Parity parity, const SweepPoint& point) {
  SweepRow row;
  row.point = point;
  try {
    row.report = correlation_report(CoherentParams{point.alpha_sq, point.beta_sq}, parity,
                                    point.a, point.theta);
  } catch (const Error& e) {
    row.error = e.code();
  }
  return row;
}

constexpr const char* kSweepColumns[] = {
    "parity",      "a",           "alpha_sq",    "beta_sq", "theta",
    "discord",     "delta",       "theta_opt",   "mutual_info",
    "classical_corr", "concurrence", "eof",      "delta_minus_eof", "error"};

// Cell values shared by the CSV and JSON writers; empty string = missing.
std::vector<std::string> row_cells(Parity parity, const SweepRow& row) {
  std::vector<std::string> cells(std::size(kSweepColumns));
  cells[0] = to_string(parity);
  cells[1] = format_number(row.point.a);
  cells[2] = format_number(row.point.alpha_sq);
  cells[3] = format_number(row.point.beta_sq);
  if (row.error.empty()) {
    cells[4] = format_number(row.point.theta ? *row.point.theta : row.report.theta_opt);
    cells[5] = format_number(row.report.discord);
    cells[6] = format_number(row.report.delta);
    cells[7] = format_number(row.report.theta_opt);
    cells[8] = format_number(row.report.mutual_info);
    cells[9] = format_number(row.report.classical_corr);
    cells[10] = format_number(row.report.concurrence);
    cells[11] = format_number(row.report.eof);
    cells[12] = format_number(row.report.delta_minus_eof);
  } else {
    if (row.point.theta) cells[4] = format_number(*row.point.theta);
    cells[13] = row.error;
  }
  return cells;
}

void write_csv(std::ostream& out, Parity parity, const std::vector<SweepRow>& rows) {
  for (std::size_t c = 0; c < std::size(kSweepColumns); ++c)
    out << (c ? "," : "") << kSweepColumns[c];
  out << '\n';
  for (const SweepRow& row : rows) {
    const std::vector<std::string> cells = row_cells(parity, row);
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  }
}

void write_json(std::ostream& out, Parity parity, const std::vector<SweepRow>& rows) {
  out << "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::vector<std::string> cells = row_cells(parity, rows[r]);
    out << "  {";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << (c ? "," : "") << '"' << kSweepColumns[c] << "\":";
      const bool is_string = c == 0 || c == 13;
      if (cells[c].empty())
        out << "null";
      else if (is_string)
        out << '"' << json_escape(cells[c]) << '"';
      else
        out << cells[c];
    }
    out << '}' << (r + 1 < rows.size() ? "," : "") << '\n';
  }
  out << "]\n";
}

}  // namespace

int run_point(const PointOptions& opt, std::ostream& out) {
  if (opt.phi && !std::isfinite(*opt.phi)) throw InvalidArgument("phi must be finite");
  const CorrelationReport r = correlation_report(CoherentParams{opt.alpha_sq, opt.beta_sq},
                                                 opt.parity, opt.a, opt.theta);
  out << '{' << "\"mutual_info\":" << format_number(r.mutual_info)
      << ",\"classical_corr\":" << format_number(r.classical_corr)
      << ",\"discord\":" << format_number(r.discord) << ",\"delta\":" << format_number(r.delta)
      << ",\"theta_opt\":" << format_number(r.theta_opt)
      << ",\"concurrence\":" << format_number(r.concurrence)
      << ",\"eof\":" << format_number(r.eof)
      << ",\"delta_minus_eof\":" << format_number(r.delta_minus_eof) << "}\n";
  return 0;
}

int run_sweep(const SweepSpec& spec, std::ostream& err) {
  std::vector<SweepPoint> points;
  for (double a : spec.a.values())
    for (double alpha_sq : spec.alpha_sq.values())
      for (double beta_sq : spec.beta_sq.values()) {
        if (spec.theta) {
          for (double theta : spec.theta->values())
            points.push_back(SweepPoint{a, alpha_sq, beta_sq, theta});
        } else {
          points.push_back(SweepPoint{a, alpha_sq, beta_sq, std::nullopt});
        }
      }

  std::vector<SweepRow> rows(points.size());
  parallel_for(points.size(), spec.threads,
               [&](std::size_t i) { rows[i] = evaluate_row(spec.parity, points[i]); });

  std::ofstream out(spec.out_path, std::ios::binary);
  if (!out) {
    err << "cannot open output file: " << spec.out_path << '\n';
    return 2;
  }
  if (spec.format == Format::Csv)
    write_csv(out, spec.parity, rows);
  else
    write_json(out, spec.parity, rows);
  out.flush();
  if (!out) {
    err << "write failed: " << spec.out_path << '\n';
    return 2;
  }
  return 0;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

// One sub-panel surface: rows ordered with `x` outermost, `y` innermost.
int write_surface(const std::string& path, const char* header,
                  const std::vector<double>& xs, const std::vector<double>& ys, int threads,
                  const std::function<double(double, double)>& value, std::ostream& err) {
  std::vector<std::string> lines(xs.size() * ys.size());
  parallel_for(lines.size(), threads, [&](std::size_t i) {
    const double x = xs[i / ys.size()];
    const double y = ys[i % ys.size()];
    lines[i] = format_number(x) + "," + format_number(y) + "," + format_number(value(x, y));
  });

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "cannot open output file: " << path << '\n';
    return 2;
  }
  out << header << '\n';
  for (const std::string& line : lines) out << line << '\n';
  out.flush();
  if (!out) {
    err << "write failed: " << path << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int run_figure(const FigureOptions& opt, std::ostream& err) {
  if (opt.grid < 2 || opt.grid > 2001) throw InvalidArgument("--grid must be in [2, 2001]");
  static const std::array<std::string, 6> kIds = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};
  const auto it = std::find(kIds.begin(), kIds.end(), opt.id);
  if (it == kIds.end()) throw InvalidArgument("unknown figure id: '" + opt.id + "'");
  const int figure = static_cast<int>(it - kIds.begin()) + 1;
  const Parity parity = figure % 2 == 1 ? Parity::Plus : Parity::Minus;

  std::filesystem::create_directories(opt.out_dir);

  const std::vector<double> mixing = linspace(0.0, 1.0, opt.grid);
  static const char* kPanels[] = {"a", "b", "c"};
  for (int panel = 0; panel < 3; ++panel) {
    const double setting = opt.photon_settings[static_cast<std::size_t>(panel)];
    const std::string path = opt.out_dir + "/" + opt.id + kPanels[panel] + ".csv";
    int rc = 0;
    if (figure <= 2) {
      // discord over (a, theta) at equal mean photon numbers per panel
      const std::vector<double> thetas = linspace(0.0, std::numbers::pi, opt.grid);
      rc = write_surface(path, "a,theta,discord", mixing, thetas, opt.threads,
                         [&](double a, double theta) {
                           return discord(CoherentParams{setting, setting}, parity, a, theta);
                         },
                         err);
    } else if (figure <= 4) {
      // EoF over (a, alpha_sq) at fixed beta_sq per panel
      const std::vector<double> photons = linspace(0.0, 5.0, opt.grid);
      rc = write_surface(path, "a,alpha_sq,eof", mixing, photons, opt.threads,
                         [&](double a, double alpha_sq) {
                           return entanglement_of_formation(CoherentParams{alpha_sq, setting},
                                                            parity, a);
                         },
                         err);
    } else {
      // delta - E over (a, alpha_sq) at fixed beta_sq per panel
      const std::vector<double> photons = linspace(0.0, 5.0, opt.grid);
      rc = write_surface(path, "a,alpha_sq,delta_minus_eof", mixing, photons, opt.threads,
                         [&](double a, double alpha_sq) {
                           return delta_minus_eof(CoherentParams{alpha_sq, setting}, parity, a);
                         },
                         err);
    }
    if (rc != 0) return rc;
  }
  return 0;
}

}  // namespace qwerner::cli
