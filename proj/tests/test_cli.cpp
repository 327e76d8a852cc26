#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qwerner/cli.hpp"
#include "qwerner/closed_form.hpp"
#include "qwerner/errors.hpp"
#include "test_util.hpp"

using namespace qwerner;
using namespace qwerner::cli;
using test_util::close;
using test_util::Sampler;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("qwerner_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (line.ends_with(',')) cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double cell_value(const std::string& cell) { return std::stod(cell); }

int run_binary(const std::string& args, std::string* output = nullptr) {
  const std::string command = std::string(QWERNER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string captured;
  char buffer[512];
  while (std::fgets(buffer, sizeof(buffer), pipe)) captured += buffer;
  const int status = pclose(pipe);
  if (output) *output = captured;
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("number formatting round-trips at up to 12 significant digits") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");

  Sampler sampler(11001);
  for (int i = 0; i < 2000; ++i) {
    double value = sampler.uniform(-1.0, 1.0) * std::pow(10.0, sampler.uniform(-12.0, 12.0));
    if (i % 7 == 0) value = sampler.uniform(0.0, 1.0);  // typical report magnitudes
    const std::string formatted = format_number(value);

    // parse -> format is a fixpoint
    const double parsed = std::stod(formatted);
    CHECK(format_number(parsed) == formatted);

    // capped at 12 significant digits
    int digits = 0;
    bool leading = true;
    for (char ch : formatted) {
      if (ch == 'e' || ch == 'E') break;
      if (ch < '0' || ch > '9') continue;
      if (leading && ch == '0') continue;
      leading = false;
      ++digits;
    }
    CHECK(digits <= 12);

    // and accurate to 12 significant digits
    CHECK(std::abs(parsed - value) <= 5e-12 * std::abs(value));
  }
}

TEST_CASE("range parsing") {
  const Range fixed = Range::parse("0.5");
  CHECK(fixed.values() == std::vector<double>{0.5});

  const Range swept = Range::parse("0:1:0.25");
  CHECK(swept.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

  const Range single = Range::parse("1:1:0.1");
  CHECK(single.values() == std::vector<double>{1.0});

  CHECK(Range::parse("0:0.9999:0.5").values() == std::vector<double>{0.0, 0.5});

  CHECK_THROWS_AS(Range::parse("1:2:0"), InvalidArgument);
  CHECK_THROWS_AS(Range::parse("2:1:0.5"), InvalidArgument);
  CHECK_THROWS_AS(Range::parse("abc"), InvalidArgument);
  CHECK_THROWS_AS(Range::parse("1:2:3:4"), InvalidArgument);
}

TEST_CASE("point output is a flat JSON object keyed by report fields") {
  PointOptions opt;
  opt.parity = Parity::Plus;
  opt.alpha_sq = 1.0;
  opt.beta_sq = 1.0;
  opt.a = 0.0;
  std::ostringstream out;
  CHECK(run_point(opt, out) == 0);
  const std::string text = out.str();
  for (const char* key : {"mutual_info", "classical_corr", "discord", "delta", "theta_opt",
                          "concurrence", "eof", "delta_minus_eof"}) {
    CHECK(text.find('"' + std::string(key) + "\":") != std::string::npos);
  }
  // all correlation fields vanish at a = 0
  CHECK(text.find("\"mutual_info\":0,") != std::string::npos);
  CHECK(text.find("\"discord\":0,") != std::string::npos);
  CHECK(text.find("\"eof\":0,") != std::string::npos);

  // omitted theta reports the discord at theta*, so discord = delta
  PointOptions mixed = opt;
  mixed.a = 0.7;
  mixed.alpha_sq = 1.3;
  std::ostringstream at_opt;
  run_point(mixed, at_opt);
  const std::string report = at_opt.str();
  const auto discord_pos = report.find("\"discord\":");
  const auto delta_pos = report.find("\"delta\":");
  const std::string discord_text =
      report.substr(discord_pos + 10, report.find(',', discord_pos) - discord_pos - 10);
  const std::string delta_text =
      report.substr(delta_pos + 8, report.find(',', delta_pos) - delta_pos - 8);
  CHECK(discord_text == delta_text);
}

TEST_CASE("sweep output is deterministic across thread counts") {
  TempDir tmp;
  SweepSpec spec;
  spec.parity = Parity::Minus;
  spec.a = Range::parse("0:1:0.5");
  spec.alpha_sq = Range::parse("0.5:1.5:0.5");
  spec.beta_sq = Range::fixed(1.0);
  spec.theta = Range::parse("0:1.5:0.75");
  spec.out_path = (tmp.path / "t1.csv").string();
  spec.threads = 1;
  CHECK(run_sweep(spec, std::cerr) == 0);

  SweepSpec parallel = spec;
  parallel.out_path = (tmp.path / "t4.csv").string();
  parallel.threads = 4;
  CHECK(run_sweep(parallel, std::cerr) == 0);

  const std::string serial_bytes = slurp(spec.out_path);
  CHECK(serial_bytes == slurp(parallel.out_path));
  CHECK(!serial_bytes.empty());

  // repeated identical invocation is byte-identical too
  SweepSpec again = spec;
  again.out_path = (tmp.path / "t1b.csv").string();
  CHECK(run_sweep(again, std::cerr) == 0);
  CHECK(serial_bytes == slurp(again.out_path));

  const auto rows = parse_csv(serial_bytes);
  CHECK(rows[0] ==
        std::vector<std::string>{"parity", "a", "alpha_sq", "beta_sq", "theta", "discord", "delta",
                                 "theta_opt", "mutual_info", "classical_corr", "concurrence",
                                 "eof", "delta_minus_eof", "error"});

  // every numeric cell is a parse -> format fixpoint at 12 significant digits
  for (std::size_t r = 1; r < rows.size(); ++r)
    for (std::size_t c = 1; c < 13; ++c)
      if (!rows[r][c].empty()) CHECK(format_number(cell_value(rows[r][c])) == rows[r][c]);
  CHECK(rows.size() == 1 + 3 * 3 * 1 * 3);
  // loop nest order: a outermost, then alpha_sq, beta_sq, theta
  CHECK(rows[1][1] == "0");
  CHECK(rows[1][4] == "0");
  CHECK(rows[2][4] == "0.75");
  CHECK(rows[4][2] == "1");
}

TEST_CASE("degenerate sweep points become error rows") {
  TempDir tmp;
  SweepSpec spec;
  spec.parity = Parity::Minus;
  spec.a = Range::fixed(0.5);
  spec.alpha_sq = Range::parse("0:1:1");
  spec.beta_sq = Range::parse("0:1:1");
  spec.out_path = (tmp.path / "err.csv").string();
  CHECK(run_sweep(spec, std::cerr) == 0);

  const auto rows = parse_csv(slurp(spec.out_path));
  CHECK(rows.size() == 5);
  CHECK(rows[1][13] == "DegenerateState");  // alpha_sq = beta_sq = 0
  CHECK(rows[1][5].empty());                // no numeric cells on error rows
  CHECK(rows[2][13].empty());               // (0, 1) is a valid Minus point
  CHECK(!rows[2][5].empty());

  SweepSpec json_spec = spec;
  json_spec.format = Format::Json;
  json_spec.out_path = (tmp.path / "err.json").string();
  CHECK(run_sweep(json_spec, std::cerr) == 0);
  const std::string json_text = slurp(json_spec.out_path);
  CHECK(json_text.find("\"error\":\"DegenerateState\"") != std::string::npos);
  CHECK(json_text.find("\"discord\":null") != std::string::npos);
}

TEST_CASE("theta sweep columns carry the measurement symmetries") {
  TempDir tmp;
  SweepSpec spec;
  spec.parity = Parity::Plus;
  spec.a = Range::fixed(0.7);
  spec.alpha_sq = Range::fixed(0.8);
  spec.beta_sq = Range::fixed(2.1);
  const double step = std::numbers::pi / 8;
  spec.theta = Range{0.0, std::numbers::pi, step};
  spec.out_path = (tmp.path / "theta.csv").string();
  CHECK(run_sweep(spec, std::cerr) == 0);

  const auto rows = parse_csv(slurp(spec.out_path));
  CHECK(rows.size() == 10);  // header + 9 grid points
  // discord(theta) = discord(theta + pi/2): rows i and i+4 match
  for (std::size_t i = 1; i + 4 < rows.size(); ++i)
    CHECK(close(cell_value(rows[i][5]), cell_value(rows[i + 4][5]), 1e-12));
  // discord(theta) = discord(pi/2 - theta): rows 1..5 mirror around pi/4
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(close(cell_value(rows[1 + i][5]), cell_value(rows[5 - i][5]), 1e-12));
}

TEST_CASE("a-only sweep at large equal photon numbers tracks the Werner limit") {
  TempDir tmp;
  SweepSpec spec;
  spec.parity = Parity::Plus;
  spec.a = Range::parse("0:1:0.1");
  spec.alpha_sq = Range::fixed(25.0);
  spec.beta_sq = Range::fixed(25.0);
  spec.out_path = (tmp.path / "werner.csv").string();
  CHECK(run_sweep(spec, std::cerr) == 0);

  const auto rows = parse_csv(slurp(spec.out_path));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double a = cell_value(rows[i][1]);
    const WernerMeasures reference = werner_limit_measures(a);
    CHECK(close(cell_value(rows[i][5]), reference.discord, 1e-8));
    CHECK(close(cell_value(rows[i][11]), reference.eof, 1e-8));
  }
}

TEST_CASE("figure surfaces carry the documented qualitative features") {
  TempDir tmp;
  FigureOptions opt;
  opt.grid = 11;
  opt.out_dir = tmp.path.string();
  opt.threads = 2;

  opt.id = "fig2";
  CHECK(run_figure(opt, std::cerr) == 0);
  for (const char* panel : {"b", "c"}) {  // photon settings 1.5 and 3.0
    const auto rows = parse_csv(slurp(tmp.path / (std::string("fig2") + panel + ".csv")));
    CHECK(rows[0] == std::vector<std::string>{"a", "theta", "discord"});
    // flat in theta per mixing row
    for (std::size_t base = 1; base < rows.size(); base += 11) {
      double lo = 1e300, hi = -1e300;
      for (std::size_t k = 0; k < 11; ++k) {
        const double d = cell_value(rows[base + k][2]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      CHECK(hi - lo <= 1e-6);
    }
  }

  opt.id = "fig3";
  CHECK(run_figure(opt, std::cerr) == 0);
  const auto fig3 = parse_csv(slurp(tmp.path / "fig3a.csv"));
  CHECK(fig3[0] == std::vector<std::string>{"a", "alpha_sq", "eof"});
  // nondecreasing along a at each fixed alpha_sq
  for (std::size_t col = 0; col < 11; ++col) {
    for (std::size_t row = 0; row + 1 < 11; ++row) {
      const double lower = cell_value(fig3[1 + row * 11 + col][2]);
      const double upper = cell_value(fig3[1 + (row + 1) * 11 + col][2]);
      CHECK(upper >= lower - 1e-12);
    }
  }

  opt.id = "fig5";
  CHECK(run_figure(opt, std::cerr) == 0);
  const auto fig5 = parse_csv(slurp(tmp.path / "fig5b.csv"));
  CHECK(fig5[0] == std::vector<std::string>{"a", "alpha_sq", "delta_minus_eof"});
  // delta - E is nonnegative up to the a ~ 0.879 crossover and dips only
  // slightly below zero past it
  for (std::size_t i = 1; i < fig5.size(); ++i) {
    const double value = cell_value(fig5[i][2]);
    if (cell_value(fig5[i][0]) <= 0.8) CHECK(value >= -1e-9);
    CHECK(value >= -0.02);
  }

  opt.id = "fig9";
  CHECK_THROWS_AS(run_figure(opt, std::cerr), InvalidArgument);
}

TEST_CASE("verify gate") {
  std::ostringstream out;
  CHECK(run_verify(VerifyOptions{200, 42, 1e-10, false}, out) == 0);
  CHECK(out.str().find("PASS") != std::string::npos);

  std::ostringstream strict;
  CHECK(run_verify(VerifyOptions{1, 7, 0.0, false}, strict) == 1);

  std::ostringstream printed;
  CHECK(run_verify(VerifyOptions{50, 42, 1e-10, true}, printed) == 1);
  CHECK(printed.str().find("FAIL") != std::string::npos);
  CHECK(printed.str().find("worst tuple") != std::string::npos);
}

TEST_CASE("CLI binary exit codes") {
  std::string output;
  CHECK(run_binary("point --parity plus --alpha-sq 1 --beta-sq 1 --a 0", &output) == 0);
  CHECK(output.find("\"discord\":0") != std::string::npos);

  CHECK(run_binary("point --parity minus --alpha-sq 0 --beta-sq 0 --a 0.5", &output) == 2);
  CHECK(output.find("\"error\"") != std::string::npos);
  CHECK(output.find("DegenerateState") != std::string::npos);

  CHECK(run_binary("point --parity plus --alpha-sq 1 --beta-sq 1 --a 1.5", &output) == 2);
  CHECK(output.find("MixingOutOfRange") != std::string::npos);

  // Bell-state Werner endpoint: discord and EoF reach 1, delta - E vanishes
  CHECK(run_binary("point --parity plus --alpha-sq 25 --beta-sq 25 --a 1", &output) == 0);
  auto field = [&output](const char* key) {
    const auto pos = output.find('"' + std::string(key) + "\":");
    REQUIRE(pos != std::string::npos);
    return std::stod(output.substr(pos + std::string(key).size() + 3));
  };
  CHECK(close(field("discord"), 1.0, 1e-6));
  CHECK(close(field("eof"), 1.0, 1e-6));
  CHECK(close(field("delta_minus_eof"), 0.0, 1e-6));

  CHECK(run_binary("verify --samples 25 --seed 3 --tol 1e-9", &output) == 0);
  CHECK(run_binary("verify --samples 1 --seed 7 --tol 0", &output) == 1);

  CHECK(run_binary("point --no-such-flag", &output) == 2);
  CHECK(run_binary("--help", &output) == 0);

  TempDir tmp;
  const std::string sweep_args = "sweep --parity plus --a 0:1:0.5 --alpha-sq 1 --beta-sq 1 --out " +
                                 (tmp.path / "s.csv").string();
  CHECK(run_binary(sweep_args, &output) == 0);
  CHECK(fs::exists(tmp.path / "s.csv"));
}
