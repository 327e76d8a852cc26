#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qwerner/cli.hpp"
#include "qwerner/errors.hpp"
#include "qwerner/types.hpp"

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out += ch;
  }
  return out;
}

int emit_error(const std::string& code, const std::string& message) {
  std::cout << "{\"error\":{\"code\":\"" << json_escape(code) << "\",\"message\":\""
            << json_escape(message) << "\"}}\n";
  return 2;
}

double parse_scalar(const std::string& flag, const std::string& text) {
  if (text.find(':') != std::string::npos)
    throw qwerner::InvalidArgument(flag + " expects a single value, got range '" + text + "'");
  return qwerner::cli::Range::parse(text).start;
}

std::array<double, 3> parse_photon_settings(const std::string& text) {
  std::array<double, 3> out{};
  std::size_t begin = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', begin);
    const bool last = i == 2;
    if (last != (comma == std::string::npos))
      throw qwerner::InvalidArgument("--photon-settings expects three comma-separated values");
    const std::string part = text.substr(begin, last ? std::string::npos : comma - begin);
    out[static_cast<std::size_t>(i)] = parse_scalar("--photon-settings", part);
    begin = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using qwerner::cli::Range;

  CLI::App app{"Correlation measures of quasi-Werner states built from bipartite superposed "
               "coherent states"};
  app.require_subcommand(1);

  std::string parity = "plus";
  std::string alpha_sq = "1";
  std::string beta_sq = "1";
  std::string mixing = "0.5";
  std::string theta;
  double phi = 0.0;
  bool phi_given = false;
  std::string out_path;
  std::string format = "csv";
  int grid = 101;
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::string photon_settings = "0.5,1.5,3.0";
  bool use_printed_eq23 = false;
  int threads = 1;
  std::string figure_id;

  CLI::App* point = app.add_subcommand("point", "Print the correlation report at one point as JSON");
  point->add_option("--parity", parity, "plus | minus");
  point->add_option("--alpha-sq", alpha_sq, "mean photon number of mode X")->required();
  point->add_option("--beta-sq", beta_sq, "mean photon number of mode Y")->required();
  point->add_option("--a", mixing, "mixing parameter in [0,1]")->required();
  point->add_option("--theta", theta, "reporting measurement angle; omitted: report at theta*");
  point->add_option("--phi", phi, "measurement azimuth (no reported quantity depends on it)")
      ->each([&](const std::string&) { phi_given = true; });

  CLI::App* sweep = app.add_subcommand("sweep", "Write correlation reports over a parameter grid");
  sweep->add_option("--parity", parity, "plus | minus");
  sweep->add_option("--a", mixing, "fixed value or start:stop:step")->required();
  sweep->add_option("--alpha-sq", alpha_sq, "fixed value or start:stop:step")->required();
  sweep->add_option("--beta-sq", beta_sq, "fixed value or start:stop:step")->required();
  sweep->add_option("--theta", theta, "fixed value or start:stop:step; omitted: report at theta*");
  sweep->add_option("--out", out_path, "output file")->required();
  sweep->add_option("--format", format, "csv | json");
  sweep->add_option("--threads", threads, "worker threads (output is order-deterministic)");

  CLI::App* figure = app.add_subcommand("figure", "Write surface data for one of fig1..fig6");
  figure->add_option("id", figure_id, "fig1..fig6")->required();
  figure->add_option("--out", out_path, "output directory")->required();
  figure->add_option("--grid", grid, "grid resolution per axis");
  figure->add_option("--photon-settings", photon_settings,
                     "mean photon numbers of sub-panels (a)-(c)");
  figure->add_option("--threads", threads, "worker threads (output is order-deterministic)");

  CLI::App* verify = app.add_subcommand("verify", "Cross-validate closed forms against the oracle");
  verify->add_option("--samples", samples, "number of random tuples");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--tol", tol, "max allowed absolute deviation");
  verify->add_flag("--use-printed-eq23", use_printed_eq23,
                   "gate the minus-parity check on the published P2 variant (expected to fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return emit_error("ParseError", e.what());
  }

  try {
    if (*point) {
      qwerner::cli::PointOptions opt;
      opt.parity = qwerner::parity_from_string(parity);
      opt.alpha_sq = parse_scalar("--alpha-sq", alpha_sq);
      opt.beta_sq = parse_scalar("--beta-sq", beta_sq);
      opt.a = parse_scalar("--a", mixing);
      if (!theta.empty()) opt.theta = parse_scalar("--theta", theta);
      if (phi_given) opt.phi = phi;
      return qwerner::cli::run_point(opt, std::cout);
    }
    if (*sweep) {
      qwerner::cli::SweepSpec spec;
      spec.parity = qwerner::parity_from_string(parity);
      spec.a = Range::parse(mixing);
      spec.alpha_sq = Range::parse(alpha_sq);
      spec.beta_sq = Range::parse(beta_sq);
      if (!theta.empty()) spec.theta = Range::parse(theta);
      spec.out_path = out_path;
      if (format != "csv" && format != "json")
        throw qwerner::InvalidArgument("--format must be csv or json");
      spec.format = format == "csv" ? qwerner::cli::Format::Csv : qwerner::cli::Format::Json;
      spec.threads = threads;
      return qwerner::cli::run_sweep(spec, std::cerr);
    }
    if (*figure) {
      qwerner::cli::FigureOptions opt;
      opt.id = figure_id;
      opt.out_dir = out_path;
      opt.grid = grid;
      opt.photon_settings = parse_photon_settings(photon_settings);
      opt.threads = threads;
      return qwerner::cli::run_figure(opt, std::cerr);
    }
    qwerner::cli::VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.tol = tol;
    opt.use_printed_eq23 = use_printed_eq23;
    return qwerner::cli::run_verify(opt, std::cout);
  } catch (const qwerner::Error& e) {
    return emit_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return emit_error("InternalError", e.what());
  }
}
