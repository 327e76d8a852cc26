#include "qwerner/report.hpp"

#include "qwerner/closed_form.hpp"
#include "qwerner/minimizer.hpp"

namespace qwerner {

CorrelationReport correlation_report(const CoherentParams& params, Parity parity, double a,
                                     std::optional<double> theta) {
  const MinimizationResult min = minimize_discord(params, parity, a);

  CorrelationReport report;
  report.delta = min.delta;
  report.theta_opt = min.theta_opt;
  report.mutual_info = mutual_information(params, parity, a);

  report.discord = theta ? discord(params, parity, a, *theta) : min.delta;
  report.classical_corr = report.mutual_info - report.discord;

  report.concurrence = concurrence_mixed(params, parity, a);
  report.eof = entanglement_of_formation(params, parity, a);
  report.delta_minus_eof = report.delta - report.eof;
  return report;
}

}  // namespace qwerner
