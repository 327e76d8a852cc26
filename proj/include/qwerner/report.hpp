#pragma once

#include <optional>

#include "qwerner/types.hpp"

namespace qwerner {

// Assembles the full correlation bundle at one parameter point. When theta
// is omitted the discord field is reported at theta_opt, so discord = delta.
CorrelationReport correlation_report(const CoherentParams& params, Parity parity, double a,
                                     std::optional<double> theta = std::nullopt);

}  // namespace qwerner
