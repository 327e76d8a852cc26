#include "qwerner/types.hpp"

#include <cmath>
#include <numbers>

namespace qwerner {

namespace {

// Reduce into [0, limit) by subtracting whole periods; inputs already inside
// [0, limit] (including the right endpoint) are kept verbatim.
double wrap(double v, double limit) {
  if (v >= 0.0 && v <= limit) return v;
  double r = std::fmod(v, limit);
  if (r < 0.0) r += limit;
  return r;
}

}  // namespace

MeasurementAngles::MeasurementAngles(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw InvalidArgument("measurement angles must be finite");
  // The projector pair satisfies {Pi(theta + pi/2)} = {Pi(theta)} with labels
  // swapped, so reduction mod pi/2 preserves the measurement.
  theta_ = wrap(theta, std::numbers::pi / 2);
  phi_ = wrap(phi, 2 * std::numbers::pi);
  if (phi_ == 2 * std::numbers::pi) phi_ = 0.0;
}

}  // namespace qwerner
