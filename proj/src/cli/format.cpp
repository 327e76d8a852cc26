#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <system_error>

#include "qwerner/cli.hpp"
#include "qwerner/errors.hpp"

namespace qwerner::cli {

namespace {

std::string shortest_repr(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// Count mantissa digits, ignoring sign, decimal point, exponent and leading
// zeros.
int significant_digits(const std::string& repr) {
  int count = 0;
  bool leading = true;
  for (char ch : repr) {
    if (ch == 'e' || ch == 'E') break;
    if (ch < '0' || ch > '9') continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw InvalidArgument("not a number: '" + text + "'");
  return value;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // canonicalize -0
  const std::string shortest = shortest_repr(x);
  if (significant_digits(shortest) <= 12) return shortest;

  // Round to 12 significant digits, then print that value's shortest form
  // (which cannot need more digits than the 12 it was parsed from).
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  double rounded = 0.0;
  std::from_chars(buf, res.ptr, rounded);
  return shortest_repr(rounded);
}

Range Range::parse(const std::string& text) {
  const std::size_t first = text.find(':');
  if (first == std::string::npos) return Range::fixed(parse_double(text));

  const std::size_t second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
    throw InvalidArgument("range must be '<value>' or '<start>:<stop>:<step>', got '" + text +
                          "'");
  Range range;
  range.start = parse_double(text.substr(0, first));
  range.stop = parse_double(text.substr(first + 1, second - first - 1));
  range.step = parse_double(text.substr(second + 1));
  if (!(range.step > 0.0)) throw InvalidArgument("range step must be > 0");
  if (!(range.start <= range.stop)) throw InvalidArgument("range start must be <= stop");
  return range;
}

std::vector<double> Range::values() const {
  // stop is inclusive; clamp guards accumulated roundoff past it.
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 20'000'000) throw InvalidArgument("range generates more than 2e7 points");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(std::min(start + static_cast<double>(i) * step, stop));
  return out;
}

}  // namespace qwerner::cli
