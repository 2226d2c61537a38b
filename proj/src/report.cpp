#include "sysent/report.hpp"

#include <cmath>
#include <cstdio>

namespace sysent {

std::string format_number(double v, int precision) {
  char buf[64];
  const double a = std::abs(v);
  if (v == 0.0 || (a >= 1e-4 && a < 1e15))
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  else
    std::snprintf(buf, sizeof(buf), "%.*e", precision, v);
  return buf;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "pretty") return OutputFormat::pretty;
  throw std::invalid_argument("unknown format: " + name);
}

}  // namespace sysent
