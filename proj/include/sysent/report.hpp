#pragma once

#include <stdexcept>
#include <string>

namespace sysent {

enum class OutputFormat { csv, json, pretty };

/// Destination and shape of CLI output.  Numbers are rendered as decimal
/// strings at the configured precision so identical argv always produces
/// identical bytes.
struct OutputSpec {
  OutputFormat format = OutputFormat::pretty;
  std::string out_path;  // empty: standard output
  int precision = 6;

  void check() const {
    if (precision < 1 || precision > 15)
      throw std::invalid_argument("precision must lie in [1, 15]");
  }
};

// Fixed-point rendering for ordinary magnitudes, scientific for the rest;
// byte-deterministic for a given precision.
std::string format_number(double v, int precision);

OutputFormat parse_format(const std::string& name);

}  // namespace sysent
