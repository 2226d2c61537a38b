#pragma once

#include <iosfwd>

namespace sysent {

// Runs the invariant suite, streaming one deterministic "ok/FAIL <name>" line
// per check; returns the number of failures.  quick = reduced depths and
// sample counts.
int verify_all(bool quick, std::ostream& out);

}  // namespace sysent
