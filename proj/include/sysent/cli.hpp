#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sysent {

// Full command dispatch: parses argv (program name excluded), executes, and
// writes per the output spec.  Returns 0 on success, 1 on domain errors,
// 2 on usage errors.  Identical argv produces byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sysent
