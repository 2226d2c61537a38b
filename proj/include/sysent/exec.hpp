#pragma once

namespace sysent {

// Execution policy for the data-parallel kernels.  Every kernel has a serial
// reference path; the parallel path must produce identical results, which the
// test suite and the bench tool both check.
enum class Exec { serial, par };

}  // namespace sysent
