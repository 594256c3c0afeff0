#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fockbench {

using cxd = std::complex<double>;

// Error taxonomy, mapped to process exit codes by the CLI driver:
//   ConfigError   -> 2  (bad configuration, schema violations, malformed JSON)
//   ResourceError -> 3  (memory/dimension caps exceeded)
//   CheckFailure  -> 4  (a numerical assertion failed)
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One line of a convergence study: a computed value against its prediction
// at a given scale parameter h.
struct ConvergenceRow {
  double h = 0.0;
  double value = 0.0;
  double predicted = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
};

// Memory cap in bytes. Default 4096 MB, overridable through FOCKBENCH_CAP_MB.
std::size_t memory_cap_bytes();

// Throws ResourceError if `bytes` exceeds the configured cap.
void require_budget(std::size_t bytes, const std::string& what);

}  // namespace fockbench
