#pragma once

#include <cstdint>
#include <vector>

#include "fockbench/common.hpp"

namespace fockbench {

// Exact integer helpers. All of these throw ResourceError on uint64 overflow
// rather than wrapping; factors that must stay exact (particle-number
// prefactors) go through these paths and are converted to double once.
std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t factorial_u64(unsigned n);  // n <= 20
std::uint64_t binomial_u64(unsigned n, unsigned k);

// log(n!) for sizes past the exact range.
double log_factorial(unsigned n);

// sqrt(a! / b!), exact under the root whenever both factorials fit in uint64.
double sqrt_factorial_ratio(unsigned a, unsigned b);

// Set-partition counts: S2(p, k) blocks-of-k partitions and Bell totals,
// exact up to the cap (default 25; B_25 still fits in uint64).
class CombinatoricsTable {
 public:
  explicit CombinatoricsTable(unsigned cap = 25);

  unsigned cap() const { return m_cap; }
  std::uint64_t stirling2(unsigned p, unsigned k) const;
  std::uint64_t bell(unsigned p) const;

  // (0.792 p / log(p+1))^p, the classical elementary upper bound on B_p.
  static double bell_growth_bound(unsigned p);

 private:
  unsigned m_cap;
  std::vector<std::vector<std::uint64_t>> m_s2;  // m_s2[p][k], 0 <= k <= p
  std::vector<std::uint64_t> m_bell;
};

}  // namespace fockbench
