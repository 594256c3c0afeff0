#include "fockbench/combinatorics.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace fockbench {

std::size_t memory_cap_bytes() {
  static const std::size_t cap = [] {
    std::size_t mb = 4096;
    if (const char* env = std::getenv("FOCKBENCH_CAP_MB")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) mb = static_cast<std::size_t>(v);
    }
    return mb * 1024ull * 1024ull;
  }();
  return cap;
}

void require_budget(std::size_t bytes, const std::string& what) {
  if (bytes > memory_cap_bytes()) {
    throw ResourceError(what + " needs " + std::to_string(bytes / (1024ull * 1024ull)) +
                        " MB, cap is " + std::to_string(memory_cap_bytes() / (1024ull * 1024ull)) +
                        " MB (set FOCKBENCH_CAP_MB to raise)");
  }
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("uint64 overflow in addition");
  return r;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("uint64 overflow in multiplication");
  return r;
}

std::uint64_t factorial_u64(unsigned n) {
  if (n > 20) throw ResourceError("factorial_u64: " + std::to_string(n) + "! exceeds uint64");
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i at every step.
    r = checked_mul_u64(r, n - k + i) / i;
  }
  return r;
}

double log_factorial(unsigned n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double sqrt_factorial_ratio(unsigned a, unsigned b) {
  if (a <= 20 && b <= 20) {
    return std::sqrt(static_cast<double>(factorial_u64(a)) /
                     static_cast<double>(factorial_u64(b)));
  }
  return std::exp(0.5 * (log_factorial(a) - log_factorial(b)));
}

CombinatoricsTable::CombinatoricsTable(unsigned cap) : m_cap(cap) {
  if (cap > 25) throw ResourceError("CombinatoricsTable: cap beyond exact uint64 range");
  m_s2.resize(cap + 1);
  m_bell.resize(cap + 1, 0);
  for (unsigned p = 0; p <= cap; ++p) {
    m_s2[p].assign(p + 1, 0);
    if (p == 0) {
      m_s2[0][0] = 1;  // empty partition
    } else {
      for (unsigned k = 1; k <= p; ++k) {
        std::uint64_t carry = (k <= p - 1) ? checked_mul_u64(k, m_s2[p - 1][k]) : 0;
        std::uint64_t split = m_s2[p - 1][k - 1];
        m_s2[p][k] = checked_add_u64(carry, split);
      }
    }
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= p; ++k) total = checked_add_u64(total, m_s2[p][k]);
    m_bell[p] = total;
  }
}

std::uint64_t CombinatoricsTable::stirling2(unsigned p, unsigned k) const {
  if (p > m_cap) throw ResourceError("stirling2: index beyond table cap");
  if (k > p) return 0;
  return m_s2[p][k];
}

std::uint64_t CombinatoricsTable::bell(unsigned p) const {
  if (p > m_cap) throw ResourceError("bell: index beyond table cap");
  return m_bell[p];
}

double CombinatoricsTable::bell_growth_bound(unsigned p) {
  double x = 0.792 * static_cast<double>(p) / std::log(static_cast<double>(p) + 1.0);
  return std::pow(x, static_cast<double>(p));
}

}  // namespace fockbench
