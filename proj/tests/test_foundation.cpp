#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fockbench/combinatorics.hpp"
#include "fockbench/common.hpp"
#include "fockbench/linalg.hpp"
#include "fockbench/rng.hpp"

using namespace fockbench;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("exact integer helpers") {
  CHECK(factorial_u64(0) == 1);
  CHECK(factorial_u64(1) == 1);
  CHECK(factorial_u64(5) == 120);
  CHECK(factorial_u64(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial_u64(21), ResourceError);

  CHECK(binomial_u64(0, 0) == 1);
  CHECK(binomial_u64(6, 2) == 15);
  CHECK(binomial_u64(10, 5) == 252);
  CHECK(binomial_u64(52, 5) == 2598960);
  CHECK(binomial_u64(5, 7) == 0);

  CHECK(checked_add_u64(2, 3) == 5);
  CHECK_THROWS_AS(checked_add_u64(~0ULL, 1), ResourceError);
  CHECK(checked_mul_u64(6, 7) == 42);
  CHECK_THROWS_AS(checked_mul_u64(1ULL << 40, 1ULL << 40), ResourceError);

  CHECK(log_factorial(0) == doctest::Approx(0.0));
  CHECK(log_factorial(10) ==
        doctest::Approx(std::log(static_cast<double>(factorial_u64(10)))));
  CHECK(sqrt_factorial_ratio(5, 3) == doctest::Approx(std::sqrt(20.0)));
  CHECK(sqrt_factorial_ratio(40, 38) == doctest::Approx(std::sqrt(40.0 * 39.0)));
}

TEST_CASE("set-partition table") {
  CombinatoricsTable table;
  CHECK(table.stirling2(0, 0) == 1);
  CHECK(table.stirling2(4, 2) == 7);
  CHECK(table.stirling2(5, 3) == 25);
  CHECK(table.stirling2(3, 5) == 0);
  CHECK(table.bell(0) == 1);
  CHECK(table.bell(4) == 15);
  CHECK(table.bell(5) == 52);
  CHECK(table.bell(10) == 115975);
  // Row sums define the Bell numbers.
  for (unsigned p = 0; p <= table.cap(); ++p) {
    std::uint64_t sum = 0;
    for (unsigned k = 0; k <= p; ++k) sum += table.stirling2(p, k);
    CHECK(sum == table.bell(p));
  }
  // The elementary growth bound dominates the exact values.
  for (unsigned p = 1; p <= table.cap(); ++p) {
    CHECK(CombinatoricsTable::bell_growth_bound(p) >=
          static_cast<double>(table.bell(p)));
  }
  CHECK_THROWS_AS(CombinatoricsTable(26), ResourceError);
  CHECK_THROWS_AS(table.bell(26), ResourceError);
}

TEST_CASE("memory budget guard") {
  CHECK(memory_cap_bytes() > 0);
  CHECK_NOTHROW(require_budget(1024, "small buffer"));
  CHECK_THROWS_AS(require_budget(memory_cap_bytes() + 1, "huge buffer"),
                  ResourceError);
}

TEST_CASE("counter rng determinism and marginals") {
  CounterRng a(42, 0);
  CounterRng b(42, 0);
  for (int i = 0; i < 200; ++i) {
    double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  // Distinct streams of the same seed decorrelate immediately.
  CounterRng c(42, 1);
  int same = 0;
  CounterRng a2(42, 0);
  for (int i = 0; i < 64; ++i) {
    if (a2.uniform() == c.uniform()) ++same;
  }
  CHECK(same == 0);
  // Gaussian moments at Monte Carlo accuracy.
  CounterRng g(7, 3);
  const int n = 20000;
  double mean = 0.0, var = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = g.normal();
    mean += x;
    var += x * x;
  }
  mean /= n;
  var /= n;
  CHECK(std::abs(mean) < 0.03);
  CHECK(std::abs(var - 1.0) < 0.05);
  // Complex normal normalized to E|w|^2 = 1.
  CounterRng h(7, 4);
  double cvar = 0.0;
  for (int i = 0; i < n; ++i) cvar += std::norm(h.cnormal());
  cvar /= n;
  CHECK(std::abs(cvar - 1.0) < 0.05);
}

TEST_CASE("matrix exponential against closed forms") {
  // Nilpotent: exp truncates exactly.
  Mat n2 = Mat::Zero(2, 2);
  n2(0, 1) = 3.0;
  Mat e = expm(n2);
  CHECK(std::abs(e(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(e(0, 1) - 3.0) < 1e-14);
  CHECK(std::abs(e(1, 0)) < 1e-14);
  CHECK(std::abs(e(1, 1) - 1.0) < 1e-14);

  // Rotation generator: exp(theta J) = [[cos, -sin], [sin, cos]].
  const double theta = 0.83;
  Mat j = Mat::Zero(2, 2);
  j(0, 1) = -theta;
  j(1, 0) = theta;
  Mat r = expm(j);
  CHECK(std::abs(r(0, 0) - std::cos(theta)) < 1e-13);
  CHECK(std::abs(r(0, 1) + std::sin(theta)) < 1e-13);
  CHECK(std::abs(r(1, 0) - std::sin(theta)) < 1e-13);
  CHECK(std::abs(r(1, 1) - std::cos(theta)) < 1e-13);

  // Large norm exercises the squaring phase: scalar 30 on the diagonal.
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 30.0;
  d(1, 1) = -5.0;
  Mat ed = expm(d);
  CHECK(std::abs(ed(0, 0) - std::exp(30.0)) / std::exp(30.0) < 1e-12);
  CHECK(std::abs(ed(1, 1) - std::exp(-5.0)) / std::exp(-5.0) < 1e-12);

  // expm_multiply agrees with the dense exponential on a random matrix.
  CounterRng rng(11, 0);
  Mat m = random_complex_matrix(rng, 6, 6);
  Vec v = random_complex_matrix(rng, 6, 1).col(0);
  Vec via_dense = expm(m) * v;
  Vec via_action = expm_multiply(m, v);
  CHECK((via_dense - via_action).norm() / via_dense.norm() < 1e-11);
}

TEST_CASE("eigen and determinant wrappers") {
  // Hermitian 2x2 with known spectrum {1, 3}.
  Mat a(2, 2);
  a << cxd(2, 0), cxd(0, -1), cxd(0, 1), cxd(2, 0);
  HermEig eig = hermitian_eig(a);
  CHECK(eig.values(0) == doctest::Approx(1.0));
  CHECK(eig.values(1) == doctest::Approx(3.0));
  Mat recon = eig.vectors * eig.values.cast<cxd>().asDiagonal() *
              eig.vectors.adjoint();
  CHECK((recon - a).norm() < 1e-13);

  MatR s(2, 2);
  s << 0.0, 1.0, 1.0, 0.0;
  SymEig seig = symmetric_eig(s);
  CHECK(seig.values(0) == doctest::Approx(-1.0));
  CHECK(seig.values(1) == doctest::Approx(1.0));

  CHECK(std::abs(det(a) - cxd(3.0, 0.0)) < 1e-13);  // 2*2 - |i|^2
  Mat u(2, 2);
  u << cxd(0, 1), cxd(0, 0), cxd(0, 0), cxd(0, 1);
  CHECK(std::abs(det(u) - cxd(-1, 0)) < 1e-14);

  // operator_norm of a rank-one matrix is the product of the factor norms.
  Vec x(3), y(3);
  x << 1.0, 2.0, 2.0;
  y << cxd(0, 3), cxd(4, 0), cxd(0, 0);
  Mat rank1 = x * y.adjoint();
  CHECK(operator_norm(rank1) == doctest::Approx(15.0));

  MatR hbig = MatR::Zero(5, 5);
  for (int i = 0; i < 5; ++i) hbig(i, i) = i - 2.5;
  CHECK(hermitian_norm_estimate(hbig) == doctest::Approx(2.5).epsilon(1e-6));
}

TEST_CASE("fft wrappers against the direct sum") {
  const int n = 8;
  CounterRng rng(13, 0);
  std::vector<cxd> data(n);
  for (auto& v : data) v = rng.cnormal();
  std::vector<cxd> input = data;

  dft_inplace(data, -1);
  for (int r = 0; r < n; ++r) {
    cxd direct(0, 0);
    for (int l = 0; l < n; ++l) {
      double ang = -2.0 * kPi * l * r / n;
      direct += input[l] * cxd(std::cos(ang), std::sin(ang));
    }
    CHECK(std::abs(data[r] - direct) < 1e-12);
  }
  // Round trip picks up the factor n.
  dft_inplace(data, +1);
  for (int l = 0; l < n; ++l) {
    CHECK(std::abs(data[l] / static_cast<double>(n) - input[l]) < 1e-12);
  }

  // 2-d round trip on a 4 x 8 block.
  const int n0 = 4, n1 = 8;
  std::vector<cxd> grid(n0 * n1);
  for (auto& v : grid) v = rng.cnormal();
  std::vector<cxd> grid_in = grid;
  dft2_inplace(grid, n0, n1, -1);
  dft2_inplace(grid, n0, n1, +1);
  for (int i = 0; i < n0 * n1; ++i) {
    CHECK(std::abs(grid[i] / static_cast<double>(n0 * n1) - grid_in[i]) < 1e-12);
  }
}

TEST_CASE("log-log slope estimator") {
  std::vector<double> x{1.0, 0.5, 0.25, 0.125};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v * v);  // order 2
  CHECK(log_log_slope(x, y) == doctest::Approx(2.0));
  // Sign-insensitive and zero-skipping.
  std::vector<double> y2{-3.0, 0.0, -3.0 * 0.25 * 0.25, -3.0 * 0.125 * 0.125};
  CHECK(log_log_slope(x, y2) == doctest::Approx(2.0));
}

TEST_CASE("random matrix helpers") {
  CounterRng rng(21, 0);
  Mat m = random_complex_matrix(rng, 4, 7);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 7);
  CHECK(m.norm() > 0.0);

  Mat h = random_hermitian(rng, 5, 0.7);
  CHECK((h - h.adjoint()).norm() < 1e-14);
  CHECK(operator_norm(h) == doctest::Approx(0.7));
}
