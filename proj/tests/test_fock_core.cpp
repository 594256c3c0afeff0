#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fockbench/fock_core.hpp"
#include "fockbench/rng.hpp"

using namespace fockbench;

namespace {
std::uint64_t binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("permutation parity and statistics sign") {
  CHECK(permutation_parity({0, 1, 2}) == 1);
  CHECK(permutation_parity({1, 0, 2}) == -1);
  CHECK(permutation_parity({1, 2, 0}) == 1);  // 3-cycle = two swaps
  CHECK(permutation_parity({3, 2, 1, 0}) == 1);
  CHECK(statistics_sign(Statistics::bosonic, {1, 0, 2}) == 1.0);
  CHECK(statistics_sign(Statistics::fermionic, {1, 0, 2}) == -1.0);
  CHECK(statistics_name(Statistics::bosonic) == std::string("bosonic"));
  CHECK(statistics_name(Statistics::fermionic) == std::string("fermionic"));
}

TEST_CASE("one-particle inner product is anti-linear on the left") {
  Vec f(2), g(2);
  f << cxd(1, 1), cxd(0, 2);
  g << cxd(3, 0), cxd(1, -1);
  cxd base = OneParticleSpace::inner(f, g);
  CHECK(std::abs(base - (std::conj(cxd(1, 1)) * cxd(3, 0) +
                         std::conj(cxd(0, 2)) * cxd(1, -1))) < 1e-15);
  cxd scaled = OneParticleSpace::inner(cxd(0, 1) * f, g);
  CHECK(std::abs(scaled - std::conj(cxd(0, 1)) * base) < 1e-15);
  cxd right = OneParticleSpace::inner(f, cxd(0, 1) * g);
  CHECK(std::abs(right - cxd(0, 1) * base) < 1e-15);
  Vec bad(3);
  bad.setZero();
  CHECK_THROWS_AS(OneParticleSpace::inner(f, bad), ConfigError);
  CHECK_THROWS_AS(OneParticleSpace(0), ConfigError);
}

TEST_CASE("sector dimensions") {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned n = 0; n <= 6; ++n) {
      CHECK(sector_dimension(Statistics::bosonic, m, n) == binom(n + m - 1, n));
      CHECK(sector_dimension(Statistics::fermionic, m, n) == binom(m, n));
    }
  }
  CHECK(sector_dimension(Statistics::fermionic, 3, 4) == 0);
}

TEST_CASE("sector basis enumeration and lookup") {
  SectorBasis bos(Statistics::bosonic, 2, 2);
  REQUIRE(bos.dim() == 3);
  CHECK(bos.occupation(0) == std::vector<unsigned>{2, 0});
  CHECK(bos.occupation(1) == std::vector<unsigned>{1, 1});
  CHECK(bos.occupation(2) == std::vector<unsigned>{0, 2});

  SectorBasis fer(Statistics::fermionic, 3, 2);
  REQUIRE(fer.dim() == 3);
  CHECK(fer.occupation(0) == std::vector<unsigned>{1, 1, 0});
  CHECK(fer.occupation(1) == std::vector<unsigned>{1, 0, 1});
  CHECK(fer.occupation(2) == std::vector<unsigned>{0, 1, 1});

  for (std::size_t i = 0; i < fer.dim(); ++i) {
    CHECK(fer.index_of(fer.occupation(i)) == i);
    CHECK(fer.contains(fer.occupation(i)));
  }
  CHECK_FALSE(fer.contains({2, 0, 0}));
  CHECK_THROWS_AS(fer.index_of({2, 0, 0}), ConfigError);

  // Descending lexicographic order across a bigger sector.
  SectorBasis big(Statistics::bosonic, 3, 3);
  for (std::size_t i = 0; i + 1 < big.dim(); ++i) {
    CHECK(big.occupation(i) > big.occupation(i + 1));
  }
}

TEST_CASE("ordered tensor utilities") {
  CHECK(tensor_dim_checked(2, 3) == 8);
  CHECK(tensor_dim_checked(16, 4) == 65536);
  CHECK_THROWS_AS(tensor_dim_checked(2, 17), ResourceError);

  // kron: leftmost factor owns the most significant index.
  Mat a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 5.0, 6.0, 7.0;
  Mat k = kron(a, b);
  REQUIRE(k.rows() == 4);
  for (int i0 = 0; i0 < 2; ++i0)
    for (int i1 = 0; i1 < 2; ++i1)
      for (int j0 = 0; j0 < 2; ++j0)
        for (int j1 = 0; j1 < 2; ++j1)
          CHECK(std::abs(k(i0 * 2 + i1, j0 * 2 + j1) - a(i0, j0) * b(i1, j1)) <
                1e-15);

  Vec f(2);
  f << cxd(1, 0), cxd(0, 2);
  Vec f2 = tensor_power(f, 2);
  REQUIRE(f2.size() == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(f2(i * 2 + j) - f(i) * f(j)) < 1e-15);
  CHECK(tensor_power(f, 0).size() == 1);
  CHECK(std::abs(tensor_power(f, 0)(0) - cxd(1, 0)) < 1e-15);
}

TEST_CASE("symmetrizer projector laws") {
  for (Statistics stat : {Statistics::bosonic, Statistics::fermionic}) {
    for (unsigned m : {2u, 3u}) {
      for (unsigned p : {1u, 2u, 3u}) {
        Mat s = symmetrizer(stat, m, p);
        CHECK((s * s - s).norm() < 1e-12);
        CHECK((s - s.adjoint()).norm() < 1e-12);
        // Rank of the projector = sector dimension.
        double expected_rank =
            static_cast<double>(sector_dimension(stat, m, p));
        CHECK(std::abs(s.trace().real() - expected_rank) < 1e-10);
      }
    }
  }
  // Fermionic full antisymmetrizer over too few modes vanishes.
  CHECK(symmetrizer(Statistics::fermionic, 2, 3).norm() < 1e-14);
}

TEST_CASE("embed and restrict") {
  for (Statistics stat : {Statistics::bosonic, Statistics::fermionic}) {
    EmbedRestrict er = embed_restrict(stat, 3, 2);
    std::size_t d = sector_dimension(stat, 3, 2);
    REQUIRE(static_cast<std::size_t>(er.embed.cols()) == d);
    REQUIRE(er.embed.rows() == 9);
    CHECK((er.restrict_map - er.embed.adjoint()).norm() < 1e-14);
    Mat id = er.restrict_map * er.embed;
    CHECK((id - Mat::Identity(d, d)).norm() < 1e-12);
    Mat proj = er.embed * er.restrict_map;
    CHECK((proj - symmetrizer(stat, 3, 2)).norm() < 1e-12);
  }

  // Occupation-state coordinates in the ordered basis: bosonic [2,0] is
  // e0 (x) e0; [1,1] is the symmetric pair over sqrt(2).
  EmbedRestrict bos = embed_restrict(Statistics::bosonic, 2, 2);
  SectorBasis basis(Statistics::bosonic, 2, 2);
  std::size_t i20 = basis.index_of({2, 0});
  std::size_t i11 = basis.index_of({1, 1});
  CHECK(std::abs(bos.embed(0, i20) - cxd(1, 0)) < 1e-14);
  CHECK(std::abs(bos.embed(1, i11) - cxd(1 / std::sqrt(2.0), 0)) < 1e-14);
  CHECK(std::abs(bos.embed(2, i11) - cxd(1 / std::sqrt(2.0), 0)) < 1e-14);

  // Fermionic wedge in increasing mode order: e0 ^ e1 =
  // (e0 (x) e1 - e1 (x) e0)/sqrt(2), positive on the increasing slot.
  EmbedRestrict fer = embed_restrict(Statistics::fermionic, 2, 2);
  CHECK(std::abs(fer.embed(1, 0) - cxd(1 / std::sqrt(2.0), 0)) < 1e-14);
  CHECK(std::abs(fer.embed(2, 0) + cxd(1 / std::sqrt(2.0), 0)) < 1e-14);
}

TEST_CASE("symmetrized operator product") {
  CounterRng rng(31, 0);
  Mat a = random_complex_matrix(rng, 3, 3);
  Mat b = random_complex_matrix(rng, 3, 3);
  // Order of the factors is irrelevant.
  CHECK((odot({a, b}) - odot({b, a})).norm() < 1e-12);
  // Single factor is the factor itself.
  CHECK((odot({a}) - a).norm() < 1e-14);
  // Identity factors give the identity on the tensor space.
  Mat i3 = Mat::Identity(3, 3);
  CHECK((odot({i3, i3}) - Mat::Identity(9, 9)).norm() < 1e-14);
  // Equal factors reduce to the plain Kronecker power.
  CHECK((odot({a, a}) - kron(a, a)).norm() < 1e-12);
  // Explicit two-factor formula.
  Mat manual = 0.5 * (kron(a, b) + kron(b, a));
  CHECK((odot({a, b}) - manual).norm() < 1e-12);
}
