#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fockbench/operators.hpp"
#include "fockbench/rng.hpp"

using namespace fockbench;

namespace {

// Restriction of a dense Fock operator to the sectors strictly below the
// cutoff, where truncation cannot have removed anything.
Mat below_top(const FockOperator& op) {
  const TruncatedFock& sp = op.space();
  std::size_t d = sp.sector_offset(sp.n_max());
  return op.matrix().topLeftCorner(d, d);
}

}  // namespace

TEST_CASE("truncated space layout") {
  TruncatedFock bos(Statistics::bosonic, 2, 3, 0.5);
  CHECK(bos.modes() == 2);
  CHECK(bos.n_max() == 3);
  CHECK(bos.eps() == 0.5);
  // dim = 1 + 2 + 3 + 4.
  CHECK(bos.dim() == 10);
  CHECK(bos.sector_offset(0) == 0);
  CHECK(bos.sector_offset(1) == 1);
  CHECK(bos.sector_offset(2) == 3);
  CHECK(bos.sector_offset(3) == 6);
  CHECK(bos.sector_dim(2) == 3);
  CHECK(bos.state_index(2, 1) == 4);
  CHECK(bos.same_space(bos));
  TruncatedFock other(Statistics::bosonic, 2, 3, 0.5);
  CHECK_FALSE(bos.same_space(other));

  // Fermionic cutoff clamps to the mode count.
  TruncatedFock fer(Statistics::fermionic, 2, 5, 1.0);
  CHECK(fer.n_max() == 2);
  CHECK(fer.dim() == 4);
  CHECK_THROWS_AS(fer.sector(3), ConfigError);
  CHECK_THROWS_AS(TruncatedFock(Statistics::bosonic, 2, 3, 0.0), ConfigError);
  CHECK_THROWS_AS(TruncatedFock(Statistics::bosonic, 0, 3, 1.0), ConfigError);
}

TEST_CASE("ladder operator amplitudes") {
  const double eps = 0.3;
  TruncatedFock sp(Statistics::bosonic, 1, 4, eps);
  Vec e0(1);
  e0 << 1.0;
  FockOperator a = annihilation(sp, e0);
  // a |n> = sqrt(eps n) |n-1> on a single mode.
  for (unsigned n = 1; n <= 4; ++n) {
    cxd amp = a.matrix()(sp.state_index(n - 1, 0), sp.state_index(n, 0));
    CHECK(std::abs(amp - std::sqrt(eps * n)) < 1e-14);
  }
  FockOperator ad = creation(sp, e0);
  CHECK((ad.matrix() - a.matrix().adjoint()).norm() < 1e-15);
  // Block structure: annihilation only (n-1, n), creation only (n+1, n).
  for (auto [no, ni] : a.nonzero_blocks()) CHECK(no + 1 == ni);
  for (auto [no, ni] : ad.nonzero_blocks()) CHECK(no == ni + 1);

  // Anti-linearity in the test vector.
  TruncatedFock sp2(Statistics::bosonic, 2, 3, eps);
  CounterRng rng(101, 0);
  Vec f = random_complex_matrix(rng, 2, 1).col(0);
  Mat direct = annihilation(sp2, f).matrix();
  Mat scaled = annihilation(sp2, cxd(0, 1) * f).matrix();
  CHECK((scaled - std::conj(cxd(0, 1)) * direct).norm() < 1e-13);

  // Fermionic sign: acting on the second mode of |1,1> passes one occupied
  // mode, so a_1 |1,1> = -sqrt(eps) |1,0>.
  TruncatedFock fsp(Statistics::fermionic, 2, 2, eps);
  Vec e1(2);
  e1 << 0.0, 1.0;
  FockOperator af = annihilation(fsp, e1);
  std::size_t row = fsp.state_index(1, fsp.sector(1).index_of({1, 0}));
  std::size_t col = fsp.state_index(2, 0);
  CHECK(std::abs(af.matrix()(row, col) + std::sqrt(eps)) < 1e-14);
}

TEST_CASE("commutation relations at scale eps") {
  const double eps = 0.25;
  CounterRng rng(102, 0);

  // Bosonic CCR holds below the cutoff wall.
  TruncatedFock bos(Statistics::bosonic, 2, 5, eps);
  Vec f = random_complex_matrix(rng, 2, 1).col(0);
  Vec g = random_complex_matrix(rng, 2, 1).col(0);
  Mat ag = annihilation(bos, g).matrix();
  Mat cf = creation(bos, f).matrix();
  FockOperator comm(bos, ag * cf - cf * ag);
  cxd pairing = OneParticleSpace::inner(g, f);
  Mat defect = below_top(comm) -
               eps * pairing *
                   Mat::Identity(bos.sector_offset(5), bos.sector_offset(5));
  CHECK(defect.norm() < 1e-12);
  // Two annihilators always commute.
  Mat af = annihilation(bos, f).matrix();
  CHECK((ag * af - af * ag).norm() < 1e-13);

  // Fermionic CAR is exact on the whole truncation at n_max = m.
  TruncatedFock fer(Statistics::fermionic, 3, 3, eps);
  Vec u = random_complex_matrix(rng, 3, 1).col(0);
  Vec v = random_complex_matrix(rng, 3, 1).col(0);
  Mat au = annihilation(fer, u).matrix();
  Mat cv = creation(fer, v).matrix();
  Mat anti = au * cv + cv * au;
  cxd fpair = OneParticleSpace::inner(u, v);
  CHECK((anti - eps * fpair * Mat::Identity(fer.dim(), fer.dim())).norm() <
        1e-12);
  Mat av = annihilation(fer, v).matrix();
  CHECK((au * av + av * au).norm() < 1e-13);
}

TEST_CASE("second quantization against tensor oracles") {
  const double eps = 0.4;
  CounterRng rng(103, 0);
  for (Statistics stat : {Statistics::bosonic, Statistics::fermionic}) {
    TruncatedFock sp(stat, 2, 2, eps);
    Mat a = random_complex_matrix(rng, 2, 2);
    Mat c = random_complex_matrix(rng, 2, 2);

    FockOperator dg = dGamma(sp, a);
    FockOperator gm = Gamma(sp, c);
    std::vector<Mat> blocks = gamma_sector_blocks(sp, c);

    for (unsigned n = 0; n <= 2; ++n) {
      EmbedRestrict er = embed_restrict(stat, 2, n);
      std::size_t off = sp.sector_offset(n), d = sp.sector_dim(n);

      // dGamma block: eps * compressed sum of A over the slots.
      Mat slots = Mat::Zero(er.embed.rows(), er.embed.rows());
      Mat i2 = Mat::Identity(2, 2);
      if (n == 1) slots = a;
      if (n == 2) slots = kron(a, i2) + kron(i2, a);
      Mat dg_oracle = (n == 0) ? Mat::Zero(1, 1)
                               : Mat(eps * er.restrict_map * slots * er.embed);
      CHECK((dg.matrix().block(off, off, d, d) - dg_oracle).norm() < 1e-12);

      // Gamma block: compressed n-fold Kronecker power of C.
      Mat pw = Mat::Identity(1, 1);
      for (unsigned i = 0; i < n; ++i) pw = kron(pw, c);
      Mat gm_oracle = er.restrict_map * pw * er.embed;
      CHECK((gm.matrix().block(off, off, d, d) - gm_oracle).norm() < 1e-12);
      CHECK((blocks[n] - gm_oracle).norm() < 1e-12);
    }
    // Both are block-diagonal.
    for (auto [no, ni] : dg.nonzero_blocks()) CHECK(no == ni);
    for (auto [no, ni] : gm.nonzero_blocks()) CHECK(no == ni);
  }
}

TEST_CASE("number operator and exponentials") {
  const double eps = 0.2;
  TruncatedFock sp(Statistics::bosonic, 2, 4, eps);
  FockOperator num = number_operator(sp);
  for (unsigned n = 0; n <= 4; ++n) {
    for (std::size_t i = 0; i < sp.sector_dim(n); ++i) {
      std::size_t idx = sp.state_index(n, i);
      CHECK(std::abs(num.matrix()(idx, idx) - eps * n) < 1e-14);
    }
  }
  Mat i2 = Mat::Identity(2, 2);
  CHECK((num.matrix() - dGamma(sp, i2).matrix()).norm() < 1e-13);

  // exp_dGamma matches the dense exponential of dGamma, including for a
  // non-normal generator (safe because dGamma is block-diagonal).
  CounterRng rng(104, 0);
  Mat a = random_complex_matrix(rng, 2, 2);
  a(0, 1) += 2.0;  // push it away from normality
  cxd s(0.37, 0.21);
  FockOperator lhs = exp_dGamma(sp, a, s);
  Mat rhs = expm(s * dGamma(sp, a).matrix());
  CHECK((lhs.matrix() - rhs).norm() / rhs.norm() < 1e-11);
  // And equals Gamma of the one-particle exponential.
  Mat c = expm(eps * s * a);
  CHECK((lhs.matrix() - Gamma(sp, c).matrix()).norm() < 1e-11);
}

TEST_CASE("field and weyl operators") {
  const double eps = 0.5;
  TruncatedFock sp(Statistics::bosonic, 1, 14, eps);
  Vec f(1);
  f << 0.4;
  FieldWeyl fw = field_and_weyl(sp, f);
  // Phi = (a + a*)/sqrt(2) is self-adjoint.
  CHECK((fw.field.matrix() - fw.field.matrix().adjoint()).norm() < 1e-13);
  // W = exp(i Phi).
  Mat w_oracle = expm(cxd(0, 1) * fw.field.matrix());
  CHECK((fw.weyl.matrix() - w_oracle).norm() < 1e-10);
  // Truncation leakage is tiny for this amplitude and cutoff.
  CHECK(fw.unitarity_defect < 1e-8);
  Mat wdw = fw.weyl.matrix().adjoint() * fw.weyl.matrix();
  CHECK((wdw - Mat::Identity(sp.dim(), sp.dim())).cwiseAbs().maxCoeff() ==
        doctest::Approx(fw.unitarity_defect).epsilon(1e-6));

  TruncatedFock fer(Statistics::fermionic, 2, 2, eps);
  Vec g(2);
  g << 1.0, 0.0;
  CHECK_THROWS_AS(field_and_weyl(fer, g), ConfigError);
}
