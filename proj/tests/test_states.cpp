#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fockbench/rng.hpp"
#include "fockbench/states.hpp"

using namespace fockbench;

namespace {

// Random mixed state rho = W W^dagger / tr on the given space.
FockState random_mixed(const TruncatedFock& sp, CounterRng& rng) {
  Mat w = random_complex_matrix(rng, static_cast<int>(sp.dim()),
                                static_cast<int>(sp.dim()));
  Mat rho = w * w.adjoint();
  rho /= rho.trace().real();
  return FockState(sp, std::move(rho));
}

}  // namespace

TEST_CASE("state construction and diagnostics") {
  TruncatedFock sp(Statistics::bosonic, 2, 3, 0.5);
  CounterRng rng(301, 0);
  FockState rho = random_mixed(sp, rng);
  CHECK(rho.trace_defect() < 1e-12);
  CHECK(rho.hermiticity_defect() < 1e-12);
  CHECK(rho.min_eigenvalue() > -1e-12);
  std::vector<double> masses = rho.sector_masses();
  double total = 0.0;
  for (double m : masses) total += m;
  CHECK(total == doctest::Approx(1.0));
  CHECK(rho.leakage() == doctest::Approx(masses.back()));
  // Moments against the sector masses.
  double n1 = 0.0;
  for (unsigned n = 0; n <= 3; ++n) n1 += masses[n] * 0.5 * n;
  CHECK(rho.number_moment(1) == doctest::Approx(n1));
  CHECK(rho.number_moment(0) == doctest::Approx(1.0));
  CHECK(rho.exponential_moment(0.0) == doctest::Approx(1.0));

  // Bad inputs are rejected.
  CHECK_THROWS_AS(FockState(sp, Mat::Identity(sp.dim(), sp.dim())),
                  ConfigError);
  CHECK_THROWS_AS(FockState(sp, Mat::Zero(2, 2)), ConfigError);
  CHECK_THROWS_AS(FockState::pure(sp, Vec::Zero(sp.dim())), ConfigError);

  Vec psi = Vec::Zero(sp.dim());
  psi(0) = 2.0;  // normalization is applied for us
  FockState vac = FockState::pure(sp, psi);
  CHECK(vac.is_pure());
  CHECK(vac.min_eigenvalue() == 0.0);
  CHECK(vac.sector_masses()[0] == doctest::Approx(1.0));

  CHECK(vac.moment_constant() == 1.0);
  CHECK_THROWS_AS(vac.set_moment_constant(0.0), ConfigError);
  CHECK_THROWS_AS(vac.quasifree_c(), ConfigError);
}

TEST_CASE("coherent states") {
  const double eps = 0.25;
  Vec z(1);
  z << cxd(0.6, -0.3);
  const double z2 = z.squaredNorm();
  unsigned n_need = coherent_required_n_max(z2, eps);
  CHECK(eps * n_need >= z2);
  TruncatedFock sp(Statistics::bosonic, 1, n_need + 2, eps);
  CoherentReport rep = coherent_state(z, sp);
  CHECK(rep.construction_discrepancy < 1e-5);
  CHECK(rep.eigenvector_defect < 1e-9);
  // Sector masses follow the Poisson law with mean |z|^2 / eps.
  const double lambda = z2 / eps;
  std::vector<double> masses = rep.state.sector_masses();
  double log_fac = 0.0;
  for (unsigned n = 0; n <= 6; ++n) {
    if (n > 0) log_fac += std::log(static_cast<double>(n));
    double poisson = std::exp(-lambda + n * std::log(lambda) - log_fac);
    CHECK(masses[n] == doctest::Approx(poisson).epsilon(1e-8));
  }
  // First moment Tr[rho N] = |z|^2 up to the truncated tail.
  CHECK(rep.state.number_moment(1) == doctest::Approx(z2).epsilon(1e-6));

  // Guards: undersized cutoff and wrong statistics.
  TruncatedFock small(Statistics::bosonic, 1, 2, eps);
  CHECK_THROWS_AS(coherent_state(z, small), ConfigError);
  TruncatedFock fer(Statistics::fermionic, 1, 1, eps);
  Vec zf(1);
  zf << 0.5;
  CHECK_THROWS_AS(coherent_state(zf, fer), ConfigError);
}

TEST_CASE("quasi-free closed forms") {
  // Bosonic single mode: geometric series 1/(1 - c).
  Mat c1(1, 1);
  c1 << cxd(0.4, 0.1);
  cxd closed = quasifree_trace(c1, Statistics::bosonic);
  CHECK(std::abs(closed - 1.0 / (1.0 - cxd(0.4, 0.1))) < 1e-14);
  QuasifreeTraceCheck chk = quasifree_trace_check(c1, Statistics::bosonic,
                                                  bosonic_gibbs_n_max(c1, 1e-12));
  CHECK(chk.rel_error < 1e-10);

  // Bosonic closed form requires ||C|| < 1.
  Mat big(1, 1);
  big << 1.5;
  CHECK_THROWS_AS(quasifree_trace(big, Statistics::bosonic), ConfigError);
  CHECK_THROWS_AS(bosonic_gibbs_n_max(big, 1e-10), ConfigError);

  // Fermionic: det(I + C), exact at n_max = m for any complex C.
  CounterRng rng(302, 0);
  Mat cf = random_complex_matrix(rng, 3, 3);
  cxd fer = quasifree_trace(cf, Statistics::fermionic);
  Mat ipc = Mat::Identity(3, 3) + cf;
  CHECK(std::abs(fer - det(ipc)) < 1e-12 * std::abs(fer));
  QuasifreeTraceCheck fchk = quasifree_trace_check(cf, Statistics::fermionic, 3);
  CHECK(fchk.rel_error < 1e-12);
  CHECK(fchk.n_used == 3);
}

TEST_CASE("gibbs states") {
  CounterRng rng(303, 0);
  GibbsSpec spec;
  spec.hamiltonian = random_hermitian(rng, 2, 1.0);
  spec.beta = 1.3;
  spec.mu = -1.5;

  // Fermionic Gibbs is exact on the full truncation.
  TruncatedFock fer(Statistics::fermionic, 2, 2, 0.5);
  FockState frho = gibbs_state(spec, fer);
  CHECK(frho.is_quasifree());
  CHECK(frho.trace_defect() < 1e-12);
  CHECK(frho.min_eigenvalue() > 0.0);
  // The tag is C = e^{-beta(H - mu)}.
  CHECK((frho.quasifree_c() - spec.c_matrix()).norm() < 1e-12);

  // Bosonic Gibbs needs ||C|| < 1; mu above the spectrum is rejected.
  Mat c = spec.c_matrix();
  unsigned n_max = bosonic_gibbs_n_max(c, 1e-12);
  TruncatedFock bos(Statistics::bosonic, 2, n_max, 0.5);
  FockState brho = gibbs_state(spec, bos);
  CHECK(brho.is_quasifree());
  CHECK(brho.leakage() < 1e-9);
  GibbsSpec bad = spec;
  bad.mu = 5.0;
  CHECK_THROWS_AS(gibbs_state(bad, bos), ConfigError);
  GibbsSpec neg = spec;
  neg.beta = -1.0;
  CHECK_THROWS_AS(neg.c_matrix(), ConfigError);
}

TEST_CASE("reduced densities by duality") {
  CounterRng rng(304, 0);
  for (Statistics stat : {Statistics::bosonic, Statistics::fermionic}) {
    TruncatedFock sp(stat, 2, 4, 0.5);
    FockState rho = random_mixed(sp, rng);

    // Entry (B, A) is the expectation of the quantized matrix unit.
    ReducedDensityMatrix gamma = reduced_density(rho, 1);
    const SectorBasis& one = sp.sector(1);
    for (std::size_t a = 0; a < one.dim(); ++a) {
      for (std::size_t b = 0; b < one.dim(); ++b) {
        WickKernel unit = WickKernel::basis_kernel(stat, 2, one.occupation(a),
                                                   one.occupation(b));
        cxd expect = (rho.density().transpose().cwiseProduct(
                          wick_quantize(unit, sp).matrix()))
                         .sum();
        CHECK(std::abs(gamma.matrix(static_cast<Eigen::Index>(b),
                                    static_cast<Eigen::Index>(a)) -
                       expect) < 1e-12);
      }
    }

    // Trace duality for a random 2 -> 2 kernel.
    Mat kmat = random_complex_matrix(
        rng, static_cast<int>(sector_dimension(stat, 2, 2)),
        static_cast<int>(sector_dimension(stat, 2, 2)));
    WickKernel k(stat, 2, 2, 2, kmat);
    ReducedDensityMatrix g2 = reduced_density(rho, 2);
    cxd via_gamma = (g2.matrix.transpose().cwiseProduct(kmat)).sum();
    cxd via_fock = (rho.density().transpose().cwiseProduct(
                        wick_quantize(k, sp).matrix()))
                       .sum();
    CHECK(std::abs(via_gamma - via_fock) < 1e-12);

    // Normalizer identity: Tr gamma^(p) equals the factorial moment.
    for (unsigned p : {1u, 2u}) {
      ReducedDensityMatrix g = reduced_density(rho, p);
      CHECK(g.trace ==
            doctest::Approx(number_factorial_moment(rho, p)).epsilon(1e-10));
    }
    ReducedDensityMatrix gn = normalized_reduced(rho, 1);
    CHECK(gn.normalized);
    CHECK(gn.matrix.trace().real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(reduced_density(rho, 5), ConfigError);
  }
}

TEST_CASE("quasi-free reduced densities agree with duality") {
  CounterRng rng(305, 0);
  GibbsSpec spec;
  spec.hamiltonian = random_hermitian(rng, 2, 0.8);
  spec.beta = 1.0;
  spec.mu = -2.0;  // keeps ||C|| = e^{-1.2} with a modest bosonic cutoff

  // Fermionic: exact agreement.
  TruncatedFock fer(Statistics::fermionic, 2, 2, 0.5);
  FockState frho = gibbs_state(spec, fer);
  for (unsigned p : {1u, 2u}) {
    ReducedDensityMatrix closed = reduced_density_quasifree(frho, p);
    ReducedDensityMatrix dual = reduced_density_duality(frho, p);
    CHECK((closed.matrix - dual.matrix).norm() < 1e-12);
  }

  // Bosonic: agreement up to the certified geometric tail.
  Mat c = spec.c_matrix();
  unsigned n_max = bosonic_gibbs_n_max(c, 1e-11);
  TruncatedFock bos(Statistics::bosonic, 2, n_max, 0.5);
  FockState brho = gibbs_state(spec, bos);
  for (unsigned p : {1u, 2u}) {
    ReducedDensityMatrix closed = reduced_density_quasifree(brho, p);
    ReducedDensityMatrix dual = reduced_density_duality(brho, p);
    CHECK((closed.matrix - dual.matrix).norm() < 1e-8);
  }
  // gamma^(1) of the tagged state is eps C(1 - C)^{-1} on the mode basis.
  Mat g1 = reduced_density_quasifree(brho, 1).matrix;
  Mat expect = 0.5 * (Mat::Identity(2, 2) - c).partialPivLu().solve(c);
  CHECK((g1 - expect).norm() < 1e-12);
}

TEST_CASE("generating functions") {
  CounterRng rng(306, 0);
  TruncatedFock sp(Statistics::bosonic, 2, 6, 0.4);
  FockState rho = random_mixed(sp, rng);
  Mat a = random_hermitian(rng, 2, 1.0);

  // Dense oracle: Tr[rho e^{s dGamma(A)}].
  cxd s(0.3, 0.2);
  cxd via_phi = generating_Phi(rho, a, s);
  Mat dense = expm(s * dGamma(sp, a).matrix());
  cxd oracle = (rho.density().transpose().cwiseProduct(dense)).sum();
  CHECK(std::abs(via_phi - oracle) < 1e-10);
  CHECK(std::abs(generating_Psi(rho, a, s) - via_phi) == 0.0);

  // A = Id at real s reduces to the exponential number moment.
  Mat id = Mat::Identity(2, 2);
  CHECK(std::abs(generating_Phi(rho, id, cxd(0.8, 0.0)) -
                 rho.exponential_moment(0.8)) < 1e-10);

  // Radius guard.
  CHECK_THROWS_AS(generating_Phi(rho, a, cxd(1.5, 0.0)), ConfigError);

  // Contour derivatives: order j recovers Tr[rho dGamma(A)^j].
  std::vector<cxd> taylor = generating_taylor(rho, a, 2, 0.5);
  Mat dg = dGamma(sp, a).matrix();
  cxd d0 = rho.density().trace();
  cxd d1 = (rho.density().transpose().cwiseProduct(dg)).sum();
  cxd d2 = (rho.density().transpose().cwiseProduct(Mat(dg * dg))).sum();
  CHECK(std::abs(taylor[0] - d0) < 1e-10);
  CHECK(std::abs(taylor[1] - d1) < 1e-10);
  CHECK(std::abs(taylor[2] - d2) < 1e-9);
  CHECK_THROWS_AS(generating_taylor(rho, a, 2, 0.0), ConfigError);
  CHECK_THROWS_AS(generating_taylor(rho, a, 4, 0.5, 8), ConfigError);
}

TEST_CASE("fermionic domination bound") {
  CounterRng rng(307, 0);
  TruncatedFock sp(Statistics::fermionic, 3, 3, 0.5);
  FockState rho = random_mixed(sp, rng);
  // PSD kernel R^dagger R.
  int d2 = static_cast<int>(sector_dimension(Statistics::fermionic, 3, 2));
  Mat r = random_complex_matrix(rng, d2, d2);
  WickKernel k(Statistics::fermionic, 3, 2, 2, Mat(r.adjoint() * r));
  FermionicWickBoundReport rep = fermionic_wick_bound(rho, k);
  CHECK(rep.holds);
  CHECK(rep.value <= rep.bound + 1e-12);
  CHECK(rep.bound ==
        doctest::Approx(0.25 * (r.adjoint() * r).trace().real()));

  // Wrong statistics / non-square ranks are rejected.
  TruncatedFock bos(Statistics::bosonic, 3, 3, 0.5);
  FockState brho = random_mixed(bos, rng);
  WickKernel bk = WickKernel::tensor_power(Statistics::bosonic,
                                           Mat::Identity(3, 3), 2);
  CHECK_THROWS_AS(fermionic_wick_bound(brho, bk), ConfigError);
  Vec f(3);
  f << 1.0, 0.0, 0.0;
  WickKernel cr = WickKernel::creation_kernel(Statistics::fermionic, f);
  CHECK_THROWS_AS(fermionic_wick_bound(rho, cr), ConfigError);
}

TEST_CASE("number moment tables") {
  const double eps = 0.5;
  TruncatedFock sp(Statistics::bosonic, 1, 14, eps);
  Vec z(1);
  z << 0.9;
  std::vector<FockState> family;
  family.push_back(coherent_state(z, sp).state);
  std::vector<double> refs{1.0, z.squaredNorm(), 0.0};
  std::vector<PiMomentsRow> rows = pi_moments(family, 2, refs);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].alpha == 0);
  CHECK(rows[0].eps == eps);
  CHECK(rows[0].moment == doctest::Approx(1.0));
  CHECK(rows[1].abs_error ==
        doctest::Approx(std::abs(rows[1].moment - refs[1])));
  CHECK_THROWS_AS(pi_moments(family, 5, refs), ConfigError);
}
