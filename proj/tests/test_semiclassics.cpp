#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fockbench/semiclassics.hpp"

using namespace fockbench;

TEST_CASE("scaling plans tie epsilon to a power of h") {
  const ScalingPlan linear = make_plan(1.0, {0.5, 0.25, 0.125});
  CHECK_NOTHROW(linear.validate());
  CHECK(linear.epsilon_of_h(0.25) == doctest::Approx(0.25).epsilon(1e-14));

  const ScalingPlan square = make_plan(2.0, {0.5, 0.25});
  CHECK(square.epsilon_of_h(0.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(square.epsilon_of_h(0.25) == doctest::Approx(0.0625).epsilon(1e-14));

  CHECK_THROWS_AS(make_plan(0.0, {0.5, 0.25}), ConfigError);
  CHECK_THROWS_AS(make_plan(-1.0, {0.5, 0.25}), ConfigError);
  CHECK_THROWS_AS(make_plan(1.0, {}), ConfigError);
  CHECK_THROWS_AS(make_plan(1.0, {0.25, 0.5}), ConfigError);
  CHECK_THROWS_AS(make_plan(1.0, {0.5, 0.0}), ConfigError);

  // A hand-built plan whose epsilon map increases must be rejected too.
  ScalingPlan bad;
  bad.h_schedule = {0.5, 0.25};
  bad.epsilon_of_h = [](double h) { return 1.0 / h; };
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  ScalingPlan missing;
  missing.h_schedule = {0.5, 0.25};
  CHECK_THROWS_AS(missing.validate(), ConfigError);
}

TEST_CASE("double-scale quantization samples the microscopic coordinate") {
  // An observable depending only on Y = X / sqrt(h) is sampled at exactly
  // the grid coordinates, so its matrix must coincide with the unit-scale
  // quantization of the same profile read as a plain symbol.
  const Symbol micro = Symbol::plateau(1, 1.0, 2.0);
  TwoScaleSymbol a;
  a.d = 1;
  a.x_support = 0.0;  // support shrinks with h; no macroscopic guard needed
  a.eval = [micro](const VecR&, const VecR& y) {
    VecR yx(1), yxi(1);
    yx(0) = y(0);
    yxi(0) = y(1);
    return micro(yx, yxi);
  };

  const double h = 1.0 / 16;
  const PhaseSpaceGrid grid = balanced_grid(1, 2.0, h);
  const Mat two_scale = doublescale_quantize(a, grid, h);
  const Mat unit_scale = weyl_quantize(micro, grid, 1.0, 0.5);
  REQUIRE(two_scale.rows() == unit_scale.rows());
  CHECK((two_scale - unit_scale).cwiseAbs().maxCoeff() < 1e-13);

  // A purely macroscopic observable reduces to the ordinary quantization.
  TwoScaleSymbol macro;
  macro.d = 1;
  macro.x_support = 0.0;
  macro.eval = [](const VecR& x, const VecR&) {
    return std::exp(-5.0 * (x(0) * x(0) + x(1) * x(1)));
  };
  const Mat via_two_scale = doublescale_quantize(macro, grid, h);
  const Mat direct = weyl_quantize(Symbol::gaussian(1, 5.0), grid, h, 0.5);
  CHECK((via_two_scale - direct).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("double-scale quantization input guards") {
  const double h = 1.0 / 16;
  const PhaseSpaceGrid grid = balanced_grid(1, 2.0, h);

  TwoScaleSymbol no_eval;
  no_eval.d = 1;
  CHECK_THROWS_AS(doublescale_quantize(no_eval, grid, h), ConfigError);

  TwoScaleSymbol wrong_dim;
  wrong_dim.d = 2;
  wrong_dim.eval = [](const VecR&, const VecR&) { return 1.0; };
  CHECK_THROWS_AS(doublescale_quantize(wrong_dim, grid, h), ConfigError);

  TwoScaleSymbol ok;
  ok.d = 1;
  ok.eval = [](const VecR&, const VecR&) { return 1.0; };
  CHECK_THROWS_AS(doublescale_quantize(ok, grid, 0.0), ConfigError);
  CHECK_THROWS_AS(doublescale_quantize(ok, grid, -0.25), ConfigError);

  // Declared macroscopic support wider than the covered box is refused.
  TwoScaleSymbol wide;
  wide.d = 1;
  wide.x_support = 50.0;
  wide.eval = [](const VecR&, const VecR&) { return 1.0; };
  CHECK_THROWS_AS(doublescale_quantize(wide, grid, h), ConfigError);
}

TEST_CASE("moment dictionaries validate their constant entry") {
  const MomentDictionary dict = default_dictionary(1.0, 0.5);
  REQUIRE(dict.entries.size() == 3);
  CHECK(dict.entries[0].reference == doctest::Approx(1.0));
  CHECK(dict.entries[1].reference == doctest::Approx(1.0));
  CHECK(dict.entries[2].reference == doctest::Approx(0.0));
  CHECK_NOTHROW(dict.validate());

  MomentDictionary empty;
  CHECK_THROWS_AS(empty.validate(), ConfigError);

  // First entry must be the constant 1; a bump there is rejected.
  MomentDictionary bad;
  bad.entries.push_back({"bump", Symbol::plateau(1, 0.25, 0.5), 1.0});
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("stationary family recovers a pure quantum-scale triple") {
  const GridFamily family = family_fixed_profile();
  const MomentDictionary dict = default_dictionary(1.0, 0.5);
  // Deep enough that the shrinking bump masses settle within the Cauchy
  // window: the profile's macroscopic footprint is sqrt(h) wide.
  const std::vector<double> h_schedule{1.0 / 64, 1.0 / 128, 1.0 / 256};

  const MultiscaleTriple triple = estimate_triple(family, dict, h_schedule);
  REQUIRE(triple.h_used.size() == 3);
  REQUIRE(triple.moments.size() == 3);
  REQUIRE(triple.mass_near_zero.size() == triple.deltas.size());

  // All mass stays at the quantum scale around the origin: the position
  // measure is a unit point mass at zero and nothing escapes.
  CHECK(triple.total_mass == doctest::Approx(1.0).epsilon(0.02));
  CHECK(triple.moments[0] == triple.total_mass);
  CHECK(triple.moments[1] == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(triple.moments[2]) < 0.02);
  CHECK(triple.nu_at_zero == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(triple.away_mass) < 0.05);
  CHECK(std::abs(triple.intermediate_mass) < 0.02);
  CHECK(triple.gamma0_trace == doctest::Approx(1.0).epsilon(0.05));
  CHECK(triple.cauchy);

  // The profile is the ground Gaussian of the compression dictionary, so
  // the compressed operator is concentrated in its (0,0) corner.
  REQUIRE(triple.gamma0.rows() >= 2);
  CHECK(std::abs(triple.gamma0(0, 0)) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(triple.gamma0(1, 1)) < 0.01);

  const SeparatingReport rep = separating_check(triple, 0.05);
  CHECK(rep.separating);
  CHECK(rep.consistency_defect < 0.05);
  CHECK(rep.nu_at_zero == triple.nu_at_zero);
  CHECK(rep.gamma0_trace == triple.gamma0_trace);
}

TEST_CASE("triple estimation input guards") {
  const GridFamily family = family_fixed_profile();
  const MomentDictionary dict = default_dictionary(1.0, 0.5);
  const std::vector<double> hs{1.0 / 16, 1.0 / 32};

  TripleOptions no_profiles;
  no_profiles.hermite_count = 0;
  CHECK_THROWS_AS(estimate_triple(family, dict, hs, no_profiles), ConfigError);

  TripleOptions bad_deltas;
  bad_deltas.delta_schedule = {0.25, 0.4};
  CHECK_THROWS_AS(estimate_triple(family, dict, hs, bad_deltas), ConfigError);

  CHECK_THROWS_AS(estimate_triple(family, dict, {}), ConfigError);
  CHECK_THROWS_AS(estimate_triple(family, dict, {0.25, 0.5}), ConfigError);

  GridFamily stateless;
  stateless.support_bound = 2.0;
  CHECK_THROWS_AS(estimate_triple(stateless, dict, hs), ConfigError);

  MomentDictionary invalid;
  CHECK_THROWS_AS(estimate_triple(family, invalid, hs), ConfigError);
}

TEST_CASE("tightness diagnostic certifies the stationary family") {
  // With the wide plateau every sampled point lies in its flat region, so
  // the quantized cutoff is exactly the identity and the gap vanishes to
  // round-off; the narrower plateau still captures the concentrated state.
  const GridFamily family = family_fixed_profile();
  const TightnessReport rep = tightness_diagnostic(
      family, 0.5, {4.0, 1.0}, {1.0 / 16, 1.0 / 32});

  REQUIRE(rep.deltas.size() == 2);
  REQUIRE(rep.s_per_h.size() == 2);
  REQUIRE(rep.s_per_h[0].size() == 2);
  REQUIRE(rep.s_limsup.size() == 2);
  REQUIRE(rep.moment_rows.size() == 2);

  CHECK(std::abs(rep.s_limsup[0]) < 1e-8);
  CHECK(std::abs(rep.s_limsup[1]) < 0.02);
  CHECK(rep.moment_bound_ok);
  CHECK(rep.moment_bound > 0.0);
  for (double row : rep.moment_rows) {
    CHECK(row <= rep.moment_bound * (1.0 + 1e-12));
    CHECK(row >= 1.0);
  }
  CHECK(rep.adapted);
}

TEST_CASE("tightness diagnostic flags mass the cutoff misses") {
  // A family concentrating at macroscopic distance 2 from the origin is
  // invisible to a plateau that dies by 1.25, so the gap approaches the
  // full exponential moment minus one.
  const double c_prime = 0.4;
  const GridFamily family = family_coherent(2.0, 0.0);
  const TightnessReport rep = tightness_diagnostic(
      family, c_prime, {1.0}, {1.0 / 16, 1.0 / 32});

  REQUIRE(rep.s_limsup.size() == 1);
  const double expected = std::exp(c_prime) - 1.0;
  CHECK(rep.s_limsup[0] == doctest::Approx(expected).epsilon(0.03));
  CHECK_FALSE(rep.adapted);
  CHECK(rep.moment_bound_ok);
}

TEST_CASE("tightness diagnostic input guards") {
  const GridFamily family = family_fixed_profile();
  CHECK_THROWS_AS(
      tightness_diagnostic(family, 0.0, {1.0}, {0.25, 0.125}), ConfigError);
  CHECK_THROWS_AS(
      tightness_diagnostic(family, 0.5, {}, {0.25, 0.125}), ConfigError);
  CHECK_THROWS_AS(
      tightness_diagnostic(family, 0.5, {1.0}, {0.125, 0.25}), ConfigError);
}

TEST_CASE("synthetic families expose their design points") {
  const GridFamily fixed = family_fixed_profile(1.0);
  CHECK(fixed.support_bound == doctest::Approx(2.0));
  const PhaseSpaceGrid grid = balanced_grid(1, fixed.support_bound, 1.0 / 16);
  const Vec psi = fixed.state(1.0 / 16, grid);
  REQUIRE(psi.size() == static_cast<Eigen::Index>(grid.matrix_dim()));
  CHECK(psi.norm() > 0.0);

  // The coherent family widens its box to hold the concentration point.
  const GridFamily near_origin = family_coherent(0.5, 0.0);
  CHECK(near_origin.support_bound == doctest::Approx(2.5));
  const GridFamily far_out = family_coherent(3.0, 4.0);
  CHECK(far_out.support_bound == doctest::Approx(6.0));

  const GridFamily mid = family_intermediate();
  CHECK(mid.support_bound > 0.0);
  const PhaseSpaceGrid mg = balanced_grid(1, mid.support_bound, 1.0 / 16);
  CHECK(mid.state(1.0 / 16, mg).size() ==
        static_cast<Eigen::Index>(mg.matrix_dim()));
}

TEST_CASE("scenario configuration guards") {
  CoherentScenarioConfig no_modes;
  no_modes.modes = 0;
  CHECK_THROWS_AS(scenario_coherent(no_modes), ConfigError);
  CoherentScenarioConfig deep;
  deep.p_max = 5;
  CHECK_THROWS_AS(scenario_coherent(deep), ConfigError);

  FermiScenarioConfig cold;
  cold.beta = 0.0;
  CHECK_THROWS_AS(scenario_fermi_gibbs(cold), ConfigError);
  FermiScenarioConfig flat;
  flat.decay = 0.0;
  CHECK_THROWS_AS(scenario_fermi_gibbs(flat), ConfigError);

  BecScenarioConfig thin;
  thin.nu_c = 0.0;
  CHECK_THROWS_AS(scenario_bec(thin), ConfigError);
  BecScenarioConfig past_pole;
  past_pole.s_eval = 2.5;  // default condensate density puts the pole at 2
  CHECK_THROWS_AS(scenario_bec(past_pole), ConfigError);
  BecScenarioConfig bad_schedule;
  bad_schedule.h_schedule = {0.125, 0.25};
  CHECK_THROWS_AS(scenario_bec(bad_schedule), ConfigError);

  SingularScenarioConfig no_h;
  no_h.h_schedule.clear();
  CHECK_THROWS_AS(scenario_singular_trace(no_h), ConfigError);
}
