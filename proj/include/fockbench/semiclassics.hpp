#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fockbench/states.hpp"
#include "fockbench/weyl.hpp"

namespace fockbench {

// A joint schedule h -> eps(h) for the double-scale experiments, e.g.
// eps = h (one-dimensional Fermi scaling) or eps = h^2 (planar Bose gas).
struct ScalingPlan {
  std::function<double(double)> epsilon_of_h;
  std::vector<double> h_schedule;  // strictly decreasing, positive
  void validate() const;           // throws ConfigError on violation
};
ScalingPlan make_plan(double exponent, std::vector<double> h_schedule);

// Two-scale observable a(X, Y): X is the macroscopic phase-space point and
// Y = X / sqrt(h) the microscopic one. Quantized by sampling the effective
// symbol X -> a(X, X/sqrt(h)) at the symmetric ordering t = 1/2, where the
// grid's sampling points are exactly Y in microscopic units.
struct TwoScaleSymbol {
  unsigned d = 1;
  double x_support = 0.0;  // uniform support radius in X; 0 = unbounded
  std::function<double(const VecR& x_macro, const VecR& y_micro)> eval;
};
Mat doublescale_quantize(const TwoScaleSymbol& a, const PhaseSpaceGrid& grid,
                         double h);

// A family of normalized pure grid states indexed by h. support_bound is
// the macroscopic phase-space box the balanced grids must cover.
struct GridFamily {
  std::string name;
  double support_bound = 2.0;
  std::function<Vec(double h, const PhaseSpaceGrid&)> state;
};
// Stationary quantum-scale family: a fixed Gaussian profile of the given
// width in grid (microscopic) coordinates. Width 1 makes the microscopic
// phase-space footprint symmetric (position and momentum spread alike);
// narrower profiles trade position spread for momentum spread.
GridFamily family_fixed_profile(double width = 1.0);
// Coherent family concentrating at the macroscopic phase-space point
// (x0, xi0) != 0 with microscopic Gaussian profile.
GridFamily family_coherent(double x0, double xi0);
// Intermediate family escaping to infinity at the microscopic scale while
// its macroscopic position h^{1/4} still collapses to the origin.
GridFamily family_intermediate(double width = 0.3);

// Phase-space moment dictionary; the first entry must be the constant 1
// (total-mass bookkeeping). reference is the expected limiting value.
struct MomentEntry {
  std::string name;
  Symbol symbol;
  double reference = 0.0;
};
struct MomentDictionary {
  std::vector<MomentEntry> entries;
  void validate() const;
};
// Constant + plateau bump at the origin + bump at (x0, xi0).
MomentDictionary default_dictionary(double x0, double xi0);

struct TripleOptions {
  std::vector<double> delta_schedule{0.6, 0.4, 0.25};  // decreasing
  unsigned hermite_count = 8;       // compression dictionary size
  double hermite_width = 1.0;       // microscopic width of that dictionary
  double y_cutoff_inner = 3.0;      // microscopic window separating the
  double y_cutoff_outer = 5.0;      //   quantum scale from the escaping one
  double zero_bump_x = 0.6;         // macroscopic window of the escape probe
  unsigned tail_points = 3;         // upper-limit window along the schedule
  double cauchy_tol = 0.05;         // spread flag over that window
};

// The limiting triple recovered from a family along an h schedule:
//  - moments:        dictionary pairings (limit part nu),
//  - mass_near_zero: shrinking-bump masses, extrapolated to nu({0}),
//  - intermediate_*: the double-scale escape probe (mass + direction),
//  - gamma0:         compressed quantum-scale limit operator.
struct MultiscaleTriple {
  std::vector<std::string> moment_names;
  std::vector<double> moments;
  std::vector<double> moment_references;
  double total_mass = 0.0;
  std::vector<double> deltas;
  std::vector<double> mass_near_zero;  // per delta
  double nu_at_zero = 0.0;             // extrapolated over delta
  double away_mass = 0.0;              // total_mass - nu_at_zero
  double intermediate_mass = 0.0;
  double intermediate_direction = 0.0;
  Mat gamma0;
  double gamma0_trace = 0.0;
  bool cauchy = true;  // false when the tail window has not settled
  // Raw per-h series behind the aggregates above.
  std::vector<double> h_used;
  std::vector<std::vector<double>> moments_per_h;  // [h][entry]
  std::vector<std::vector<double>> bumps_per_h;    // [h][delta]
  std::vector<double> intermediate_per_h;
  std::vector<double> direction_per_h;
  std::vector<double> gamma0_trace_per_h;
};
MultiscaleTriple estimate_triple(const GridFamily& family,
                                 const MomentDictionary& dict,
                                 const std::vector<double>& h_schedule,
                                 const TripleOptions& opt = {});

// Splitting consistency: the mass the position measure carries at the
// origin must equal the compressed-limit trace plus the escaping mass.
struct SeparatingReport {
  double nu_at_zero = 0.0;
  double intermediate_mass = 0.0;
  double gamma0_trace = 0.0;
  double consistency_defect = 0.0;
  bool separating = false;  // escape mass ~ 0 and nu({0}) ~ Tr gamma0
};
SeparatingReport separating_check(const MultiscaleTriple& triple,
                                  double tol = 0.02);

// Tightness diagnostic for a coherent family: the gap
//   s(delta) = lim sup_h Tr[rho_h (e^{c' N} - e^{c' dGamma(chi_delta^{Q,h})})]
// evaluated through the closed coherent-state identities. chi_delta is a
// radial plateau equal to 1 on |X| <= delta, vanishing beyond 1.25 delta.
// adapted == true when s at the largest delta is below tol.
struct TightnessReport {
  std::vector<double> h_schedule;
  std::vector<double> deltas;
  std::vector<std::vector<double>> s_per_h;  // [h index][delta index]
  std::vector<double> s_limsup;              // per delta
  std::vector<double> moment_rows;           // Tr[rho e^{2 c' N}] per h
  double moment_bound = 0.0;                 // uniform cap those rows obey
  bool moment_bound_ok = false;
  bool adapted = false;
};
TightnessReport tightness_diagnostic(const GridFamily& family, double c_prime,
                                     const std::vector<double>& delta_schedule,
                                     const std::vector<double>& h_schedule,
                                     double tol = 0.02);

// ---------------------------------------------------------------------------
// Scenario runners: each produces convergence tables plus named verdicts
// ("value <= threshold") whose conjunction is the scenario's pass flag.
// ---------------------------------------------------------------------------
struct ScenarioVerdict {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};
struct ScenarioTable {
  std::string name;
  std::vector<ConvergenceRow> rows;
  double fitted_order = 0.0;
};
struct ScenarioReport {
  std::string scenario;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<ScenarioTable> tables;
  std::vector<ScenarioVerdict> verdicts;
  unsigned long long seed = 0;
  bool pass() const;
};

// Coherent-state laboratory: reduced densities against the rank-one tensor
// powers, product structure of the moments, and number-moment tables.
struct CoherentScenarioConfig {
  unsigned modes = 2;
  std::vector<double> eps_schedule{0.2, 0.1, 0.05};
  unsigned p_max = 3;
  unsigned alpha_max = 3;
  unsigned long long seed = 20260819ULL;
};
ScenarioReport scenario_coherent(const CoherentScenarioConfig& cfg = {});

// One-dimensional Fermi scaling eps = h: the first reduced moment of the
// quasi-free Gibbs family against the classical Fermi function integral,
// plus the leading-order product structure of the second moment.
struct FermiScenarioConfig {
  double beta = 1.0;
  double decay = 3.0;          // observable e^{-decay |X|^2}
  double support_bound = 3.5;  // balanced-grid coverage
  std::vector<double> h_schedule{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128,
                                 1.0 / 256};
};
ScenarioReport scenario_fermi_gibbs(const FermiScenarioConfig& cfg = {});

// Planar Bose gas, eps = h^2: generating function along the log-det path,
// pole bracketing, condensate-factor derivatives, coefficient reciprocity,
// and an exact small cross-check on a factorizing pair of modes.
struct BecScenarioConfig {
  double beta = 1.0;
  double nu_c = 0.5;           // condensate density target
  double s_eval = 1.0;         // evaluation point (half the pole location)
  double support_bound = 4.0;  // per-axis balanced-grid coverage
  std::vector<double> h_schedule{0.25,      0.125,     1.0 / 16, 1.0 / 32,
                                 1.0 / 64,  1.0 / 128, 1.0 / 256};
  unsigned taylor_orders = 3;
};
ScenarioReport scenario_bec(const BecScenarioConfig& cfg = {});

// Singular-weight trace asymptotics with the condensate c-sweep.
struct SingularScenarioConfig {
  double support_bound = 2.5;
  std::vector<double> h_schedule{1.0 / 16,  1.0 / 32,  1.0 / 64, 1.0 / 128,
                                 1.0 / 256, 1.0 / 512, 1.0 / 1024};
  std::vector<double> c_values{0.5, 1.0, 2.0};
  unsigned max_points = 8192;
};
ScenarioReport scenario_singular_trace(const SingularScenarioConfig& cfg = {});

// The three synthetic families against their expected
// (escape mass, intermediate mass, compressed trace) patterns.
struct MultiscaleScenarioConfig {
  std::vector<double> coarse_schedule{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128,
                                      1.0 / 256};
  std::vector<double> fine_schedule{1.0 / 512, 1.0 / 1024, 1.0 / 2048,
                                    1.0 / 4096, 1.0 / 8192};
  double x0 = 1.0, xi0 = 0.5;  // semiclassical concentration point
  double tol = 0.02;
};
ScenarioReport scenario_multiscale(const MultiscaleScenarioConfig& cfg = {});

}  // namespace fockbench
