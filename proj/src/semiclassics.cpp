#include "fockbench/semiclassics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "fockbench/combinatorics.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/rng.hpp"

namespace fockbench {

namespace {

void require_decreasing(const std::vector<double>& xs, const char* what) {
  if (xs.empty()) {
    throw ConfigError(std::string(what) + ": empty schedule");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !std::isfinite(xs[i])) {
      throw ConfigError(std::string(what) + ": entries must be positive");
    }
    if (i > 0 && !(xs[i] < xs[i - 1])) {
      throw ConfigError(std::string(what) + ": must be strictly decreasing");
    }
  }
}

double simpson(const std::function<double(double)>& f, double a, double b,
               unsigned panels) {
  const unsigned n = panels + (panels % 2);  // even
  const double step = (b - a) / n;
  double acc = f(a) + f(b);
  for (unsigned i = 1; i < n; ++i) {
    acc += f(a + i * step) * ((i % 2) ? 4.0 : 2.0);
  }
  return acc * step / 3.0;
}

double tail_max(const std::vector<double>& xs, unsigned k) {
  const std::size_t take = std::min<std::size_t>(k, xs.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = xs.size() - take; i < xs.size(); ++i) {
    best = std::max(best, xs[i]);
  }
  return best;
}

double tail_spread(const std::vector<double>& xs, unsigned k) {
  const std::size_t take = std::min<std::size_t>(k, xs.size());
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = xs.size() - take; i < xs.size(); ++i) {
    lo = std::min(lo, xs[i]);
    hi = std::max(hi, xs[i]);
  }
  return hi - lo;
}

// Radial plateau centered at (cx, cxi): 1 inside `inner`, 0 beyond `outer`.
Symbol bump_at(double cx, double cxi, double inner, double outer) {
  const double center_norm = std::hypot(cx, cxi);
  return Symbol(
      1, SymbolClass::compact_support,
      [=](const VecR& x, const VecR& xi) {
        const double dist = std::hypot(x(0) - cx, xi(0) - cxi);
        return smooth_step_down((dist - inner) / (outer - inner));
      },
      center_norm + outer);
}

// Same shape, tagged bounded: used where the plateau deliberately exceeds
// the sampled window (tightness cutoffs sized by the caller).
Symbol bump_unguarded(double inner, double outer) {
  return Symbol(1, SymbolClass::s_one, [=](const VecR& x, const VecR& xi) {
    const double dist = std::hypot(x(0), xi(0));
    return smooth_step_down((dist - inner) / (outer - inner));
  });
}

double pure_pairing(const Vec& psi, const Mat& op) {
  return std::real(psi.dot(op * psi));
}

// Orthonormal oscillator profiles of the given microscopic width, sampled
// on the grid's position axis and normalized in plain l^2.
std::vector<VecR> hermite_profiles(const PhaseSpaceGrid& grid, double width,
                                   unsigned count) {
  const unsigned n = grid.points();
  VecR t(n);
  for (unsigned j = 0; j < n; ++j) t(j) = grid.position(j) / width;
  std::vector<VecR> out;
  out.reserve(count);
  VecR prev = VecR::Zero(n);
  VecR cur = (-0.5 * t.array().square()).exp();
  for (unsigned k = 0; k < count; ++k) {
    VecR normalized = cur / cur.norm();
    out.push_back(normalized);
    VecR next = std::sqrt(2.0 / (k + 1.0)) * t.cwiseProduct(cur) -
                std::sqrt(double(k) / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return out;
}

ConvergenceRow make_row(double h, double value, double predicted) {
  ConvergenceRow row;
  row.h = h;
  row.value = value;
  row.predicted = predicted;
  row.abs_error = std::abs(value - predicted);
  const double denom = std::abs(predicted) > 0.0 ? std::abs(predicted) : 1.0;
  row.rel_error = row.abs_error / denom;
  return row;
}

double table_order(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> hs, errs;
  for (const ConvergenceRow& r : rows) {
    hs.push_back(r.h);
    errs.push_back(r.abs_error);
  }
  return log_log_slope(hs, errs);
}

void add_verdict(ScenarioReport& rep, const std::string& name, double value,
                 double threshold, bool pass) {
  rep.verdicts.push_back({name, value, threshold, pass});
}

void add_upper_verdict(ScenarioReport& rep, const std::string& name,
                       double value, double threshold) {
  add_verdict(rep, name, value, threshold, value <= threshold);
}

}  // namespace

// ---------------------------------------------------------------------------
// Scaling plans
// ---------------------------------------------------------------------------

void ScalingPlan::validate() const {
  if (!epsilon_of_h) throw ConfigError("ScalingPlan: missing epsilon map");
  require_decreasing(h_schedule, "ScalingPlan h_schedule");
  double prev = std::numeric_limits<double>::infinity();
  for (double h : h_schedule) {
    const double eps = epsilon_of_h(h);
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw ConfigError("ScalingPlan: epsilon must be positive along the schedule");
    }
    if (!(eps < prev)) {
      throw ConfigError("ScalingPlan: epsilon must decrease along the schedule");
    }
    prev = eps;
  }
}

ScalingPlan make_plan(double exponent, std::vector<double> h_schedule) {
  if (!(exponent > 0.0)) {
    throw ConfigError("make_plan: exponent must be positive");
  }
  ScalingPlan plan;
  plan.epsilon_of_h = [exponent](double h) { return std::pow(h, exponent); };
  plan.h_schedule = std::move(h_schedule);
  plan.validate();
  return plan;
}

// ---------------------------------------------------------------------------
// Two-scale quantization
// ---------------------------------------------------------------------------

Mat doublescale_quantize(const TwoScaleSymbol& a, const PhaseSpaceGrid& grid,
                         double h) {
  if (!a.eval) throw ConfigError("doublescale_quantize: missing eval");
  if (a.d != grid.dimension()) {
    throw ConfigError("doublescale_quantize: dimension mismatch");
  }
  if (!(h > 0.0)) throw ConfigError("doublescale_quantize: h must be positive");
  const double root_h = std::sqrt(h);
  if (a.x_support > 0.0) {
    const double cover = root_h * grid.half_width();
    if (cover < a.x_support) {
      std::ostringstream os;
      os << "doublescale_quantize: macroscopic support " << a.x_support
         << " exceeds covered box " << cover;
      throw ConfigError(os.str());
    }
  }
  // At symmetric ordering the sampled points are X = sqrt(h) (mid, xi), so
  // the microscopic argument Y = X / sqrt(h) is exactly the grid coordinate.
  auto eval = a.eval;
  Symbol effective(a.d, SymbolClass::s_one,
                   [eval, root_h](const VecR& x, const VecR& xi) {
                     const unsigned d = static_cast<unsigned>(x.size());
                     VecR X(2 * d);
                     for (unsigned i = 0; i < d; ++i) {
                       X(i) = x(i);
                       X(d + i) = xi(i);
                     }
                     const VecR Y = X / root_h;
                     return eval(X, Y);
                   });
  return weyl_quantize(effective, grid, h, 0.5);
}

// ---------------------------------------------------------------------------
// Synthetic families
// ---------------------------------------------------------------------------

GridFamily family_fixed_profile(double width) {
  GridFamily fam;
  fam.name = "fixed_profile";
  fam.support_bound = 2.0;
  fam.state = [width](double, const PhaseSpaceGrid& grid) {
    const unsigned n = grid.points();
    Vec psi(n);
    for (unsigned j = 0; j < n; ++j) {
      const double t = grid.position(j) / width;
      psi(j) = std::exp(-0.5 * t * t);
    }
    return psi;
  };
  return fam;
}

GridFamily family_coherent(double x0, double xi0) {
  GridFamily fam;
  fam.name = "coherent";
  fam.support_bound = std::max(2.5, std::hypot(x0, xi0) + 1.0);
  fam.state = [x0, xi0](double h, const PhaseSpaceGrid& grid) {
    const double root_h = std::sqrt(h);
    const double q = x0 / root_h, p = xi0 / root_h;
    const unsigned n = grid.points();
    Vec psi(n);
    for (unsigned j = 0; j < n; ++j) {
      const double x = grid.position(j);
      psi(j) = std::exp(cxd(-0.5 * (x - q) * (x - q), p * x));
    }
    return psi;
  };
  return fam;
}

GridFamily family_intermediate(double width) {
  GridFamily fam;
  fam.name = "intermediate";
  fam.support_bound = 0.8;
  fam.state = [width](double h, const PhaseSpaceGrid& grid) {
    const double q = std::pow(h, -0.25);
    const unsigned n = grid.points();
    Vec psi(n);
    for (unsigned j = 0; j < n; ++j) {
      const double t = (grid.position(j) - q) / width;
      psi(j) = std::exp(-0.5 * t * t);
    }
    return psi;
  };
  return fam;
}

// ---------------------------------------------------------------------------
// Dictionary and triples
// ---------------------------------------------------------------------------

void MomentDictionary::validate() const {
  if (entries.empty()) throw ConfigError("MomentDictionary: empty");
  VecR zero = VecR::Zero(1);
  VecR probe = VecR::Constant(1, 0.731);
  const Symbol& first = entries.front().symbol;
  const double v0 = first(zero, zero), v1 = first(probe, zero),
               v2 = first(zero, probe);
  if (std::abs(v0 - 1.0) > 1e-12 || std::abs(v1 - 1.0) > 1e-12 ||
      std::abs(v2 - 1.0) > 1e-12) {
    throw ConfigError(
        "MomentDictionary: first entry must be the constant 1 (mass row)");
  }
}

MomentDictionary default_dictionary(double x0, double xi0) {
  MomentDictionary dict;
  dict.entries.push_back({"constant", Symbol::constant(1, 1.0), 1.0});
  dict.entries.push_back(
      {"origin_bump", Symbol::plateau(1, 0.25, 0.5), 1.0});
  dict.entries.push_back({"shifted_bump", bump_at(x0, xi0, 0.25, 0.6), 0.0});
  return dict;
}

MultiscaleTriple estimate_triple(const GridFamily& family,
                                 const MomentDictionary& dict,
                                 const std::vector<double>& h_schedule,
                                 const TripleOptions& opt) {
  dict.validate();
  require_decreasing(h_schedule, "estimate_triple h_schedule");
  require_decreasing(opt.delta_schedule, "estimate_triple delta_schedule");
  if (!family.state) throw ConfigError("estimate_triple: family has no state map");
  if (opt.hermite_count == 0) {
    throw ConfigError("estimate_triple: need at least one compression profile");
  }

  const std::size_t n_entries = dict.entries.size();
  const std::size_t n_delta = opt.delta_schedule.size();

  MultiscaleTriple out;
  out.deltas = opt.delta_schedule;
  for (const MomentEntry& e : dict.entries) {
    out.moment_names.push_back(e.name);
    out.moment_references.push_back(e.reference);
  }

  // Escape probe: near the origin macroscopically, away from every fixed
  // microscopic window. The directional variant weighs the microscopic
  // escape direction against the position axis.
  const double zx_in = 0.5 * opt.zero_bump_x, zx_out = opt.zero_bump_x;
  const double y_in = opt.y_cutoff_inner, y_out = opt.y_cutoff_outer;
  TwoScaleSymbol escape_probe;
  escape_probe.d = 1;
  escape_probe.x_support = zx_out;
  escape_probe.eval = [=](const VecR& X, const VecR& Y) {
    const double xr = std::hypot(X(0), X(1));
    const double yr = std::hypot(Y(0), Y(1));
    const double chi_x = smooth_step_down((xr - zx_in) / (zx_out - zx_in));
    const double chi_y = smooth_step_down((yr - y_in) / (y_out - y_in));
    return chi_x * (1.0 - chi_y);
  };
  TwoScaleSymbol directional_probe;
  directional_probe.d = 1;
  directional_probe.x_support = zx_out;
  directional_probe.eval = [=](const VecR& X, const VecR& Y) {
    const double yr = std::hypot(Y(0), Y(1));
    if (yr < 1e-12) return 0.0;
    const double base = escape_probe.eval(X, Y);
    return base * 0.5 * (1.0 + Y(0) / yr);
  };

  Mat gamma0_last;
  for (double h : h_schedule) {
    const PhaseSpaceGrid grid = balanced_grid(1, family.support_bound, h);
    Vec psi = family.state(h, grid);
    if (psi.size() != static_cast<Eigen::Index>(grid.matrix_dim())) {
      throw ConfigError("estimate_triple: family state has wrong grid size");
    }
    const double nrm = psi.norm();
    if (!(nrm > 0.0)) throw ConfigError("estimate_triple: zero family state");
    psi /= nrm;

    std::vector<double> moment_row(n_entries);
    for (std::size_t e = 0; e < n_entries; ++e) {
      const Mat op = weyl_quantize(dict.entries[e].symbol, grid, h, 0.5);
      moment_row[e] = pure_pairing(psi, op);
    }
    out.moments_per_h.push_back(std::move(moment_row));

    std::vector<double> bump_row(n_delta);
    for (std::size_t d = 0; d < n_delta; ++d) {
      const double delta = opt.delta_schedule[d];
      const Mat op =
          weyl_quantize(bump_at(0.0, 0.0, delta, 1.25 * delta), grid, h, 0.5);
      bump_row[d] = pure_pairing(psi, op);
    }
    out.bumps_per_h.push_back(std::move(bump_row));

    out.intermediate_per_h.push_back(
        pure_pairing(psi, doublescale_quantize(escape_probe, grid, h)));
    out.direction_per_h.push_back(
        pure_pairing(psi, doublescale_quantize(directional_probe, grid, h)));

    const std::vector<VecR> profiles =
        hermite_profiles(grid, opt.hermite_width, opt.hermite_count);
    Vec overlaps(opt.hermite_count);
    for (unsigned k = 0; k < opt.hermite_count; ++k) {
      overlaps(k) = profiles[k].cast<cxd>().dot(psi);
    }
    gamma0_last = overlaps * overlaps.adjoint();
    out.gamma0_trace_per_h.push_back(overlaps.squaredNorm());
    out.h_used.push_back(h);
  }

  const unsigned tail = opt.tail_points;
  auto column = [](const std::vector<std::vector<double>>& rows,
                   std::size_t j) {
    std::vector<double> col;
    col.reserve(rows.size());
    for (const auto& r : rows) col.push_back(r[j]);
    return col;
  };

  out.cauchy = true;
  for (std::size_t e = 0; e < n_entries; ++e) {
    const std::vector<double> col = column(out.moments_per_h, e);
    out.moments.push_back(tail_max(col, tail));
    if (tail_spread(col, tail) > opt.cauchy_tol) out.cauchy = false;
  }
  out.total_mass = out.moments.front();

  for (std::size_t d = 0; d < n_delta; ++d) {
    const std::vector<double> col = column(out.bumps_per_h, d);
    out.mass_near_zero.push_back(tail_max(col, tail));
    if (tail_spread(col, tail) > opt.cauchy_tol) out.cauchy = false;
  }
  if (n_delta >= 2) {
    const double m_last = out.mass_near_zero[n_delta - 1];
    const double m_prev = out.mass_near_zero[n_delta - 2];
    const double d_last = opt.delta_schedule[n_delta - 1];
    const double d_prev = opt.delta_schedule[n_delta - 2];
    out.nu_at_zero = m_last + (m_last - m_prev) * d_last / (d_prev - d_last);
  } else {
    out.nu_at_zero = out.mass_near_zero.back();
  }
  out.away_mass = out.total_mass - out.nu_at_zero;

  out.intermediate_mass = tail_max(out.intermediate_per_h, tail);
  if (tail_spread(out.intermediate_per_h, tail) > opt.cauchy_tol) {
    out.cauchy = false;
  }
  out.intermediate_direction = tail_max(out.direction_per_h, tail);
  out.gamma0 = gamma0_last;
  out.gamma0_trace = tail_max(out.gamma0_trace_per_h, tail);
  if (tail_spread(out.gamma0_trace_per_h, tail) > opt.cauchy_tol) {
    out.cauchy = false;
  }
  return out;
}

SeparatingReport separating_check(const MultiscaleTriple& triple, double tol) {
  SeparatingReport rep;
  rep.nu_at_zero = triple.nu_at_zero;
  rep.intermediate_mass = triple.intermediate_mass;
  rep.gamma0_trace = triple.gamma0_trace;
  rep.consistency_defect = std::abs(
      triple.nu_at_zero - (triple.intermediate_mass + triple.gamma0_trace));
  rep.separating = std::abs(rep.intermediate_mass) <= tol &&
                   std::abs(rep.nu_at_zero - rep.gamma0_trace) <= tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Tightness diagnostic
// ---------------------------------------------------------------------------

TightnessReport tightness_diagnostic(const GridFamily& family, double c_prime,
                                     const std::vector<double>& delta_schedule,
                                     const std::vector<double>& h_schedule,
                                     double tol) {
  if (!(c_prime > 0.0)) {
    throw ConfigError("tightness_diagnostic: c_prime must be positive");
  }
  require_decreasing(h_schedule, "tightness h_schedule");
  if (delta_schedule.empty()) {
    throw ConfigError("tightness_diagnostic: empty delta schedule");
  }
  TightnessReport rep;
  rep.h_schedule = h_schedule;
  rep.deltas = delta_schedule;

  const double c_check = 2.0 * c_prime;
  const double eps_max = h_schedule.front();
  rep.moment_bound = std::exp(c_check * std::exp(c_check * eps_max));

  for (double h : h_schedule) {
    const double eps = h;
    const PhaseSpaceGrid grid = balanced_grid(1, family.support_bound, h);
    Vec z = family.state(h, grid);
    z /= z.norm();  // field amplitude |z|^2 = 1

    // Number-moment row at c = 2 c' (the uniform-bound hypothesis).
    rep.moment_rows.push_back(
        std::exp((std::exp(c_check * eps) - 1.0) / eps));

    const double full = std::exp((std::exp(c_prime * eps) - 1.0) / eps);
    std::vector<double> srow;
    for (double delta : delta_schedule) {
      const MatR op = weyl_quantize_real(
          bump_unguarded(delta, 1.25 * delta), grid, h, 0.5);
      SymEig eig = symmetric_eig(op);
      double quad = 0.0;
      for (unsigned i = 0; i < grid.points(); ++i) {
        const cxd amp = eig.vectors.col(i).cast<cxd>().dot(z);
        quad += std::exp(c_prime * eps * eig.values(i)) * std::norm(amp);
      }
      const double cut = std::exp((quad - 1.0) / eps);
      srow.push_back(full - cut);
    }
    rep.s_per_h.push_back(std::move(srow));
  }

  rep.moment_bound_ok = true;
  for (double row : rep.moment_rows) {
    if (!(row <= rep.moment_bound * (1.0 + 1e-12))) rep.moment_bound_ok = false;
  }
  for (std::size_t d = 0; d < delta_schedule.size(); ++d) {
    std::vector<double> col;
    for (const auto& row : rep.s_per_h) col.push_back(row[d]);
    rep.s_limsup.push_back(tail_max(col, 3));
  }
  const std::size_t largest =
      std::max_element(delta_schedule.begin(), delta_schedule.end()) -
      delta_schedule.begin();
  rep.adapted = std::abs(rep.s_limsup[largest]) <= tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Scenario: coherent states
// ---------------------------------------------------------------------------

bool ScenarioReport::pass() const {
  for (const ScenarioVerdict& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

ScenarioReport scenario_coherent(const CoherentScenarioConfig& cfg) {
  if (cfg.modes == 0) throw ConfigError("scenario_coherent: modes must be >= 1");
  if (cfg.p_max == 0 || cfg.p_max > 4) {
    throw ConfigError("scenario_coherent: p_max must be in 1..4");
  }
  require_decreasing(cfg.eps_schedule, "scenario_coherent eps_schedule");

  ScenarioReport rep;
  rep.scenario = "coherent";
  rep.seed = cfg.seed;
  rep.parameters = {{"modes", double(cfg.modes)},
                    {"p_max", double(cfg.p_max)},
                    {"alpha_max", double(cfg.alpha_max)}};

  CounterRng rng(cfg.seed, 1);
  Vec z(cfg.modes);
  for (unsigned k = 0; k < cfg.modes; ++k) {
    z(k) = cxd(rng.normal(), rng.normal());
  }
  const double target_norm_sq = 1.6;
  z *= std::sqrt(target_norm_sq) / z.norm();
  const Mat a_obs = random_hermitian(rng, int(cfg.modes), 1.0);

  std::vector<ScenarioTable> gamma_tables(cfg.p_max);
  std::vector<ScenarioTable> product_tables(cfg.p_max >= 2 ? cfg.p_max - 1 : 0);
  std::vector<ScenarioTable> pi_tables(cfg.alpha_max + 1);
  double worst_gamma = 0.0, worst_product = 0.0, worst_mass = 0.0;
  double worst_build = 0.0, worst_defect = 0.0, final_pi_rel = 0.0;

  for (double eps : cfg.eps_schedule) {
    const unsigned n_max = coherent_required_n_max(target_norm_sq, eps) + 2;
    TruncatedFock fock(Statistics::bosonic, cfg.modes, n_max, eps);
    CoherentReport coh = coherent_state(z, fock);
    worst_build = std::max(worst_build, coh.construction_discrepancy);
    worst_defect = std::max(worst_defect, coh.eigenvector_defect);

    double moment1 = 0.0;
    for (unsigned p = 1; p <= cfg.p_max; ++p) {
      ReducedDensityMatrix gamma = reduced_density(coh.state, p);

      // Rank-one tensor-power target on the occupation basis.
      const SectorBasis& basis = fock.sector(p);
      Vec zp(basis.dim());
      for (std::size_t i = 0; i < basis.dim(); ++i) {
        const std::vector<unsigned>& mu = basis.occupation(i);
        double log_mult = log_factorial(p);
        cxd prod = 1.0;
        for (unsigned k = 0; k < cfg.modes; ++k) {
          log_mult -= log_factorial(mu[k]);
          for (unsigned r = 0; r < mu[k]; ++r) prod *= z(k);
        }
        zp(static_cast<Eigen::Index>(i)) = std::exp(0.5 * log_mult) * prod;
      }
      Mat target = zp * zp.adjoint();

      Eigen::JacobiSVD<Mat> svd(gamma.matrix - target);
      const double dist = svd.singularValues().sum();
      worst_gamma = std::max(worst_gamma, dist);
      gamma_tables[p - 1].rows.push_back(make_row(eps, dist, 0.0));

      const double mass_defect =
          std::abs(gamma.trace - number_factorial_moment(coh.state, p));
      worst_mass = std::max(worst_mass, mass_defect);

      const Mat kernel_p =
          WickKernel::tensor_power(Statistics::bosonic, a_obs, p).matrix();
      const double mom = std::real((gamma.matrix * kernel_p).trace());
      if (p == 1) {
        moment1 = mom;
      } else {
        const double predicted = std::pow(moment1, double(p));
        const double dev = std::abs(mom - predicted) /
                           std::max(std::abs(predicted), 1e-300);
        worst_product = std::max(worst_product, dev);
        product_tables[p - 2].rows.push_back(make_row(eps, mom, predicted));
      }
    }

    for (unsigned alpha = 0; alpha <= cfg.alpha_max; ++alpha) {
      const double value = coh.state.number_moment(alpha);
      const double reference = std::pow(target_norm_sq, double(alpha));
      pi_tables[alpha].rows.push_back(make_row(eps, value, reference));
      if (eps == cfg.eps_schedule.back()) {
        final_pi_rel =
            std::max(final_pi_rel, std::abs(value - reference) / reference);
      }
    }
  }

  for (unsigned p = 1; p <= cfg.p_max; ++p) {
    gamma_tables[p - 1].name = "gamma_error_p" + std::to_string(p);
    gamma_tables[p - 1].fitted_order = table_order(gamma_tables[p - 1].rows);
    rep.tables.push_back(std::move(gamma_tables[p - 1]));
  }
  for (unsigned p = 2; p <= cfg.p_max; ++p) {
    product_tables[p - 2].name = "product_structure_p" + std::to_string(p);
    product_tables[p - 2].fitted_order =
        table_order(product_tables[p - 2].rows);
    rep.tables.push_back(std::move(product_tables[p - 2]));
  }
  for (unsigned alpha = 0; alpha <= cfg.alpha_max; ++alpha) {
    pi_tables[alpha].name = "number_moment_alpha" + std::to_string(alpha);
    pi_tables[alpha].fitted_order = table_order(pi_tables[alpha].rows);
    rep.tables.push_back(std::move(pi_tables[alpha]));
  }

  add_upper_verdict(rep, "reduced_density_trace_distance", worst_gamma, 1e-6);
  add_upper_verdict(rep, "product_structure_deviation", worst_product, 1e-6);
  add_upper_verdict(rep, "mass_bookkeeping_defect", worst_mass, 1e-10);
  // The displacement route reflects off the truncation wall, so the two
  // constructions agree only up to the occupation-tail amplitude at the
  // cutoff (largest at the coarsest eps).
  add_upper_verdict(rep, "construction_discrepancy", worst_build, 1e-5);
  add_upper_verdict(rep, "ladder_eigenvector_defect", worst_defect, 1e-10);
  add_upper_verdict(rep, "number_moment_final_rel_error", final_pi_rel, 0.2);
  return rep;
}

// ---------------------------------------------------------------------------
// Scenario: one-dimensional Fermi scaling (eps = h)
// ---------------------------------------------------------------------------

ScenarioReport scenario_fermi_gibbs(const FermiScenarioConfig& cfg) {
  const ScalingPlan plan = make_plan(1.0, cfg.h_schedule);
  if (!(cfg.beta > 0.0)) throw ConfigError("scenario_fermi_gibbs: beta > 0");
  if (!(cfg.decay > 0.0)) throw ConfigError("scenario_fermi_gibbs: decay > 0");

  ScenarioReport rep;
  rep.scenario = "fermi_gibbs";
  rep.parameters = {{"beta", cfg.beta},
                    {"decay", cfg.decay},
                    {"support_bound", cfg.support_bound}};

  const Symbol alpha = Symbol::harmonic(1);
  const Symbol a_sym = Symbol::gaussian(1, cfg.decay);
  const double beta = cfg.beta;

  // Classical limit: integral of the Fermi factor against a over phase
  // space / 2 pi; radially, with u = |X|^2 / 2, the measure is du.
  const auto fermi = [beta](double u) {
    return 1.0 / (1.0 + std::exp(beta * u));
  };
  const double predicted = simpson(
      [&](double u) { return fermi(u) * std::exp(-2.0 * cfg.decay * u); }, 0.0,
      40.0 / (2.0 * cfg.decay) + 4.0, 1 << 12);

  ScenarioTable first_table{"first_moment", {}, 0.0};
  ScenarioTable product_table{"second_moment_product", {}, 0.0};

  for (double h : plan.h_schedule) {
    const double eps = plan.epsilon_of_h(h);
    const PhaseSpaceGrid grid = balanced_grid(1, cfg.support_bound, h);
    SymEig eig;
    {
      MatR hq = weyl_quantize_real(alpha, grid, h, 0.5);
      eig = symmetric_eig(hq);
    }
    MatR m_obs;
    {
      MatR aq = weyl_quantize_real(a_sym, grid, h, 0.5);
      MatR av = aq * eig.vectors;
      aq.resize(0, 0);
      m_obs = eig.vectors.transpose() * av;
    }
    VecR f(eig.values.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = fermi(eig.values(i));

    const double value = h * f.dot(m_obs.diagonal());
    first_table.rows.push_back(make_row(h, value, predicted));

    // Exact pair moment of the quasi-free state: (eps Tr[g a])^2 minus the
    // exchange term eps^2 Tr[(g a)^2]; the product law is its h -> 0 shape.
    const double exchange =
        eps * eps * ((m_obs.cwiseProduct(m_obs)) * f).dot(f);
    const double moment1 = eps * f.dot(m_obs.diagonal());
    const double moment2 = moment1 * moment1 - exchange;
    product_table.rows.push_back(make_row(h, moment2, moment1 * moment1));
  }

  first_table.fitted_order = table_order(first_table.rows);
  product_table.fitted_order = table_order(product_table.rows);
  const double final_rel = first_table.rows.back().rel_error;
  const double final_dev = product_table.rows.back().rel_error;
  const double order = first_table.fitted_order;
  rep.tables.push_back(std::move(first_table));
  rep.tables.push_back(std::move(product_table));

  add_upper_verdict(rep, "first_moment_final_rel_error", final_rel, 0.03);
  add_verdict(rep, "first_moment_fitted_order", order, 0.8, order >= 0.8);
  add_upper_verdict(rep, "pair_product_deviation", final_dev, 0.05);
  return rep;
}

// ---------------------------------------------------------------------------
// Scenario: planar Bose gas (eps = h^2)
// ---------------------------------------------------------------------------

namespace {

// Observable profile in the spectral variable: 1 near the bottom, 0 from 4.
double bec_profile(double u) { return smooth_step_down((u - 1.0) / 3.0); }

}  // namespace

ScenarioReport scenario_bec(const BecScenarioConfig& cfg) {
  const ScalingPlan plan = make_plan(2.0, cfg.h_schedule);
  if (!(cfg.nu_c > 0.0)) throw ConfigError("scenario_bec: nu_c > 0 required");
  if (!(cfg.beta > 0.0)) throw ConfigError("scenario_bec: beta > 0 required");
  const double g0 = bec_profile(0.0);
  const double pole = 1.0 / (cfg.nu_c * g0);
  if (!(cfg.s_eval > 0.0) || !(cfg.s_eval < pole)) {
    throw ConfigError("scenario_bec: s_eval must sit inside (0, pole)");
  }

  ScenarioReport rep;
  rep.scenario = "bec";
  rep.parameters = {{"beta", cfg.beta},
                    {"nu_c", cfg.nu_c},
                    {"s_eval", cfg.s_eval},
                    {"support_bound", cfg.support_bound}};

  const double beta = cfg.beta;
  const double spectral_cut = 4.0;  // profile support

  // Limit: condensate pole factor times the thermal exponential; in d = 2
  // the radial spectral measure of u = |X|^2/2 is u du.
  const double thermal_integral = simpson(
      [&](double u) {
        if (u <= 0.0) return bec_profile(0.0) / beta;
        const double bose = std::exp(-beta * u) / (1.0 - std::exp(-beta * u));
        return bose * bec_profile(u) * u;
      },
      0.0, spectral_cut, 1 << 12);
  const auto phi_limit = [&](double s) {
    return std::exp(s * thermal_integral) / (1.0 - s * cfg.nu_c * g0);
  };

  ScenarioTable main_table{"generating_function", {}, 0.0};
  ScenarioTable pole_table{"pole_bracket", {}, 0.0};
  ScenarioTable taylor_table{"condensate_taylor", {}, 0.0};
  ScenarioTable recip_table{"coefficient_reciprocity", {}, 0.0};
  double crosscheck_rel = 0.0, funcalc_norm = 0.0;

  const unsigned orders = std::max(1u, std::min(cfg.taylor_orders, 16u));
  std::vector<double> taylor_final(orders + 1, 0.0);
  std::vector<double> coeff_final(orders + 1, 0.0);
  std::vector<double> recip_final(orders + 1, 0.0);
  double pole_final = 0.0;

  for (std::size_t step = 0; step < plan.h_schedule.size(); ++step) {
    const double h = plan.h_schedule[step];
    const double eps = plan.epsilon_of_h(h);
    const PhaseSpaceGrid grid = balanced_grid(1, cfg.support_bound, h);
    SymEig eig;
    {
      MatR hq = weyl_quantize_real(Symbol::harmonic(1), grid, h, 0.5);
      eig = symmetric_eig(hq);
    }
    const double lam0 = eig.values(0);
    VecR lam = eig.values.array() - lam0;  // per-axis, ground at 0

    // Planar spectrum = per-axis sums; modes above the profile support do
    // not contribute. Collect the active (i, j) pairs once.
    struct Mode {
      double lam2;
      double c;
      double g;
    };
    std::vector<Mode> modes;
    const double mu_term = eps / cfg.nu_c;  // -beta mu
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      if (lam(i) > spectral_cut) break;
      for (Eigen::Index j = 0; j < lam.size(); ++j) {
        const double l2 = lam(i) + lam(j);
        if (l2 > spectral_cut) break;
        modes.push_back({l2, std::exp(-beta * l2 - mu_term), bec_profile(l2)});
      }
    }

    const auto log_phi = [&](cxd s) {
      cxd acc = 0.0;
      for (const Mode& mo : modes) {
        if (mo.g <= 0.0) continue;
        const cxd b = std::exp(eps * s * mo.g);
        acc -= std::log(1.0 - mo.c * b) - std::log(1.0 - mo.c);
      }
      return acc;
    };
    const auto phi_h = [&](cxd s) { return std::exp(log_phi(s)); };

    const double value = std::real(phi_h(cfg.s_eval));
    main_table.rows.push_back(make_row(h, value, phi_limit(cfg.s_eval)));

    // Pole bracket from two evaluations close to the divergence.
    const double s1 = 0.9 * pole, s2 = 0.95 * pole;
    const double p1 = std::real(phi_h(s1)), p2 = std::real(phi_h(s2));
    const double pole_est = (p2 * s2 - p1 * s1) / (p2 - p1);
    pole_table.rows.push_back(make_row(h, pole_est, pole));
    pole_final = pole_est;

    // Condensate factor derivatives and full Taylor coefficients by a
    // Cauchy contour inside the pole.
    const double c00 = std::exp(-mu_term);
    const auto g_cond = [&](cxd s) {
      return (1.0 - c00) / (1.0 - c00 * std::exp(eps * g0 * s));
    };
    const unsigned nodes = 64;
    const double radius = 0.5 * pole;
    std::vector<cxd> g_sum(orders + 1, 0.0), phi_sum(orders + 1, 0.0);
    for (unsigned k = 0; k < nodes; ++k) {
      const double theta = 2.0 * M_PI * k / nodes;
      const cxd s = radius * cxd(std::cos(theta), std::sin(theta));
      const cxd gv = g_cond(s), pv = phi_h(s);
      for (unsigned p = 0; p <= orders; ++p) {
        const cxd rot = std::exp(cxd(0.0, -double(p) * theta));
        g_sum[p] += gv * rot;
        phi_sum[p] += pv * rot;
      }
    }
    const bool last = (step + 1 == plan.h_schedule.size());
    for (unsigned p = 0; p <= orders; ++p) {
      const double scale = 1.0 / (nodes * std::pow(radius, double(p)));
      const double g_coeff = std::real(g_sum[p]) * scale;       // Taylor coeff
      const double phi_coeff = std::real(phi_sum[p]) * scale;
      if (last) {
        taylor_final[p] = g_coeff;
        coeff_final[p] = phi_coeff;
      }
    }

    if (last) {
      // Second, algebraically independent route to the same coefficients:
      // log phi(s) expands per mode as sum_q (eps g s)^q / q! * A_q(c) with
      // A_q(c) = sum_n n^{q-1} c^n, the negative-order polylogarithm, in
      // closed form via the Eulerian triangle. The exponential recursion
      // phi_p = (1/p) sum_q q L_q phi_{p-q} then rebuilds the coefficients
      // without any contour quadrature.
      std::vector<std::vector<double>> euler(orders);
      euler[0] = {1.0};
      for (unsigned n = 1; n < orders; ++n) {
        euler[n].assign(n, 0.0);
        for (unsigned k = 0; k < n; ++k) {
          const double same = (k < euler[n - 1].size()) ? euler[n - 1][k] : 0.0;
          const double prev =
              (k >= 1 && k - 1 < euler[n - 1].size()) ? euler[n - 1][k - 1]
                                                      : 0.0;
          euler[n][k] = double(k + 1) * same + double(n - k) * prev;
        }
      }
      std::vector<double> log_coeff(orders + 1, 0.0);
      for (const Mode& mo : modes) {
        if (mo.g <= 0.0) continue;
        const double r = 1.0 - mo.c;
        double xq = 1.0;  // (eps g)^q / q!
        for (unsigned q = 1; q <= orders; ++q) {
          xq *= eps * mo.g / double(q);
          double num = 0.0, cpow = mo.c;
          for (double coeff : euler[q - 1]) {
            num += coeff * cpow;
            cpow *= mo.c;
          }
          log_coeff[q] += xq * num / std::pow(r, double(q));
        }
      }
      recip_final[0] = 1.0;
      for (unsigned p = 1; p <= orders; ++p) {
        double acc = 0.0;
        for (unsigned q = 1; q <= p; ++q) {
          acc += double(q) * log_coeff[q] * recip_final[p - q];
        }
        recip_final[p] = acc / double(p);
      }
    }

    if (step == 0) {
      // Exact cross-check on the two lowest factorizing modes, compared
      // against the direct sector sums on a two-mode Fock truncation.
      const double lam01 = lam(0) + lam(1);
      Mat c2 = Mat::Zero(2, 2);
      c2(0, 0) = std::exp(-mu_term);
      c2(1, 1) = std::exp(-beta * lam01 - mu_term);
      Mat b2 = Mat::Zero(2, 2);
      b2(0, 0) = std::exp(eps * cfg.s_eval * bec_profile(0.0));
      b2(1, 1) = std::exp(eps * cfg.s_eval * bec_profile(lam01));
      cxd closed = 1.0;
      for (int k = 0; k < 2; ++k) {
        closed *= (1.0 - c2(k, k)) / (1.0 - c2(k, k) * b2(k, k));
      }
      // Truncation depth sized by the slower-decaying kernel (the tilted
      // one); the two block stacks are built one at a time to halve the
      // peak footprint.
      const unsigned n2 = std::max(bosonic_gibbs_n_max(c2, 1e-12),
                                   bosonic_gibbs_n_max(c2 * b2, 1e-12));
      TruncatedFock fock2(Statistics::bosonic, 2, n2, eps);
      cxd trc = 0.0, trcb = 0.0;
      {
        const std::vector<Mat> zc = gamma_sector_blocks(fock2, c2);
        for (const Mat& blk : zc) trc += blk.trace();
      }
      {
        const std::vector<Mat> zcb = gamma_sector_blocks(fock2, c2 * b2);
        for (const Mat& blk : zcb) trcb += blk.trace();
      }
      crosscheck_rel = std::abs(trcb / trc - closed) / std::abs(closed);

      // Functional-calculus discrepancy: quantize the radial composite and
      // compare against the profile applied to the planar spectrum.
      const Symbol composite(
          2, SymbolClass::compact_support,
          [](const VecR& x, const VecR& xi) {
            return bec_profile(0.5 * (x.squaredNorm() + xi.squaredNorm()));
          },
          std::sqrt(2.0 * spectral_cut) + 0.5);
      const PhaseSpaceGrid grid2 = balanced_grid(2, cfg.support_bound, h);
      const MatR aw = weyl_quantize_real(composite, grid2, h, 0.5);
      const unsigned n = grid2.points();
      MatR spectral_profile(n, n);
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          spectral_profile(i, j) = bec_profile(eig.values(i) + eig.values(j));
        }
      }
      // Power iteration on v -> (A_w - g(H))v using the per-axis factors.
      const auto apply_diff = [&](const VecR& v) {
        Eigen::Map<const MatR> x(v.data(), n, n);  // column j1, row j2
        MatR w = eig.vectors.transpose() * x * eig.vectors;
        w.array() *= spectral_profile.array();
        MatR back = eig.vectors * w * eig.vectors.transpose();
        VecR out = aw * v;
        out -= Eigen::Map<const VecR>(back.data(), v.size());
        return out;
      };
      CounterRng rng(99, 7);
      VecR v(grid2.matrix_dim());
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.normal();
      v /= v.norm();
      double lambda = 0.0;
      for (int it = 0; it < 80; ++it) {
        VecR w = apply_diff(v);
        lambda = v.dot(w);
        const double nw = w.norm();
        if (nw < 1e-300) break;
        v = w / nw;
      }
      funcalc_norm = std::abs(lambda);
    }
  }

  for (unsigned p = 1; p <= orders; ++p) {
    // d^p G(0)/ds^p = p! * coeff; the prediction is p! (nu_c g0)^p.
    const double measured = taylor_final[p];
    const double target = std::pow(cfg.nu_c * g0, double(p));
    taylor_table.rows.push_back(make_row(double(p), measured, target));

    // Contour-extracted coefficient against the power-sum route at the same
    // resolution; the two computations share nothing but the mode list.
    recip_table.rows.push_back(
        make_row(double(p), coeff_final[p], recip_final[p]));
  }

  main_table.fitted_order = table_order(main_table.rows);
  const double final_rel = main_table.rows.back().rel_error;
  const double pole_rel = std::abs(pole_final - pole) / pole;
  double taylor_worst = 0.0, recip_worst = 0.0;
  for (const ConvergenceRow& r : taylor_table.rows) {
    taylor_worst = std::max(taylor_worst, r.rel_error);
  }
  for (const ConvergenceRow& r : recip_table.rows) {
    recip_worst = std::max(recip_worst, r.rel_error);
  }

  rep.tables.push_back(std::move(main_table));
  rep.tables.push_back(std::move(pole_table));
  rep.tables.push_back(std::move(taylor_table));
  rep.tables.push_back(std::move(recip_table));

  add_upper_verdict(rep, "generating_function_final_rel_error", final_rel,
                    0.05);
  add_upper_verdict(rep, "pole_bracket_rel_error", pole_rel, 0.10);
  add_upper_verdict(rep, "condensate_taylor_rel_error", taylor_worst, 0.02);
  add_upper_verdict(rep, "coefficient_reciprocity_rel_error", recip_worst,
                    1e-9);
  add_upper_verdict(rep, "two_mode_crosscheck_rel_error", crosscheck_rel,
                    1e-8);
  add_upper_verdict(rep, "functional_calculus_discrepancy", funcalc_norm, 0.5);
  return rep;
}

// ---------------------------------------------------------------------------
// Scenario: singular-weight trace asymptotics
// ---------------------------------------------------------------------------

ScenarioReport scenario_singular_trace(const SingularScenarioConfig& cfg) {
  ScenarioReport rep;
  rep.scenario = "singular_trace";
  rep.parameters = {{"support_bound", cfg.support_bound},
                    {"max_points", double(cfg.max_points)}};

  SingularWeight fw;
  fw.kappa0 = 0.5;
  fw.kappa_inf = 2.0;
  fw.f0 = 1.0;
  fw.f = [](double u) {
    return std::pow(u, -0.5) * std::pow(1.0 + u * u, -0.75);
  };

  const Symbol alpha = Symbol::harmonic(1);
  const Symbol a_sym = Symbol::gaussian(1, 5.0);

  const std::vector<SingularTraceTable> tables =
      singular_trace(fw, alpha, a_sym, cfg.h_schedule, cfg.c_values,
                     cfg.support_bound, cfg.max_points);

  double worst_final_rel = 0.0, worst_scaling = 0.0;
  bool decreasing = true;
  for (const SingularTraceTable& t : tables) {
    ScenarioTable st;
    std::ostringstream name;
    name << "shifted_trace_c_" << t.c;
    st.name = name.str();
    st.rows = t.rows;
    st.fitted_order = t.fitted_order;
    rep.tables.push_back(std::move(st));

    worst_final_rel = std::max(worst_final_rel, t.rows.back().rel_error);
    if (!(t.rows.back().abs_error < t.rows.front().abs_error)) {
      decreasing = false;
    }
  }

  // The measured value splits into the ground-state part, the smooth
  // integral, and a finite-h quadrature deficit. The deficit does not depend
  // on c, because the spectral shift c*h^{1/kappa0} sits far below the first
  // excited level. Differencing the finest-h values across c therefore
  // cancels everything except the ground-state coefficient, which must
  // reproduce f0 * a(0) * c^{-kappa0} for every pair.
  const double target = fw.f0 * a_sym.at_origin();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      const double wi = std::pow(tables[i].c, -fw.kappa0);
      const double wj = std::pow(tables[j].c, -fw.kappa0);
      if (std::abs(wi - wj) < 1e-12) continue;
      const double beta =
          (tables[i].rows.back().value - tables[j].rows.back().value) /
          (wi - wj);
      worst_scaling = std::max(worst_scaling, std::abs(beta / target - 1.0));
    }
  }

  add_upper_verdict(rep, "final_rel_error", worst_final_rel, 0.05);
  add_upper_verdict(rep, "condensate_scaling_deviation", worst_scaling, 0.03);
  add_verdict(rep, "error_decreasing", decreasing ? 1.0 : 0.0, 1.0, decreasing);
  return rep;
}

// ---------------------------------------------------------------------------
// Scenario: multiscale triples
// ---------------------------------------------------------------------------

ScenarioReport scenario_multiscale(const MultiscaleScenarioConfig& cfg) {
  require_decreasing(cfg.coarse_schedule, "multiscale coarse_schedule");
  require_decreasing(cfg.fine_schedule, "multiscale fine_schedule");

  ScenarioReport rep;
  rep.scenario = "multiscale";
  rep.parameters = {{"x0", cfg.x0}, {"xi0", cfg.xi0}, {"tol", cfg.tol}};

  struct Case {
    GridFamily family;
    MomentDictionary dict;
    std::vector<double> schedule;
    double expect_away, expect_intermediate, expect_gamma0;
    double expect_zero;
  };
  std::vector<Case> cases;
  cases.push_back({family_fixed_profile(1.0), default_dictionary(cfg.x0, cfg.xi0),
                   cfg.coarse_schedule, 0.0, 0.0, 1.0, 1.0});
  {
    MomentDictionary dict = default_dictionary(cfg.x0, cfg.xi0);
    dict.entries[1].reference = 0.0;  // origin bump: no mass at the origin
    dict.entries[2].reference = 1.0;  // shifted bump: sits at (x0, xi0)
    cases.push_back({family_coherent(cfg.x0, cfg.xi0), std::move(dict),
                     cfg.coarse_schedule, 1.0, 0.0, 0.0, 0.0});
  }
  {
    // The intermediate family keeps a small macroscopic box, so its shifted
    // probe must be narrower than the default to satisfy the support guard.
    MomentDictionary dict;
    dict.entries.push_back({"constant", Symbol::constant(1, 1.0), 1.0});
    dict.entries.push_back({"origin_bump", Symbol::plateau(1, 0.25, 0.5), 1.0});
    dict.entries.push_back({"shifted_bump", bump_at(0.4, 0.0, 0.1, 0.2), 0.0});
    cases.push_back({family_intermediate(0.3), std::move(dict),
                     cfg.fine_schedule, 0.0, 1.0, 0.0, 1.0});
  }

  double recovery_error = 0.0;
  for (const Case& cs : cases) {
    const MultiscaleTriple triple =
        estimate_triple(cs.family, cs.dict, cs.schedule);
    const SeparatingReport sep = separating_check(triple, cfg.tol);
    const std::string tag = cs.family.name;

    ScenarioTable zero_table{tag + "_mass_near_zero", {}, 0.0};
    ScenarioTable escape_table{tag + "_escape_probe", {}, 0.0};
    ScenarioTable gamma_table{tag + "_compressed_trace", {}, 0.0};
    for (std::size_t i = 0; i < triple.h_used.size(); ++i) {
      zero_table.rows.push_back(make_row(
          triple.h_used[i], triple.bumps_per_h[i].back(), cs.expect_zero));
      escape_table.rows.push_back(make_row(triple.h_used[i],
                                           triple.intermediate_per_h[i],
                                           cs.expect_intermediate));
      gamma_table.rows.push_back(make_row(
          triple.h_used[i], triple.gamma0_trace_per_h[i], cs.expect_gamma0));
    }
    rep.tables.push_back(std::move(zero_table));
    rep.tables.push_back(std::move(escape_table));
    rep.tables.push_back(std::move(gamma_table));

    add_upper_verdict(rep, tag + "_away_mass",
                      std::abs(triple.away_mass - cs.expect_away), cfg.tol);
    add_upper_verdict(
        rep, tag + "_intermediate_mass",
        std::abs(triple.intermediate_mass - cs.expect_intermediate), cfg.tol);
    add_upper_verdict(rep, tag + "_compressed_trace",
                      std::abs(triple.gamma0_trace - cs.expect_gamma0),
                      cfg.tol);
    add_upper_verdict(rep, tag + "_consistency_defect",
                      sep.consistency_defect, cfg.tol);

    if (&cs == &cases.front()) {
      recovery_error = std::abs(triple.gamma0(0, 0) - 1.0) +
                       triple.gamma0.cwiseAbs().sum() -
                       std::abs(triple.gamma0(0, 0));
    }
  }
  add_upper_verdict(rep, "fixed_profile_recovery_error", recovery_error, 1e-6);
  return rep;
}

}  // namespace fockbench
