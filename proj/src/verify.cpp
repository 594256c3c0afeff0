#include "fockbench/verify.hpp"

#include <cmath>
#include <tuple>

#include "fockbench/report.hpp"
#include "fockbench/rng.hpp"

namespace fockbench {

namespace {

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Vec random_vec(CounterRng& rng, unsigned n) {
  Vec v(n);
  for (unsigned i = 0; i < n; ++i) v(i) = cxd(rng.normal(), rng.normal());
  return v;
}

void push(ScenarioReport& rep, const std::string& name, double value,
          double threshold) {
  rep.verdicts.push_back({name, value, threshold, value <= threshold});
}

void push_flag(ScenarioReport& rep, const std::string& name, bool ok) {
  rep.verdicts.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
}

// Commutator/anticommutator defect against eps<f,g> Id, measured on the
// subspace below the top sector (creation leaks there by construction).
double field_relation_defect(const TruncatedFock& fock, const Vec& f,
                             const Vec& g) {
  const Mat af = annihilation(fock, f).matrix();
  const Mat cg = creation(fock, g).matrix();
  const double sign = fock.statistics() == Statistics::fermionic ? 1.0 : -1.0;
  Mat rel = af * cg + sign * cg * af;
  rel.diagonal().array() -= fock.eps() * OneParticleSpace::inner(f, g);
  // Fermions at full cutoff close exactly; bosons are compared below the
  // top sector on both sides.
  if (fock.statistics() == Statistics::fermionic &&
      fock.n_max() >= fock.modes()) {
    return max_abs(rel);
  }
  const auto safe = static_cast<Eigen::Index>(fock.sector_offset(fock.n_max()));
  return max_abs(rel.topLeftCorner(safe, safe));
}

double same_species_defect(const TruncatedFock& fock, const Vec& f,
                           const Vec& g) {
  const Mat af = annihilation(fock, f).matrix();
  const Mat ag = annihilation(fock, g).matrix();
  const double sign = fock.statistics() == Statistics::fermionic ? 1.0 : -1.0;
  return max_abs(af * ag + sign * ag * af);
}

Mat sum_over_slots(const Mat& a, unsigned p) {
  const unsigned m = static_cast<unsigned>(a.rows());
  Mat acc = Mat::Zero(static_cast<Eigen::Index>(std::pow(double(m), double(p))),
                      static_cast<Eigen::Index>(std::pow(double(m), double(p))));
  for (unsigned slot = 0; slot < p; ++slot) {
    Mat term = Mat::Identity(1, 1);
    for (unsigned j = 0; j < p; ++j) {
      term = kron(term, j == slot ? a : Mat::Identity(m, m));
    }
    acc += term;
  }
  return acc;
}

}  // namespace

ScenarioReport core_verification(unsigned long long seed) {
  ScenarioReport rep;
  rep.scenario = "verify_core";
  rep.seed = seed;
  CounterRng rng(seed, 0);

  // --- Canonical relations -------------------------------------------------
  {
    TruncatedFock bose(Statistics::bosonic, 2, 5, 0.3);
    const Vec f = random_vec(rng, 2), g = random_vec(rng, 2);
    push(rep, "ccr_pair_defect", field_relation_defect(bose, f, g), 1e-12);
    push(rep, "ccr_same_species_defect", same_species_defect(bose, f, g),
         1e-12);

    TruncatedFock fermi(Statistics::fermionic, 4, 4, 0.25);
    const Vec u = random_vec(rng, 4), v = random_vec(rng, 4);
    push(rep, "car_pair_defect", field_relation_defect(fermi, u, v), 1e-12);
    push(rep, "car_same_species_defect", same_species_defect(fermi, u, v),
         1e-12);
  }

  // --- Projector and embedding laws ---------------------------------------
  const std::vector<std::tuple<Statistics, unsigned, unsigned>> law_cases = {
      {Statistics::bosonic, 3, 3}, {Statistics::fermionic, 4, 2}};
  for (const auto& [stat, m, p] : law_cases) {
    const std::string tag =
        std::string(statistics_name(stat)) + "_m" + std::to_string(m);
    const Mat s = symmetrizer(stat, m, p);
    push(rep, "symmetrizer_idempotent_" + tag, max_abs(s * s - s), 1e-13);
    push(rep, "symmetrizer_selfadjoint_" + tag, max_abs(s - Mat(s.adjoint())),
         1e-13);
    const EmbedRestrict er = embed_restrict(stat, m, p);
    const auto sector = static_cast<Eigen::Index>(sector_dimension(stat, m, p));
    push(rep, "restrict_embed_identity_" + tag,
         max_abs(er.restrict_map * er.embed -
                 Mat(Mat::Identity(sector, sector))),
         1e-13);
    push(rep, "embed_restrict_symmetrizer_" + tag,
         max_abs(er.embed * er.restrict_map - s), 1e-13);
  }

  // --- Adjoint law ----------------------------------------------------------
  {
    TruncatedFock bose(Statistics::bosonic, 2, 4, 0.5);
    const Vec f = random_vec(rng, 2);
    push(rep, "creation_adjoint_law",
         max_abs(creation(bose, f).matrix() -
                 Mat(annihilation(bose, f).matrix().adjoint())),
         1e-15);
  }

  // --- Second quantization against the tensor oracle ------------------------
  for (Statistics stat : {Statistics::bosonic, Statistics::fermionic}) {
    const unsigned m = stat == Statistics::bosonic ? 2 : 3;
    const double eps = 0.4;
    TruncatedFock fock(stat, m, 3, eps);
    const Mat a = random_complex_matrix(rng, m, m);
    const Mat c = random_complex_matrix(rng, m, m);
    const FockOperator dg = dGamma(fock, a);
    const std::vector<Mat> blocks = gamma_sector_blocks(fock, c);
    double dg_defect = 0.0, gamma_defect = 0.0;
    for (unsigned n = 1; n <= 3; ++n) {
      const EmbedRestrict er = embed_restrict(stat, m, n);
      const auto off = static_cast<Eigen::Index>(fock.sector_offset(n));
      const auto dim = static_cast<Eigen::Index>(fock.sector_dim(n));
      const Mat dg_block = dg.matrix().block(off, off, dim, dim);
      dg_defect = std::max(
          dg_defect, max_abs(dg_block - Mat(eps * er.restrict_map *
                                            sum_over_slots(a, n) * er.embed)));
      Mat cpow = Mat::Identity(1, 1);
      for (unsigned j = 0; j < n; ++j) cpow = kron(cpow, c);
      gamma_defect = std::max(
          gamma_defect,
          max_abs(blocks[n] - Mat(er.restrict_map * cpow * er.embed)));
    }
    const std::string tag = statistics_name(stat);
    push(rep, std::string("dgamma_oracle_") + tag, dg_defect, 1e-12);
    push(rep, std::string("gamma_oracle_") + tag, gamma_defect, 1e-12);
  }

  // --- Wick layer: composition, adjoint covariance, power expansion ---------
  for (Statistics stat : {Statistics::bosonic, Statistics::fermionic}) {
    const unsigned m = stat == Statistics::bosonic ? 2 : 3;
    TruncatedFock fock(stat, m, 4, 0.3);
    const auto d1 = static_cast<int>(sector_dimension(stat, m, 1));
    const auto d2 = static_cast<int>(sector_dimension(stat, m, 2));
    const WickKernel b1(stat, m, 1, 2, random_complex_matrix(rng, d2, d1));
    const WickKernel b2(stat, m, 2, 1, random_complex_matrix(rng, d1, d2));
    const WickComposition comp = compose_wick(b1, b2, fock);
    const std::string tag = statistics_name(stat);
    push(rep, std::string("wick_composition_") + tag, comp.max_difference,
         1e-10);
    push(rep, std::string("wick_adjoint_covariance_") + tag,
         max_abs(wick_quantize(b1.adjoint(), fock).matrix() -
                 Mat(wick_quantize(b1, fock).matrix().adjoint())),
         1e-13);
    const DGammaPowerReport pw =
        dGamma_power_expansion(random_complex_matrix(rng, m, m), 2, fock);
    push(rep, std::string("dgamma_power_split_") + tag,
         pw.max_entry_difference, 1e-10);
    push_flag(rep, std::string("dgamma_power_bound_") + tag, pw.within_bound);
  }

  // --- Trace duality in both directions -------------------------------------
  for (Statistics stat : {Statistics::bosonic, Statistics::fermionic}) {
    const unsigned m = stat == Statistics::bosonic ? 2 : 3;
    TruncatedFock fock(stat, m, 4, 0.3);
    const auto dim = static_cast<Eigen::Index>(fock.dim());
    Mat rho = Mat::Zero(dim, dim);
    for (int rep_i = 0; rep_i < 2; ++rep_i) {
      Vec psi = random_vec(rng, static_cast<unsigned>(fock.dim()));
      psi /= psi.norm();
      rho += 0.5 * psi * psi.adjoint();
    }
    const FockState state(fock, rho);
    double defect = 0.0;
    for (unsigned p = 1; p <= 2; ++p) {
      const ReducedDensityMatrix gamma = reduced_density_duality(state, p);
      const auto sdim =
          static_cast<Eigen::Index>(sector_dimension(stat, m, p));
      for (int trial = 0; trial < 3; ++trial) {
        const WickKernel b(stat, m, p, p,
                           random_complex_matrix(rng, int(sdim), int(sdim)));
        const cxd via_gamma = (gamma.matrix * b.matrix()).trace();
        const cxd via_fock =
            (state.density() * wick_quantize(b, fock).matrix()).trace();
        defect = std::max(defect, std::abs(via_gamma - via_fock));
      }
    }
    push(rep, std::string("trace_duality_") + statistics_name(stat), defect,
         1e-10);
  }

  // --- State constructions: Hermiticity and positivity ----------------------
  {
    GibbsSpec bose_spec;
    bose_spec.hamiltonian = random_hermitian(rng, 2, 1.0);
    bose_spec.beta = 1.0;
    bose_spec.mu = -1.5;  // below the spectrum floor: keeps ||C|| < 1
    const unsigned n_bose = bosonic_gibbs_n_max(bose_spec.c_matrix(), 1e-10);
    TruncatedFock bose(Statistics::bosonic, 2, n_bose, 0.2);
    const FockState gb = gibbs_state(bose_spec, bose);

    GibbsSpec fermi_spec;
    fermi_spec.hamiltonian = random_hermitian(rng, 4, 1.0);
    fermi_spec.beta = 1.2;
    fermi_spec.mu = 0.1;
    TruncatedFock fermi(Statistics::fermionic, 4, 4, 0.25);
    const FockState gf = gibbs_state(fermi_spec, fermi);

    double herm = 0.0, trace_defect = 0.0, min_eig = 0.0, gamma_herm = 0.0,
           gamma_min = 0.0;
    for (const FockState* st : {&gb, &gf}) {
      herm = std::max(herm, st->hermiticity_defect());
      trace_defect = std::max(trace_defect, st->trace_defect());
      min_eig = std::min(min_eig, st->min_eigenvalue());
      for (unsigned p = 1; p <= 2; ++p) {
        const ReducedDensityMatrix gamma = reduced_density(*st, p);
        gamma_herm = std::max(
            gamma_herm, max_abs(gamma.matrix - Mat(gamma.matrix.adjoint())));
        const HermEig eig = hermitian_eig(gamma.matrix);
        gamma_min = std::min(gamma_min, eig.values.minCoeff());
      }
    }
    push(rep, "state_hermiticity_defect", herm, 1e-12);
    push(rep, "state_trace_defect", trace_defect, 1e-12);
    push(rep, "state_min_eigenvalue", -min_eig, 1e-12);
    push(rep, "reduced_hermiticity_defect", gamma_herm, 1e-12);
    push(rep, "reduced_min_eigenvalue", -gamma_min, 1e-10);
  }

  // --- Transform round-trip --------------------------------------------------
  {
    std::vector<cxd> data(16), keep;
    for (cxd& x : data) x = cxd(rng.normal(), rng.normal());
    keep = data;
    dft_inplace(data, +1);
    dft_inplace(data, -1);
    double defect = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      defect = std::max(defect,
                        std::abs(data[i] / double(data.size()) - keep[i]));
    }
    push(rep, "dft_round_trip", defect, 1e-12);
  }

  // --- Determinism -----------------------------------------------------------
  {
    CounterRng r1(seed, 9), r2(seed, 9), r3(seed, 10);
    bool identical = true, distinct = false, in_range = true;
    for (int i = 0; i < 64; ++i) {
      const double a = r1.uniform(), b = r2.uniform(), c = r3.uniform();
      if (a != b) identical = false;
      if (a != c) distinct = true;
      if (!(a >= 0.0 && a < 1.0)) in_range = false;
    }
    push_flag(rep, "rng_stream_reproducible", identical);
    push_flag(rep, "rng_streams_distinct", distinct);
    push_flag(rep, "rng_uniform_in_range", in_range);

    CounterRng s1(seed, 11), s2(seed, 11);
    const Mat m1 = random_hermitian(s1, 6, 1.0);
    const Mat m2 = random_hermitian(s2, 6, 1.0);
    push_flag(rep, "matrix_bitwise_deterministic", m1 == m2);

    std::vector<ConvergenceRow> rows;
    for (int i = 1; i <= 4; ++i) {
      ConvergenceRow row;
      row.h = 1.0 / i;
      row.value = std::real(m1(i % 6, (i + 1) % 6));
      row.predicted = 0.0;
      row.abs_error = std::abs(row.value);
      row.rel_error = row.abs_error;
      rows.push_back(row);
    }
    push_flag(rep, "csv_bytes_deterministic",
              render_csv(rows) == render_csv(rows));
  }

  return rep;
}

}  // namespace fockbench
