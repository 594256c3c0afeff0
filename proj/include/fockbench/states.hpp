#pragma once

#include <optional>
#include <vector>

#include "fockbench/wick.hpp"

namespace fockbench {

// A density matrix on a TruncatedFock, normalized to unit trace.
// Construction enforces Hermiticity and unit trace at the 1e-12 level;
// positivity is exposed as a diagnostic (min_eigenvalue), computed
// structure-aware: pure states are nonnegative by construction and
// block-diagonal states are diagonalized sector by sector.
class FockState {
 public:
  FockState(TruncatedFock space, Mat rho);
  static FockState pure(const TruncatedFock& space, const Vec& psi);

  const TruncatedFock& space() const { return m_space; }
  const Mat& density() const { return m_rho; }
  double eps() const { return m_space.eps(); }
  Statistics statistics() const { return m_space.statistics(); }

  // Mass sitting in the top retained sector.
  double leakage() const;
  double trace_defect() const;
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  bool is_pure() const { return m_pure; }

  // Per-sector masses Tr[rho|_n], n = 0..n_max.
  std::vector<double> sector_masses() const;
  // Tr[rho e^{cN}] (N the scaled number operator).
  double exponential_moment(double c) const;
  // Tr[rho N^alpha].
  double number_moment(unsigned alpha) const;

  // Largest c with a certified uniform exponential moment, used as the
  // radius guard of the generating functions.
  double moment_constant() const { return m_moment_constant; }
  void set_moment_constant(double c);

  // Quasi-free tag: state is Gamma(C)/Tr[Gamma(C)] for this C.
  bool is_quasifree() const { return m_quasifree.has_value(); }
  const Mat& quasifree_c() const;
  void tag_quasifree(Mat c);

 private:
  TruncatedFock m_space;
  Mat m_rho;
  bool m_pure = false;
  double m_moment_constant = 1.0;
  std::optional<Mat> m_quasifree;
};

// Coherent state over the truncation, built two independent ways: the
// normalized occupation series fixed by the ladder eigenvector relation, and
// the displacement exponential applied to the vacuum. The discrepancy
// between the two constructions is reported, as is the eigenvector defect
// ||a(e_k) psi - z_k psi|| restricted below the top sector.
struct CoherentReport {
  FockState state;
  double construction_discrepancy;
  double eigenvector_defect;
};
CoherentReport coherent_state(const Vec& z, const TruncatedFock& fock);
// Smallest admissible cutoff for amplitude |z|^2 at scaling eps
// (Poisson-tail guard eps*N >= |z|^2 + 8 sqrt(|z|^2 eps)).
unsigned coherent_required_n_max(double z_norm_sq, double eps);

// Quasi-free Gibbs data: C = exp(-beta (H - mu)).
struct GibbsSpec {
  Mat hamiltonian;
  double beta = 1.0;
  double mu = 0.0;
  Mat c_matrix() const;
};
FockState gibbs_state(const GibbsSpec& spec, const TruncatedFock& fock);
// Cutoff making the neglected bosonic tail of Tr[Gamma(C)] smaller than
// tail_tol (geometric bound through ||C||).
unsigned bosonic_gibbs_n_max(const Mat& c, double tail_tol);

// Closed form for Tr[Gamma(C)]: bosonic 1/det(I-C) (requires ||C|| < 1),
// fermionic det(I+C). Valid for non-self-adjoint C, hence complex-valued.
cxd quasifree_trace(const Mat& c, Statistics stat);
struct QuasifreeTraceCheck {
  cxd closed_form;
  cxd sector_sum;
  double rel_error;
  unsigned n_used;
};
// Cross-check of the closed form against the direct sector sum up to n_max.
QuasifreeTraceCheck quasifree_trace_check(const Mat& c, Statistics stat,
                                          unsigned n_max);

// Order-p reduced density matrix on the occupation basis of the p-particle
// sector, defined by trace duality against the occupation kernels:
// entry (B, A) = Tr[rho (|e_A><e_B|)^Wick], so that
// Tr[gamma b] = Tr[rho b^Wick] for every p -> p kernel b.
struct ReducedDensityMatrix {
  unsigned p = 0;
  Mat matrix;
  double trace = 0.0;
  bool normalized = false;
};
ReducedDensityMatrix reduced_density(const FockState& rho, unsigned p);
// The duality definition, regardless of any quasi-free tag.
ReducedDensityMatrix reduced_density_duality(const FockState& rho, unsigned p);
// Closed form p! eps^p * compress((C(1 -+ C)^{-1})^{(x)p}) for tagged states.
ReducedDensityMatrix reduced_density_quasifree(const FockState& rho, unsigned p);
// Normalizer Tr[rho N(N-eps)...(N-eps(p-1))]; equals Tr[gamma^(p)] exactly.
double number_factorial_moment(const FockState& rho, unsigned p);
ReducedDensityMatrix normalized_reduced(const FockState& rho, unsigned p);

// Generating functions s -> Tr[rho e^{s dGamma(A)}], evaluated through the
// sector recursion for Gamma(e^{eps s A}); guarded by |s|*||A|| <=
// moment_constant of the state. Psi is the same functional for a finite-rank
// kernel K; both names are kept for the two roles they play in scenarios.
cxd generating_Phi(const FockState& rho, const Mat& a, cxd s);
cxd generating_Psi(const FockState& rho, const Mat& k, cxd s);
// Derivatives d^j/ds^j at s = 0 for j = 0..orders, via an equispaced
// Cauchy contour of the given radius (trapezoid rule, `nodes` points).
std::vector<cxd> generating_taylor(const FockState& rho, const Mat& a,
                                   unsigned orders, double radius,
                                   unsigned nodes = 64);

// Fermionic domination: Tr[rho K^Wick] <= eps^p Tr[K] for PSD p -> p kernels.
struct FermionicWickBoundReport {
  double value;
  double bound;
  bool holds;
};
FermionicWickBoundReport fermionic_wick_bound(const FockState& rho,
                                              const WickKernel& kernel);

// Number-moment table for a family of states against reference moments
// (reference_moments[alpha] = the target integral for that alpha).
struct PiMomentsRow {
  double eps;
  unsigned alpha;
  double moment;
  double reference;
  double abs_error;
};
std::vector<PiMomentsRow> pi_moments(const std::vector<FockState>& family,
                                     unsigned alpha_max,
                                     const std::vector<double>& reference_moments);

}  // namespace fockbench
