#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "fockbench/fock_core.hpp"

namespace fockbench {

// Grand-canonical truncation of Fock space: the direct sum of the sectors
// n = 0 .. n_max over m modes, with the scaling parameter eps stored per
// instance (never globally). For fermions sectors above m are empty, so the
// effective cutoff is min(n_max, m).
class TruncatedFock {
 public:
  TruncatedFock(Statistics stat, unsigned m, unsigned n_max, double eps);

  Statistics statistics() const { return m_impl->stat; }
  unsigned modes() const { return m_impl->modes; }
  unsigned n_max() const { return m_impl->n_max; }
  double eps() const { return m_impl->eps; }
  std::size_t dim() const { return m_impl->dim; }

  const SectorBasis& sector(unsigned n) const;
  std::size_t sector_offset(unsigned n) const;
  std::size_t sector_dim(unsigned n) const;

  // Flat index of an occupation state.
  std::size_t state_index(unsigned n, std::size_t i) const { return sector_offset(n) + i; }

  bool same_space(const TruncatedFock& other) const { return m_impl == other.m_impl; }

 private:
  struct Impl {
    Statistics stat;
    unsigned modes;
    unsigned n_max;
    double eps;
    std::size_t dim;
    std::vector<SectorBasis> sectors;
    std::vector<std::size_t> offsets;
  };
  std::shared_ptr<const Impl> m_impl;
};

// Dense operator on a TruncatedFock, with block metadata by particle number.
class FockOperator {
 public:
  FockOperator(TruncatedFock space, Mat matrix);
  static FockOperator zero(const TruncatedFock& space);
  static FockOperator identity(const TruncatedFock& space);

  const TruncatedFock& space() const { return m_space; }
  const Mat& matrix() const { return m_matrix; }
  Mat& matrix() { return m_matrix; }

  FockOperator adjoint() const { return FockOperator(m_space, m_matrix.adjoint()); }

  // Blocks (n_out, n_in) whose max entry magnitude exceeds tol; consistent
  // with the dense content at the 1e-14 level by construction.
  std::vector<std::pair<unsigned, unsigned>> nonzero_blocks(double tol = 1e-14) const;

 private:
  TruncatedFock m_space;
  Mat m_matrix;
};

// a(f): annihilates along f, anti-linear in f; sector n -> n-1.
FockOperator annihilation(const TruncatedFock& space, const Vec& f);
// a*(f) = annihilation(f)^dagger, linear in f; sector n -> n+1.
FockOperator creation(const TruncatedFock& space, const Vec& f);

// dGamma(A): second quantization of a one-particle operator; block-diagonal,
// equals eps * sum over slots of A on each sector.
FockOperator dGamma(const TruncatedFock& space, const Mat& a);

// Gamma(C) = C^{(x) n} on sector n, assembled by a one-mode-at-a-time
// recursion (cost sum_n dim_n^2 * m, no tensor blowup). Valid for arbitrary
// complex C.
FockOperator Gamma(const TruncatedFock& space, const Mat& c);
// The per-sector blocks of Gamma(C), sectors 0..n_max.
std::vector<Mat> gamma_sector_blocks(const TruncatedFock& space, const Mat& c);

// Scaled number operator N = dGamma(Id): diagonal, eps*n on sector n.
FockOperator number_operator(const TruncatedFock& space);

struct FieldWeyl {
  FockOperator field;      // Phi(f) = (a(f) + a*(f))/sqrt(2)
  FockOperator weyl;       // W(f) = exp(i Phi(f))
  double unitarity_defect; // max entry of |W^dagger W - Id|, truncation leakage
};
// Bosonic only.
FieldWeyl field_and_weyl(const TruncatedFock& space, const Vec& f);

// e^{s dGamma(A)} computed as Gamma(e^{eps s A}); valid for non-normal A.
FockOperator exp_dGamma(const TruncatedFock& space, const Mat& a, cxd s);

}  // namespace fockbench
