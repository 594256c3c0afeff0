#include "fockbench/operators.hpp"

#include <cmath>

#include "fockbench/combinatorics.hpp"

namespace fockbench {

TruncatedFock::TruncatedFock(Statistics stat, unsigned m, unsigned n_max, double eps) {
  if (m < 1) throw ConfigError("TruncatedFock: need m >= 1");
  if (!(eps > 0.0)) throw ConfigError("TruncatedFock: eps must be positive");
  auto impl = std::make_shared<Impl>();
  impl->stat = stat;
  impl->modes = m;
  impl->n_max = (stat == Statistics::fermionic) ? std::min(n_max, m) : n_max;
  impl->eps = eps;
  impl->dim = 0;
  for (unsigned n = 0; n <= impl->n_max; ++n) {
    impl->offsets.push_back(impl->dim);
    impl->sectors.emplace_back(stat, m, n);
    impl->dim += impl->sectors.back().dim();
  }
  // Only the flat index layout is stored here; dense operators check their
  // own dim^2 budget when they are built.
  require_budget(impl->dim * sizeof(cxd), "TruncatedFock index layout");
  m_impl = std::move(impl);
}

const SectorBasis& TruncatedFock::sector(unsigned n) const {
  if (n > n_max()) throw ConfigError("TruncatedFock: sector beyond cutoff");
  return m_impl->sectors[n];
}

std::size_t TruncatedFock::sector_offset(unsigned n) const {
  if (n > n_max()) throw ConfigError("TruncatedFock: sector beyond cutoff");
  return m_impl->offsets[n];
}

std::size_t TruncatedFock::sector_dim(unsigned n) const { return sector(n).dim(); }

FockOperator::FockOperator(TruncatedFock space, Mat matrix)
    : m_space(std::move(space)), m_matrix(std::move(matrix)) {
  if (m_matrix.rows() != static_cast<Eigen::Index>(m_space.dim()) ||
      m_matrix.cols() != static_cast<Eigen::Index>(m_space.dim())) {
    throw ConfigError("FockOperator: matrix does not match the space dimension");
  }
}

FockOperator FockOperator::zero(const TruncatedFock& space) {
  return FockOperator(space, Mat::Zero(space.dim(), space.dim()));
}

FockOperator FockOperator::identity(const TruncatedFock& space) {
  return FockOperator(space, Mat::Identity(space.dim(), space.dim()));
}

std::vector<std::pair<unsigned, unsigned>> FockOperator::nonzero_blocks(double tol) const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned no = 0; no <= m_space.n_max(); ++no) {
    for (unsigned ni = 0; ni <= m_space.n_max(); ++ni) {
      double mx = m_matrix
                      .block(m_space.sector_offset(no), m_space.sector_offset(ni),
                             m_space.sector_dim(no), m_space.sector_dim(ni))
                      .cwiseAbs()
                      .maxCoeff();
      if (mx > tol) out.emplace_back(no, ni);
    }
  }
  return out;
}

namespace {

// Number of occupied modes strictly below k (fermionic ladder sign exponent).
int jordan_wigner_exponent(const std::vector<unsigned>& occ, unsigned k) {
  int count = 0;
  for (unsigned j = 0; j < k; ++j) count += static_cast<int>(occ[j]);
  return count;
}

void require_dense_budget(const TruncatedFock& space, const char* what) {
  require_budget(space.dim() * space.dim() * sizeof(cxd), what);
}

}  // namespace

FockOperator annihilation(const TruncatedFock& space, const Vec& f) {
  if (f.size() != static_cast<Eigen::Index>(space.modes())) {
    throw ConfigError("annihilation: vector dimension mismatch");
  }
  require_dense_budget(space, "annihilation operator");
  const double sqrt_eps = std::sqrt(space.eps());
  Mat m = Mat::Zero(space.dim(), space.dim());
  // a(f) = sum_k conj(f_k) a_k maps sector n to n-1.
  for (unsigned n = 1; n <= space.n_max(); ++n) {
    const SectorBasis& src = space.sector(n);
    const SectorBasis& dst = space.sector(n - 1);
    for (std::size_t i = 0; i < src.dim(); ++i) {
      std::vector<unsigned> occ = src.occupation(i);
      for (unsigned k = 0; k < space.modes(); ++k) {
        if (occ[k] == 0) continue;
        double amp = sqrt_eps * std::sqrt(static_cast<double>(occ[k]));
        if (space.statistics() == Statistics::fermionic &&
            jordan_wigner_exponent(occ, k) % 2 == 1) {
          amp = -amp;
        }
        occ[k] -= 1;
        std::size_t j = dst.index_of(occ);
        occ[k] += 1;
        m(space.state_index(n - 1, j), space.state_index(n, i)) += std::conj(f(k)) * amp;
      }
    }
  }
  return FockOperator(space, std::move(m));
}

FockOperator creation(const TruncatedFock& space, const Vec& f) {
  return annihilation(space, f).adjoint();
}

FockOperator dGamma(const TruncatedFock& space, const Mat& a) {
  const unsigned modes = space.modes();
  if (a.rows() != modes || a.cols() != modes) {
    throw ConfigError("dGamma: one-particle matrix dimension mismatch");
  }
  require_dense_budget(space, "dGamma operator");
  Mat m = Mat::Zero(space.dim(), space.dim());
  const double eps = space.eps();
  // dGamma(A) = sum_{k,l} A_{kl} a*_k a_l, block-diagonal.
  for (unsigned n = 1; n <= space.n_max(); ++n) {
    const SectorBasis& basis = space.sector(n);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      std::vector<unsigned> occ = basis.occupation(i);
      for (unsigned l = 0; l < modes; ++l) {
        if (occ[l] == 0) continue;
        double sign_l = 1.0;
        if (space.statistics() == Statistics::fermionic &&
            jordan_wigner_exponent(occ, l) % 2 == 1) {
          sign_l = -1.0;
        }
        double amp_l = std::sqrt(static_cast<double>(occ[l]));
        occ[l] -= 1;
        for (unsigned k = 0; k < modes; ++k) {
          if (a(k, l) == cxd(0.0, 0.0)) continue;
          if (space.statistics() == Statistics::fermionic && occ[k] == 1) continue;
          double sign_k = 1.0;
          if (space.statistics() == Statistics::fermionic &&
              jordan_wigner_exponent(occ, k) % 2 == 1) {
            sign_k = -1.0;
          }
          double amp_k = std::sqrt(static_cast<double>(occ[k] + 1));
          occ[k] += 1;
          std::size_t j = basis.index_of(occ);
          occ[k] -= 1;
          m(space.state_index(n, j), space.state_index(n, i)) +=
              eps * a(k, l) * amp_l * amp_k * sign_l * sign_k;
        }
        occ[l] += 1;
      }
    }
  }
  return FockOperator(space, std::move(m));
}

std::vector<Mat> gamma_sector_blocks(const TruncatedFock& space, const Mat& c) {
  const unsigned modes = space.modes();
  if (c.rows() != modes || c.cols() != modes) {
    throw ConfigError("Gamma: one-particle matrix dimension mismatch");
  }
  std::size_t total = 0;
  for (unsigned n = 0; n <= space.n_max(); ++n) {
    total += space.sector_dim(n) * space.sector_dim(n);
  }
  require_budget(total * sizeof(cxd), "Gamma sector blocks");
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Mat> blocks;
  blocks.reserve(space.n_max() + 1);
  blocks.push_back(Mat::Ones(1, 1));  // vacuum sector
  std::vector<std::size_t> lower;
  std::vector<double> weight;
  for (unsigned n = 1; n <= space.n_max(); ++n) {
    const SectorBasis& basis = space.sector(n);
    const SectorBasis& prev = space.sector(n - 1);
    const Mat& g_prev = blocks.back();
    const std::size_t dim = basis.dim();
    // One-particle peel cache: index of mu - delta_k one sector down, with
    // the bosonic sqrt(mu_k) or fermionic alternating-sign weight.
    lower.assign(dim * modes, kNone);
    weight.assign(dim * modes, 0.0);
    for (std::size_t row = 0; row < dim; ++row) {
      std::vector<unsigned> mu = basis.occupation(row);
      for (unsigned k = 0; k < modes; ++k) {
        if (mu[k] == 0) continue;
        double w;
        if (space.statistics() == Statistics::bosonic) {
          w = std::sqrt(static_cast<double>(mu[k]));
        } else {
          w = (jordan_wigner_exponent(mu, k) % 2 == 1) ? -1.0 : 1.0;
        }
        mu[k] -= 1;
        lower[row * modes + k] = prev.index_of(mu);
        mu[k] += 1;
        weight[row * modes + k] = w;
      }
    }
    Mat g = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
      // Peel one particle off the first occupied mode of the column state.
      const std::vector<unsigned>& nu = basis.occupation(col);
      unsigned l1 = 0;
      while (nu[l1] == 0) ++l1;
      const std::size_t col_prev = lower[col * modes + l1];
      const double inv_norm = 1.0 / weight[col * modes + l1];
      for (std::size_t row = 0; row < dim; ++row) {
        cxd acc(0.0, 0.0);
        for (unsigned k = 0; k < modes; ++k) {
          const std::size_t row_prev = lower[row * modes + k];
          if (row_prev == kNone) continue;
          if (c(k, l1) == cxd(0.0, 0.0)) continue;
          acc += c(k, l1) * weight[row * modes + k] *
                 g_prev(static_cast<Eigen::Index>(row_prev),
                        static_cast<Eigen::Index>(col_prev));
        }
        g(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = inv_norm * acc;
      }
    }
    blocks.push_back(std::move(g));
  }
  return blocks;
}

FockOperator Gamma(const TruncatedFock& space, const Mat& c) {
  require_dense_budget(space, "Gamma operator");
  std::vector<Mat> blocks = gamma_sector_blocks(space, c);
  Mat m = Mat::Zero(space.dim(), space.dim());
  for (unsigned n = 0; n <= space.n_max(); ++n) {
    m.block(space.sector_offset(n), space.sector_offset(n), space.sector_dim(n),
            space.sector_dim(n)) = blocks[n];
  }
  return FockOperator(space, std::move(m));
}

FockOperator number_operator(const TruncatedFock& space) {
  require_dense_budget(space, "number operator");
  Mat m = Mat::Zero(space.dim(), space.dim());
  for (unsigned n = 0; n <= space.n_max(); ++n) {
    for (std::size_t i = 0; i < space.sector_dim(n); ++i) {
      m(space.state_index(n, i), space.state_index(n, i)) = space.eps() * n;
    }
  }
  return FockOperator(space, std::move(m));
}

FieldWeyl field_and_weyl(const TruncatedFock& space, const Vec& f) {
  if (space.statistics() != Statistics::bosonic) {
    throw ConfigError("field_and_weyl: bosonic statistics required");
  }
  FockOperator a_op = annihilation(space, f);
  Mat phi = (a_op.matrix() + a_op.matrix().adjoint()) / std::sqrt(2.0);
  Mat w = expm(cxd(0.0, 1.0) * phi);
  double defect = (w.adjoint() * w - Mat::Identity(space.dim(), space.dim()))
                      .cwiseAbs()
                      .maxCoeff();
  return {FockOperator(space, std::move(phi)), FockOperator(space, std::move(w)), defect};
}

FockOperator exp_dGamma(const TruncatedFock& space, const Mat& a, cxd s) {
  const unsigned modes = space.modes();
  if (a.rows() != modes || a.cols() != modes) {
    throw ConfigError("exp_dGamma: one-particle matrix dimension mismatch");
  }
  Mat b = expm((space.eps() * s) * a);
  return Gamma(space, b);
}

}  // namespace fockbench
