#include "fockbench/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fockbench/combinatorics.hpp"

namespace fockbench {

namespace {

constexpr double kUnit = 1.0;

double falling_double(unsigned n, unsigned p) {
  double r = 1.0;
  for (unsigned i = 0; i < p; ++i) r *= static_cast<double>(n - i);
  return r;
}

}  // namespace

FockState::FockState(TruncatedFock space, Mat rho)
    : m_space(std::move(space)), m_rho(std::move(rho)) {
  const auto dim = static_cast<Eigen::Index>(m_space.dim());
  if (m_rho.rows() != dim || m_rho.cols() != dim) {
    throw ConfigError("FockState: density matrix does not match the space");
  }
  require_budget(m_space.dim() * m_space.dim() * sizeof(cxd), "FockState density");
  const double tr_defect = std::abs(m_rho.trace() - cxd(kUnit, 0.0));
  if (tr_defect > 1e-12) {
    std::ostringstream os;
    os << "FockState: trace must be 1 (defect " << tr_defect << ")";
    throw ConfigError(os.str());
  }
}

FockState FockState::pure(const TruncatedFock& space, const Vec& psi) {
  if (psi.size() != static_cast<Eigen::Index>(space.dim())) {
    throw ConfigError("FockState::pure: vector does not match the space");
  }
  const double nrm = psi.norm();
  if (nrm < 1e-300) throw ConfigError("FockState::pure: zero vector");
  Vec unit = psi / nrm;
  FockState out(space, unit * unit.adjoint());
  out.m_pure = true;
  return out;
}

double FockState::leakage() const {
  const unsigned top = m_space.n_max();
  return m_rho
      .block(m_space.sector_offset(top), m_space.sector_offset(top),
             m_space.sector_dim(top), m_space.sector_dim(top))
      .trace()
      .real();
}

double FockState::trace_defect() const {
  return std::abs(m_rho.trace() - cxd(kUnit, 0.0));
}

double FockState::hermiticity_defect() const {
  return (m_rho - m_rho.adjoint()).cwiseAbs().maxCoeff();
}

double FockState::min_eigenvalue() const {
  if (m_pure) return 0.0;  // psi psi^dagger is nonnegative by construction
  // Block-diagonal states are diagnosed sector by sector.
  bool block_diagonal = true;
  for (unsigned no = 0; no <= m_space.n_max() && block_diagonal; ++no) {
    for (unsigned ni = 0; ni <= m_space.n_max(); ++ni) {
      if (no == ni) continue;
      double mx = m_rho
                      .block(m_space.sector_offset(no), m_space.sector_offset(ni),
                             m_space.sector_dim(no), m_space.sector_dim(ni))
                      .cwiseAbs()
                      .maxCoeff();
      if (mx > 1e-14) {
        block_diagonal = false;
        break;
      }
    }
  }
  double min_eig = std::numeric_limits<double>::infinity();
  if (block_diagonal) {
    for (unsigned n = 0; n <= m_space.n_max(); ++n) {
      Mat blk = m_rho.block(m_space.sector_offset(n), m_space.sector_offset(n),
                            m_space.sector_dim(n), m_space.sector_dim(n));
      Mat herm = 0.5 * (blk + blk.adjoint());
      min_eig = std::min(min_eig, hermitian_eig(herm).values.minCoeff());
    }
    return min_eig;
  }
  if (m_space.dim() > 2048) {
    throw ResourceError("FockState::min_eigenvalue: dense diagnostic too large");
  }
  Mat herm = 0.5 * (m_rho + m_rho.adjoint());
  return hermitian_eig(herm).values.minCoeff();
}

std::vector<double> FockState::sector_masses() const {
  std::vector<double> masses(m_space.n_max() + 1);
  for (unsigned n = 0; n <= m_space.n_max(); ++n) {
    masses[n] = m_rho
                    .block(m_space.sector_offset(n), m_space.sector_offset(n),
                           m_space.sector_dim(n), m_space.sector_dim(n))
                    .trace()
                    .real();
  }
  return masses;
}

double FockState::exponential_moment(double c) const {
  std::vector<double> masses = sector_masses();
  double sum = 0.0;
  for (unsigned n = 0; n <= m_space.n_max(); ++n) {
    sum += masses[n] * std::exp(c * m_space.eps() * n);
  }
  return sum;
}

double FockState::number_moment(unsigned alpha) const {
  std::vector<double> masses = sector_masses();
  double sum = 0.0;
  for (unsigned n = 0; n <= m_space.n_max(); ++n) {
    sum += masses[n] * std::pow(m_space.eps() * n, static_cast<double>(alpha));
  }
  return sum;
}

void FockState::set_moment_constant(double c) {
  if (!(c > 0.0)) throw ConfigError("FockState: moment constant must be positive");
  m_moment_constant = c;
}

const Mat& FockState::quasifree_c() const {
  if (!m_quasifree) throw ConfigError("FockState: state carries no quasi-free tag");
  return *m_quasifree;
}

void FockState::tag_quasifree(Mat c) {
  if (c.rows() != static_cast<Eigen::Index>(m_space.modes()) || c.rows() != c.cols()) {
    throw ConfigError("FockState: quasi-free tag must be modes x modes");
  }
  m_quasifree = std::move(c);
}

unsigned coherent_required_n_max(double z_norm_sq, double eps) {
  const double needed = (z_norm_sq + 8.0 * std::sqrt(z_norm_sq * eps)) / eps;
  return static_cast<unsigned>(std::ceil(needed));
}

CoherentReport coherent_state(const Vec& z, const TruncatedFock& fock) {
  if (fock.statistics() != Statistics::bosonic) {
    throw ConfigError("coherent_state: bosonic space required");
  }
  if (z.size() != static_cast<Eigen::Index>(fock.modes())) {
    throw ConfigError("coherent_state: amplitude dimension mismatch");
  }
  const double eps = fock.eps();
  const double z2 = z.squaredNorm();
  if (eps * fock.n_max() < z2 + 8.0 * std::sqrt(z2 * eps)) {
    std::ostringstream os;
    os << "coherent_state: occupation tail not captured; need n_max >= "
       << coherent_required_n_max(z2, eps) << " (got " << fock.n_max() << ")";
    throw ConfigError(os.str());
  }

  // Occupation series in log space: |<mu|E_z>| can involve |z_k/sqrt(eps)|^n
  // far beyond double range before the factorial pulls it back.
  Vec series = Vec::Zero(fock.dim());
  const double log_norm = -z2 / (2.0 * eps);
  for (unsigned n = 0; n <= fock.n_max(); ++n) {
    const SectorBasis& basis = fock.sector(n);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      const std::vector<unsigned>& mu = basis.occupation(i);
      double log_mag = log_norm;
      double phase = 0.0;
      bool zero = false;
      for (unsigned k = 0; k < fock.modes(); ++k) {
        if (mu[k] == 0) continue;
        const double zk_abs = std::abs(z(k));
        if (zk_abs == 0.0) {
          zero = true;
          break;
        }
        log_mag += mu[k] * (std::log(zk_abs) - 0.5 * std::log(eps)) -
                   0.5 * log_factorial(mu[k]);
        phase += mu[k] * std::arg(z(k));
      }
      if (zero) continue;
      series(static_cast<Eigen::Index>(fock.state_index(n, i))) =
          std::exp(log_mag) * cxd(std::cos(phase), std::sin(phase));
    }
  }

  // Displacement path: exp((a*(z) - a(z))/eps) applied to the vacuum. The
  // generator acts sector by sector through the ladder amplitudes, so the
  // exponential is a segmented Taylor sum of sparse applications; no dim^2
  // matrix is ever formed.
  const auto apply_generator = [&](const Vec& v) {
    Vec out = Vec::Zero(fock.dim());
    for (unsigned n = 0; n <= fock.n_max(); ++n) {
      const SectorBasis& basis = fock.sector(n);
      std::vector<unsigned> scratch(fock.modes());
      for (std::size_t i = 0; i < basis.dim(); ++i) {
        const cxd amp = v(static_cast<Eigen::Index>(fock.state_index(n, i)));
        if (amp == cxd(0.0, 0.0)) continue;
        const std::vector<unsigned>& mu = basis.occupation(i);
        for (unsigned k = 0; k < fock.modes(); ++k) {
          if (n < fock.n_max()) {
            scratch = mu;
            scratch[k] += 1;
            const SectorBasis& up = fock.sector(n + 1);
            out(static_cast<Eigen::Index>(
                fock.state_index(n + 1, up.index_of(scratch)))) +=
                (z(k) / std::sqrt(eps)) * std::sqrt(double(mu[k] + 1)) * amp;
          }
          if (mu[k] > 0) {
            scratch = mu;
            scratch[k] -= 1;
            const SectorBasis& down = fock.sector(n - 1);
            out(static_cast<Eigen::Index>(
                fock.state_index(n - 1, down.index_of(scratch)))) -=
                (std::conj(z(k)) / std::sqrt(eps)) * std::sqrt(double(mu[k])) *
                amp;
          }
        }
      }
    }
    return out;
  };
  Vec displaced = Vec::Zero(fock.dim());
  displaced(0) = 1.0;
  {
    const double gen_norm_bound =
        2.0 * std::sqrt(z2 * double(fock.n_max() + 1) / eps);
    const int segments = std::max(1, int(std::ceil(gen_norm_bound / 2.0)));
    for (int s = 0; s < segments; ++s) {
      Vec acc = displaced;
      Vec term = displaced;
      for (int t = 1; t <= 256; ++t) {
        term = apply_generator(term) / double(segments * t);
        acc += term;
        if (term.norm() <= 1e-18 * acc.norm()) break;
      }
      displaced = acc;
    }
  }
  const double discrepancy = (series - displaced).norm();

  Vec psi = series / series.norm();
  FockState state = FockState::pure(fock, psi);

  // Ladder eigenvector relation below the top sector: exact up to rounding.
  double defect = 0.0;
  const std::size_t safe_dim = fock.sector_offset(fock.n_max());
  for (unsigned k = 0; k < fock.modes(); ++k) {
    Vec residual = -z(k) * psi;
    for (unsigned n = 1; n <= fock.n_max(); ++n) {
      const SectorBasis& basis = fock.sector(n);
      std::vector<unsigned> scratch(fock.modes());
      for (std::size_t i = 0; i < basis.dim(); ++i) {
        const std::vector<unsigned>& mu = basis.occupation(i);
        if (mu[k] == 0) continue;
        scratch = mu;
        scratch[k] -= 1;
        const SectorBasis& down = fock.sector(n - 1);
        residual(static_cast<Eigen::Index>(
            fock.state_index(n - 1, down.index_of(scratch)))) +=
            std::sqrt(eps * double(mu[k])) *
            psi(static_cast<Eigen::Index>(fock.state_index(n, i)));
      }
    }
    defect = std::max(
        defect, residual.head(static_cast<Eigen::Index>(safe_dim)).norm());
  }
  return {std::move(state), discrepancy, defect};
}

Mat GibbsSpec::c_matrix() const {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() < 1) {
    throw ConfigError("GibbsSpec: Hamiltonian must be square");
  }
  if (!(beta > 0.0)) throw ConfigError("GibbsSpec: beta must be positive");
  Mat shifted = hamiltonian - mu * Mat::Identity(hamiltonian.rows(), hamiltonian.cols());
  return expm(-beta * shifted);
}

unsigned bosonic_gibbs_n_max(const Mat& c, double tail_tol) {
  if (!(tail_tol > 0.0)) throw ConfigError("bosonic_gibbs_n_max: tolerance must be positive");
  const double nrm = operator_norm(c);
  if (nrm >= 1.0) {
    throw ConfigError("bosonic_gibbs_n_max: need ||C|| < 1 for a summable tail");
  }
  const unsigned m = static_cast<unsigned>(c.rows());
  // Term bound t_n = dim(sector n) * ||C||^n; once the term ratio
  // q_n = ||C|| (n+m)/(n+1) drops below 1 the tail is geometrically bounded.
  double t = 1.0;
  for (unsigned n = 0; n < 1000000; ++n) {
    const double q = nrm * (static_cast<double>(n + m) / static_cast<double>(n + 1));
    const double t_next = t * q;
    if (q < 1.0 && t_next / (1.0 - q) < tail_tol) return n;
    t = t_next;
  }
  throw ResourceError("bosonic_gibbs_n_max: tail does not certify below the tolerance");
}

FockState gibbs_state(const GibbsSpec& spec, const TruncatedFock& fock) {
  Mat c = spec.c_matrix();
  if (c.rows() != static_cast<Eigen::Index>(fock.modes())) {
    throw ConfigError("gibbs_state: Hamiltonian does not match the space modes");
  }
  if (fock.statistics() == Statistics::bosonic && operator_norm(c) >= 1.0) {
    throw ConfigError("gibbs_state: bosonic Gibbs needs ||e^{-beta(H-mu)}|| < 1 (mu below the spectrum)");
  }
  require_budget(fock.dim() * fock.dim() * sizeof(cxd), "Gibbs density");
  std::vector<Mat> blocks = gamma_sector_blocks(fock, c);
  double z_sum = 0.0;
  for (const Mat& b : blocks) z_sum += b.trace().real();
  Mat rho = Mat::Zero(fock.dim(), fock.dim());
  for (unsigned n = 0; n <= fock.n_max(); ++n) {
    rho.block(fock.sector_offset(n), fock.sector_offset(n), fock.sector_dim(n),
              fock.sector_dim(n)) = blocks[n] / z_sum;
  }
  // Renormalize exactly on the truncation.
  rho /= rho.trace().real();
  FockState state(fock, std::move(rho));
  state.tag_quasifree(c);
  if (fock.statistics() == Statistics::bosonic) {
    state.set_moment_constant(-0.5 * std::log(operator_norm(c)));
  }
  return state;
}

cxd quasifree_trace(const Mat& c, Statistics stat) {
  if (c.rows() != c.cols() || c.rows() < 1) {
    throw ConfigError("quasifree_trace: square matrix required");
  }
  Mat id = Mat::Identity(c.rows(), c.cols());
  if (stat == Statistics::bosonic) {
    if (operator_norm(c) >= 1.0) {
      throw ConfigError("quasifree_trace: bosonic closed form needs ||C|| < 1");
    }
    return cxd(1.0, 0.0) / det(id - c);
  }
  return det(id + c);
}

QuasifreeTraceCheck quasifree_trace_check(const Mat& c, Statistics stat,
                                          unsigned n_max) {
  cxd closed = quasifree_trace(c, stat);
  TruncatedFock space(stat, static_cast<unsigned>(c.rows()), n_max, 1.0);
  std::vector<Mat> blocks = gamma_sector_blocks(space, c);
  cxd sum(0.0, 0.0);
  for (const Mat& b : blocks) sum += b.trace();
  const double rel = std::abs(closed - sum) / std::abs(closed);
  return {closed, sum, rel, space.n_max()};
}

ReducedDensityMatrix reduced_density_duality(const FockState& rho, unsigned p) {
  const TruncatedFock& space = rho.space();
  if (p > space.n_max()) throw ConfigError("reduced_density: p exceeds the cutoff");
  const SectorBasis& kernel_basis = space.sector(p);
  const std::size_t dim_p = kernel_basis.dim();
  const unsigned modes = space.modes();
  Mat gamma = Mat::Zero(static_cast<Eigen::Index>(dim_p), static_cast<Eigen::Index>(dim_p));
  std::vector<unsigned> scratch(modes);
  const Mat& density = rho.density();
  for (unsigned s = p; s <= space.n_max(); ++s) {
    const SectorBasis& sector = space.sector(s);
    for (std::size_t i = 0; i < sector.dim(); ++i) {
      const std::vector<unsigned>& mu = sector.occupation(i);
      const std::size_t row_flat = space.state_index(s, i);
      for (std::size_t b_idx = 0; b_idx < dim_p; ++b_idx) {
        const std::vector<unsigned>& b_occ = kernel_basis.occupation(b_idx);
        bool contained = true;
        for (unsigned k = 0; k < modes; ++k) {
          if (b_occ[k] > mu[k]) {
            contained = false;
            break;
          }
        }
        if (!contained) continue;
        for (std::size_t a_idx = 0; a_idx < dim_p; ++a_idx) {
          const double amp = wick_monomial_amplitude(
              space.statistics(), space.eps(), mu,
              kernel_basis.occupation(a_idx), b_occ, scratch);
          if (amp == 0.0) continue;
          const std::size_t col_flat =
              space.state_index(s, sector.index_of(scratch));
          gamma(static_cast<Eigen::Index>(b_idx), static_cast<Eigen::Index>(a_idx)) +=
              amp * density(static_cast<Eigen::Index>(row_flat),
                            static_cast<Eigen::Index>(col_flat));
        }
      }
    }
  }
  ReducedDensityMatrix out;
  out.p = p;
  out.trace = gamma.trace().real();
  out.matrix = std::move(gamma);
  out.normalized = false;
  return out;
}

ReducedDensityMatrix reduced_density_quasifree(const FockState& rho, unsigned p) {
  const TruncatedFock& space = rho.space();
  const Mat& c = rho.quasifree_c();
  Mat id = Mat::Identity(c.rows(), c.cols());
  Mat denom = (space.statistics() == Statistics::bosonic) ? Mat(id - c) : Mat(id + c);
  Mat gtil = denom.partialPivLu().solve(Mat(c));  // (1 -+ C)^{-1} C = C (1 -+ C)^{-1}
  WickKernel powers = WickKernel::tensor_power(space.statistics(), gtil, p);
  const double weight = static_cast<double>(factorial_u64(p)) *
                        std::pow(space.eps(), static_cast<double>(p));
  ReducedDensityMatrix out;
  out.p = p;
  out.matrix = weight * powers.matrix();
  out.trace = out.matrix.trace().real();
  out.normalized = false;
  return out;
}

ReducedDensityMatrix reduced_density(const FockState& rho, unsigned p) {
  if (rho.is_quasifree()) return reduced_density_quasifree(rho, p);
  return reduced_density_duality(rho, p);
}

double number_factorial_moment(const FockState& rho, unsigned p) {
  const TruncatedFock& space = rho.space();
  std::vector<double> masses = rho.sector_masses();
  double sum = 0.0;
  for (unsigned n = p; n <= space.n_max(); ++n) {
    sum += masses[n] * std::pow(space.eps(), static_cast<double>(p)) *
           falling_double(n, p);
  }
  return sum;
}

ReducedDensityMatrix normalized_reduced(const FockState& rho, unsigned p) {
  const double normalizer = number_factorial_moment(rho, p);
  if (normalizer <= 1e-14) {
    throw ConfigError("normalized_reduced: normalizer Tr[rho N(N-eps)...] vanishes");
  }
  ReducedDensityMatrix gamma = reduced_density(rho, p);
  gamma.matrix /= gamma.matrix.trace().real();
  gamma.trace = 1.0;
  gamma.normalized = true;
  return gamma;
}

namespace {

cxd sector_trace_pairing(const FockState& rho, const std::vector<Mat>& blocks) {
  const TruncatedFock& space = rho.space();
  cxd sum(0.0, 0.0);
  for (unsigned n = 0; n <= space.n_max(); ++n) {
    const Mat rho_blk = rho.density().block(space.sector_offset(n), space.sector_offset(n),
                                            space.sector_dim(n), space.sector_dim(n));
    sum += (rho_blk.transpose().cwiseProduct(blocks[n])).sum();
  }
  return sum;
}

}  // namespace

cxd generating_Phi(const FockState& rho, const Mat& a, cxd s) {
  const TruncatedFock& space = rho.space();
  if (a.rows() != static_cast<Eigen::Index>(space.modes()) || a.rows() != a.cols()) {
    throw ConfigError("generating_Phi: matrix must be modes x modes");
  }
  const double reach = std::abs(s) * operator_norm(a);
  if (reach > rho.moment_constant() + 1e-12) {
    std::ostringstream os;
    os << "generating_Phi: |s| ||A|| = " << reach
       << " exceeds the certified moment radius " << rho.moment_constant();
    throw ConfigError(os.str());
  }
  Mat b = expm((space.eps() * s) * a);
  std::vector<Mat> blocks = gamma_sector_blocks(space, b);
  return sector_trace_pairing(rho, blocks);
}

cxd generating_Psi(const FockState& rho, const Mat& k, cxd s) {
  return generating_Phi(rho, k, s);
}

std::vector<cxd> generating_taylor(const FockState& rho, const Mat& a,
                                   unsigned orders, double radius,
                                   unsigned nodes) {
  if (!(radius > 0.0)) throw ConfigError("generating_taylor: radius must be positive");
  if (nodes < 2 * (orders + 1)) {
    throw ConfigError("generating_taylor: too few contour nodes for the requested order");
  }
  std::vector<cxd> values(nodes);
  for (unsigned t = 0; t < nodes; ++t) {
    const double theta = 2.0 * M_PI * t / nodes;
    values[t] = generating_Phi(rho, a, radius * cxd(std::cos(theta), std::sin(theta)));
  }
  std::vector<cxd> derivatives(orders + 1);
  for (unsigned j = 0; j <= orders; ++j) {
    cxd acc(0.0, 0.0);
    for (unsigned t = 0; t < nodes; ++t) {
      const double theta = 2.0 * M_PI * t / nodes;
      acc += values[t] * cxd(std::cos(j * theta), -std::sin(j * theta));
    }
    derivatives[j] = acc * static_cast<double>(factorial_u64(j)) /
                     (static_cast<double>(nodes) * std::pow(radius, static_cast<double>(j)));
  }
  return derivatives;
}

FermionicWickBoundReport fermionic_wick_bound(const FockState& rho,
                                              const WickKernel& kernel) {
  if (rho.statistics() != Statistics::fermionic) {
    throw ConfigError("fermionic_wick_bound: fermionic state required");
  }
  if (kernel.p() != kernel.q()) {
    throw ConfigError("fermionic_wick_bound: kernel must map p -> p");
  }
  FockOperator w = wick_quantize(kernel, rho.space());
  const double value =
      (rho.density().transpose().cwiseProduct(w.matrix())).sum().real();
  const double bound = std::pow(rho.eps(), static_cast<double>(kernel.p())) *
                       kernel.matrix().trace().real();
  return {value, bound, value <= bound + 1e-12};
}

std::vector<PiMomentsRow> pi_moments(const std::vector<FockState>& family,
                                     unsigned alpha_max,
                                     const std::vector<double>& reference_moments) {
  if (reference_moments.size() < alpha_max + 1) {
    throw ConfigError("pi_moments: reference moments must cover alpha = 0..alpha_max");
  }
  std::vector<PiMomentsRow> rows;
  rows.reserve(family.size() * (alpha_max + 1));
  for (const FockState& state : family) {
    for (unsigned alpha = 0; alpha <= alpha_max; ++alpha) {
      const double moment = state.number_moment(alpha);
      const double ref = reference_moments[alpha];
      rows.push_back({state.eps(), alpha, moment, ref, std::abs(moment - ref)});
    }
  }
  return rows;
}

}  // namespace fockbench
