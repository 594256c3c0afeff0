#include "fockbench/wick.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "fockbench/combinatorics.hpp"

namespace fockbench {

namespace {

std::uint64_t falling_u64(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = checked_mul_u64(r, n - i);
  return r;
}

unsigned occupation_total(const std::vector<unsigned>& occ) {
  unsigned s = 0;
  for (unsigned v : occ) s += v;
  return s;
}

int jw_exponent(const std::vector<unsigned>& occ, unsigned k) {
  int count = 0;
  for (unsigned j = 0; j < k; ++j) count += static_cast<int>(occ[j]);
  return count;
}

}  // namespace

WickKernel::WickKernel(Statistics stat, unsigned m, unsigned p, unsigned q, Mat matrix)
    : m_stat(stat), m_modes(m), m_p(p), m_q(q), m_matrix(std::move(matrix)) {
  if (m < 1) throw ConfigError("WickKernel: need m >= 1");
  const auto rows = static_cast<Eigen::Index>(sector_dimension(stat, m, q));
  const auto cols = static_cast<Eigen::Index>(sector_dimension(stat, m, p));
  if (m_matrix.rows() != rows || m_matrix.cols() != cols) {
    throw ConfigError("WickKernel: matrix must be sector_dimension(q) x sector_dimension(p)");
  }
}

WickKernel WickKernel::scalar(Statistics stat, unsigned m, cxd value) {
  Mat k(1, 1);
  k(0, 0) = value;
  return WickKernel(stat, m, 0, 0, std::move(k));
}

WickKernel WickKernel::from_one_particle(Statistics stat, const Mat& a) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw ConfigError("WickKernel::from_one_particle: square matrix required");
  }
  return WickKernel(stat, static_cast<unsigned>(a.rows()), 1, 1, a);
}

WickKernel WickKernel::creation_kernel(Statistics stat, const Vec& f) {
  return WickKernel(stat, static_cast<unsigned>(f.size()), 0, 1, f);
}

WickKernel WickKernel::annihilation_kernel(Statistics stat, const Vec& f) {
  return WickKernel(stat, static_cast<unsigned>(f.size()), 1, 0, f.adjoint());
}

WickKernel WickKernel::basis_kernel(Statistics stat, unsigned m,
                                    const std::vector<unsigned>& a_occ,
                                    const std::vector<unsigned>& b_occ) {
  if (a_occ.size() != m || b_occ.size() != m) {
    throw ConfigError("WickKernel::basis_kernel: occupation length must equal m");
  }
  const unsigned q = occupation_total(a_occ);
  const unsigned p = occupation_total(b_occ);
  SectorBasis rows(stat, m, q);
  SectorBasis cols(stat, m, p);
  Mat k = Mat::Zero(rows.dim(), cols.dim());
  k(rows.index_of(a_occ), cols.index_of(b_occ)) = 1.0;
  return WickKernel(stat, m, p, q, std::move(k));
}

WickKernel WickKernel::symmetrized_product(Statistics stat,
                                           const std::vector<Mat>& factors) {
  if (factors.empty()) throw ConfigError("WickKernel::symmetrized_product: empty factor list");
  const auto m_idx = factors[0].rows();
  for (const Mat& f : factors) {
    if (f.rows() != m_idx || f.cols() != m_idx) {
      throw ConfigError("WickKernel::symmetrized_product: factors must be square, same size");
    }
  }
  const unsigned m = static_cast<unsigned>(m_idx);
  const unsigned k = static_cast<unsigned>(factors.size());
  tensor_dim_checked(m, k);
  Mat big = factors[0];
  for (unsigned i = 1; i < k; ++i) big = kron(big, factors[i]);
  EmbedRestrict er = embed_restrict(stat, m, k);
  Mat compressed = er.restrict_map * big * er.embed;
  return WickKernel(stat, m, k, k, std::move(compressed));
}

WickKernel WickKernel::tensor_power(Statistics stat, const Mat& b, unsigned p) {
  return symmetrized_product(stat, std::vector<Mat>(p, b));
}

WickKernel WickKernel::adjoint() const {
  return WickKernel(m_stat, m_modes, m_q, m_p, m_matrix.adjoint());
}

double WickKernel::norm() const {
  if (m_matrix.size() == 0) return 0.0;
  return operator_norm(m_matrix);
}

Mat WickKernel::full_tensor() const {
  EmbedRestrict er_q = embed_restrict(m_stat, m_modes, m_q);
  EmbedRestrict er_p = embed_restrict(m_stat, m_modes, m_p);
  return er_q.embed * m_matrix * er_p.restrict_map;
}

namespace {

// Coordinates of z^{(x)p} in the symmetric occupation basis:
// <e_B, z^{(x)p}> = sqrt(p!/B!) prod_k z_k^{B_k}.
Vec power_coordinates(const SectorBasis& basis, const Vec& z, unsigned p) {
  Vec c(basis.dim());
  const double fac_p = static_cast<double>(factorial_u64(p));
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const std::vector<unsigned>& occ = basis.occupation(i);
    cxd prod(1.0, 0.0);
    double denom = 1.0;
    for (unsigned k = 0; k < occ.size(); ++k) {
      for (unsigned r = 0; r < occ[k]; ++r) prod *= z(k);
      denom *= static_cast<double>(factorial_u64(occ[k]));
    }
    c(static_cast<Eigen::Index>(i)) = std::sqrt(fac_p / denom) * prod;
  }
  return c;
}

}  // namespace

cxd WickKernel::symbol_at(const Vec& z) const {
  if (m_stat != Statistics::bosonic) {
    throw ConfigError("WickKernel::symbol_at: bosonic kernels only");
  }
  if (z.size() != static_cast<Eigen::Index>(m_modes)) {
    throw ConfigError("WickKernel::symbol_at: argument dimension mismatch");
  }
  SectorBasis bq(m_stat, m_modes, m_q);
  SectorBasis bp(m_stat, m_modes, m_p);
  Vec cq = power_coordinates(bq, z, m_q);
  Vec cp = power_coordinates(bp, z, m_p);
  return (cq.adjoint() * m_matrix * cp)(0);
}

double wick_monomial_amplitude(Statistics stat, double eps,
                               const std::vector<unsigned>& mu,
                               const std::vector<unsigned>& a_occ,
                               const std::vector<unsigned>& b_occ,
                               std::vector<unsigned>& scratch) {
  const unsigned m = static_cast<unsigned>(mu.size());
  const unsigned q = occupation_total(a_occ);
  const unsigned p = occupation_total(b_occ);
  scratch.assign(mu.begin(), mu.end());
  if (stat == Statistics::bosonic) {
    // sqrt(p!/B!) sqrt(q!/A!) sqrt(mu!/(mu-B)!) sqrt((mu-B+A)!/(mu-B)!)
    double inside = static_cast<double>(factorial_u64(p)) *
                    static_cast<double>(factorial_u64(q));
    for (unsigned k = 0; k < m; ++k) {
      if (mu[k] < b_occ[k]) return 0.0;
      inside /= static_cast<double>(factorial_u64(b_occ[k]));
      inside /= static_cast<double>(factorial_u64(a_occ[k]));
      inside *= static_cast<double>(falling_u64(mu[k], b_occ[k]));
      const unsigned after = mu[k] - b_occ[k] + a_occ[k];
      inside *= static_cast<double>(falling_u64(after, a_occ[k]));
      scratch[k] = after;
    }
    return std::pow(eps, 0.5 * (p + q)) * std::sqrt(inside);
  }
  // Fermionic: apply the annihilators of B in increasing mode order, then the
  // creators of A in decreasing mode order, tracking the alternating sign.
  int sign = 1;
  for (unsigned j = 0; j < m; ++j) {
    if (b_occ[j] == 0) continue;
    if (scratch[j] == 0) return 0.0;
    if (jw_exponent(scratch, j) % 2 == 1) sign = -sign;
    scratch[j] = 0;
  }
  for (unsigned ii = m; ii-- > 0;) {
    if (a_occ[ii] == 0) continue;
    if (scratch[ii] == 1) return 0.0;
    if (jw_exponent(scratch, ii) % 2 == 1) sign = -sign;
    scratch[ii] = 1;
  }
  const double pref = std::sqrt(static_cast<double>(factorial_u64(p)) *
                                static_cast<double>(factorial_u64(q)));
  return sign * pref * std::pow(eps, 0.5 * (p + q));
}

namespace {

struct KernelEntry {
  std::size_t a_index;
  std::size_t b_index;
  cxd value;
};

std::vector<KernelEntry> nonzero_entries(const Mat& k) {
  std::vector<KernelEntry> entries;
  for (Eigen::Index col = 0; col < k.cols(); ++col) {
    for (Eigen::Index row = 0; row < k.rows(); ++row) {
      if (k(row, col) != cxd(0.0, 0.0)) {
        entries.push_back({static_cast<std::size_t>(row),
                           static_cast<std::size_t>(col), k(row, col)});
      }
    }
  }
  return entries;
}

void check_kernel_space(const WickKernel& kernel, const TruncatedFock& fock,
                        const char* who) {
  if (kernel.modes() != fock.modes() || kernel.statistics() != fock.statistics()) {
    throw ConfigError(std::string(who) + ": kernel and space disagree on modes or statistics");
  }
}

}  // namespace

FockOperator wick_quantize(const WickKernel& kernel, const TruncatedFock& fock) {
  check_kernel_space(kernel, fock, "wick_quantize");
  const unsigned p = kernel.p();
  const unsigned q = kernel.q();
  require_budget(fock.dim() * fock.dim() * sizeof(cxd), "wick_quantize operator");
  Mat out = Mat::Zero(fock.dim(), fock.dim());
  if (p > fock.n_max()) return FockOperator(fock, std::move(out));
  SectorBasis bq(fock.statistics(), fock.modes(), q);
  SectorBasis bp(fock.statistics(), fock.modes(), p);
  std::vector<KernelEntry> entries = nonzero_entries(kernel.matrix());
  std::vector<unsigned> scratch(fock.modes());
  for (unsigned s = p; s <= fock.n_max(); ++s) {
    const unsigned sp = s - p + q;
    if (sp > fock.n_max()) continue;  // target sector above cutoff: block absent
    const SectorBasis& src = fock.sector(s);
    const SectorBasis& dst = fock.sector(sp);
    for (std::size_t i = 0; i < src.dim(); ++i) {
      const std::vector<unsigned>& mu = src.occupation(i);
      for (const KernelEntry& e : entries) {
        double amp = wick_monomial_amplitude(fock.statistics(), fock.eps(), mu,
                                             bq.occupation(e.a_index),
                                             bp.occupation(e.b_index), scratch);
        if (amp == 0.0) continue;
        std::size_t j = dst.index_of(scratch);
        out(fock.state_index(sp, j), fock.state_index(s, i)) += e.value * amp;
      }
    }
  }
  return FockOperator(fock, std::move(out));
}

std::vector<unsigned> wick_dropped_sectors(const WickKernel& kernel,
                                           const TruncatedFock& fock) {
  check_kernel_space(kernel, fock, "wick_dropped_sectors");
  std::vector<unsigned> dropped;
  for (unsigned s = kernel.p(); s <= fock.n_max(); ++s) {
    const unsigned target = s - kernel.p() + kernel.q();
    if (target <= fock.n_max()) continue;
    // A fermionic target beyond the mode count does not exist untruncated
    // either; losing it loses nothing.
    if (fock.statistics() == Statistics::fermionic && target > fock.modes()) {
      continue;
    }
    dropped.push_back(s);
  }
  return dropped;
}

double weighted_wick_norm(const WickKernel& kernel, const TruncatedFock& fock,
                          unsigned m, unsigned mp) {
  FockOperator w = wick_quantize(kernel, fock);
  VecR left(fock.dim());
  VecR right(fock.dim());
  for (unsigned n = 0; n <= fock.n_max(); ++n) {
    const double base = 1.0 + fock.eps() * n;
    for (std::size_t i = 0; i < fock.sector_dim(n); ++i) {
      left(static_cast<Eigen::Index>(fock.state_index(n, i))) =
          std::pow(base, -0.5 * static_cast<double>(m));
      right(static_cast<Eigen::Index>(fock.state_index(n, i))) =
          std::pow(base, -0.5 * static_cast<double>(mp));
    }
  }
  Mat weighted = left.asDiagonal() * w.matrix() * right.asDiagonal();
  return operator_norm(weighted);
}

WickKernel contract(const WickKernel& b1, const WickKernel& b2, unsigned k) {
  if (b1.statistics() != b2.statistics() || b1.modes() != b2.modes()) {
    throw ConfigError("contract: kernels disagree on modes or statistics");
  }
  if (k > b1.p() || k > b2.q()) {
    throw ConfigError("contract: k must satisfy k <= min(p1, q2)");
  }
  const Statistics stat = b1.statistics();
  const unsigned m = b1.modes();
  const unsigned p_out = b1.p() + b2.p() - k;
  const unsigned q_out = b1.q() + b2.q() - k;
  const std::size_t dim_left = tensor_dim_checked(m, q_out);
  const std::size_t dim_mid = tensor_dim_checked(m, b1.p() + b2.q() - k);
  const std::size_t dim_right = tensor_dim_checked(m, p_out);
  require_budget((dim_left * dim_mid + dim_mid * dim_right + dim_left * dim_right) *
                     sizeof(cxd),
                 "contract tensor lift");
  const std::size_t pad_left = tensor_dim_checked(m, b2.q() - k);
  const std::size_t pad_right = tensor_dim_checked(m, b1.p() - k);
  Mat lifted_1 = kron(b1.full_tensor(),
                      Mat::Identity(static_cast<Eigen::Index>(pad_left),
                                    static_cast<Eigen::Index>(pad_left)));
  Mat lifted_2 = kron(Mat::Identity(static_cast<Eigen::Index>(pad_right),
                                    static_cast<Eigen::Index>(pad_right)),
                      b2.full_tensor());
  Mat full = lifted_1 * lifted_2;
  EmbedRestrict er_q = embed_restrict(stat, m, q_out);
  EmbedRestrict er_p = embed_restrict(stat, m, p_out);
  const double prefactor =
      static_cast<double>(checked_mul_u64(falling_u64(b1.p(), k), falling_u64(b2.q(), k)));
  Mat result = prefactor * (er_q.restrict_map * full * er_p.embed);
  return WickKernel(stat, m, p_out, q_out, std::move(result));
}

WickComposition compose_wick(const WickKernel& b1, const WickKernel& b2,
                             const TruncatedFock& fock) {
  check_kernel_space(b1, fock, "compose_wick");
  check_kernel_space(b2, fock, "compose_wick");
  FockOperator w1 = wick_quantize(b1, fock);
  FockOperator w2 = wick_quantize(b2, fock);
  Mat product = w1.matrix() * w2.matrix();
  Mat expansion = Mat::Zero(fock.dim(), fock.dim());
  const unsigned k_max = std::min(b1.p(), b2.q());
  for (unsigned k = 0; k <= k_max; ++k) {
    WickKernel ck = contract(b1, b2, k);
    double sign = 1.0;
    if (fock.statistics() == Statistics::fermionic &&
        ((b1.p() - k) * (b2.p() + b2.q())) % 2 == 1) {
      sign = -1.0;
    }
    const double weight = sign * std::pow(fock.eps(), k) /
                          static_cast<double>(factorial_u64(k));
    expansion += weight * wick_quantize(ck, fock).matrix();
  }
  // Input sectors where no block on either side fell above the cutoff. A
  // fermionic target beyond the mode count is not a loss: that sector does
  // not exist in the untruncated theory either, so the block is zero on both
  // sides of the identity.
  std::vector<unsigned> compared;
  const int n_cut = static_cast<int>(fock.n_max());
  const auto truly_dropped = [&](int target) {
    if (target <= n_cut) return false;
    return !(fock.statistics() == Statistics::fermionic &&
             target > static_cast<int>(fock.modes()));
  };
  const int p1 = static_cast<int>(b1.p()), q1 = static_cast<int>(b1.q());
  const int p2 = static_cast<int>(b2.p()), q2 = static_cast<int>(b2.q());
  const int k_top = std::min(p1, q2);
  for (int s = 0; s <= n_cut; ++s) {
    // First hop of the product.
    const int mid = s - p2 + q2;
    if (s >= p2 && truly_dropped(mid)) continue;
    // Common output sector of the product's second hop and of every
    // expansion block (the net particle change is k-independent).
    bool reaches_out = s >= p1 + p2 - k_top;
    if (s >= p2 && mid <= n_cut && mid >= p1) reaches_out = true;
    if (reaches_out && truly_dropped(s - (p1 + p2) + (q1 + q2))) continue;
    compared.push_back(static_cast<unsigned>(s));
  }
  if (compared.empty()) {
    throw ConfigError("compose_wick: cutoff too small to compare any sector");
  }
  double max_diff = 0.0;
  Mat diff = product - expansion;
  for (unsigned s : compared) {
    if (fock.sector_dim(s) == 0) continue;
    double d = diff.middleCols(static_cast<Eigen::Index>(fock.sector_offset(s)),
                               static_cast<Eigen::Index>(fock.sector_dim(s)))
                   .cwiseAbs()
                   .maxCoeff();
    max_diff = std::max(max_diff, d);
  }
  return {FockOperator(fock, std::move(product)),
          FockOperator(fock, std::move(expansion)), max_diff, std::move(compared)};
}

WickKernel poisson_bracket_k(const WickKernel& b1, const WickKernel& b2,
                             unsigned k) {
  if (b1.statistics() != Statistics::bosonic ||
      b2.statistics() != Statistics::bosonic) {
    throw ConfigError("poisson_bracket_k: bosonic kernels only");
  }
  if (b1.modes() != b2.modes()) {
    throw ConfigError("poisson_bracket_k: kernels disagree on modes");
  }
  const bool fwd_ok = (k <= b1.p() && k <= b2.q());
  const bool rev_ok = (k <= b2.p() && k <= b1.q());
  if (!fwd_ok && !rev_ok) {
    throw ConfigError("poisson_bracket_k: k exceeds both contraction ranges");
  }
  const unsigned p_out = b1.p() + b2.p() - k;
  const unsigned q_out = b1.q() + b2.q() - k;
  const Statistics stat = Statistics::bosonic;
  const unsigned m = b1.modes();
  Mat acc = Mat::Zero(sector_dimension(stat, m, q_out), sector_dimension(stat, m, p_out));
  if (fwd_ok) acc += contract(b1, b2, k).matrix();
  if (rev_ok) acc -= contract(b2, b1, k).matrix();
  return WickKernel(stat, m, p_out, q_out, std::move(acc));
}

std::vector<DGammaTerm> dGamma_expansion_table(unsigned p) {
  if (p < 1) throw ConfigError("dGamma_expansion_table: need p >= 1");
  using Key = std::pair<unsigned, std::vector<unsigned>>;
  std::map<Key, std::uint64_t> table;
  table[{1u, {1u}}] = 1;
  for (unsigned level = 1; level < p; ++level) {
    std::map<Key, std::uint64_t> next;
    for (const auto& [key, c] : table) {
      const unsigned k = key.first;
      const std::vector<unsigned>& powers = key.second;
      // Append a fresh unit factor: k -> k+1.
      std::vector<unsigned> grown = powers;
      grown.push_back(1);
      std::sort(grown.begin(), grown.end(), std::greater<unsigned>());
      auto& tgt = next[{k + 1, std::move(grown)}];
      tgt = checked_add_u64(tgt, c);
      // Bump each slot by one: k stays.
      for (std::size_t i = 0; i < powers.size(); ++i) {
        std::vector<unsigned> bumped = powers;
        bumped[i] += 1;
        std::sort(bumped.begin(), bumped.end(), std::greater<unsigned>());
        auto& tgt2 = next[{k, std::move(bumped)}];
        tgt2 = checked_add_u64(tgt2, c);
      }
    }
    table = std::move(next);
  }
  std::vector<DGammaTerm> out;
  out.reserve(table.size());
  for (const auto& [key, c] : table) out.push_back({key.first, key.second, c});
  return out;
}

DGammaPowerReport dGamma_power_expansion(const Mat& b, unsigned p,
                                         const TruncatedFock& fock) {
  if (b.rows() != b.cols() || b.rows() != static_cast<Eigen::Index>(fock.modes())) {
    throw ConfigError("dGamma_power_expansion: matrix must be modes x modes");
  }
  if (p < 1) throw ConfigError("dGamma_power_expansion: need p >= 1");
  const Statistics stat = fock.statistics();
  // Matrix powers of the one-particle matrix, b^1 .. b^p.
  std::vector<Mat> powers_of_b(p + 1);
  powers_of_b[0] = Mat::Identity(b.rows(), b.cols());
  for (unsigned j = 1; j <= p; ++j) powers_of_b[j] = powers_of_b[j - 1] * b;

  Mat dg = dGamma(fock, b).matrix();
  Mat dgp = dg;
  for (unsigned j = 1; j < p; ++j) dgp = dg * dgp;

  Mat main_term = wick_quantize(WickKernel::tensor_power(stat, b, p), fock).matrix();
  Mat remainder_direct = dgp - main_term;

  Mat remainder_sum = Mat::Zero(fock.dim(), fock.dim());
  for (const DGammaTerm& term : dGamma_expansion_table(p)) {
    if (term.k == p) continue;  // the main term
    std::vector<Mat> factors;
    factors.reserve(term.k);
    for (unsigned j : term.powers) factors.push_back(powers_of_b[j]);
    WickKernel kern = WickKernel::symmetrized_product(stat, factors);
    const double weight = static_cast<double>(term.coefficient) *
                          std::pow(fock.eps(), static_cast<double>(p - term.k));
    remainder_sum += weight * wick_quantize(kern, fock).matrix();
  }

  double max_diff = (remainder_direct - remainder_sum).cwiseAbs().maxCoeff();

  VecR wdiag(fock.dim());
  for (unsigned n = 0; n <= fock.n_max(); ++n) {
    const double w = std::pow(1.0 + fock.eps() * n, -0.5 * static_cast<double>(p - 1));
    for (std::size_t i = 0; i < fock.sector_dim(n); ++i) {
      wdiag(static_cast<Eigen::Index>(fock.state_index(n, i))) = w;
    }
  }
  Mat weighted = wdiag.asDiagonal() * remainder_direct * wdiag.asDiagonal();
  const double wnorm = operator_norm(weighted);
  CombinatoricsTable tab(std::max(p + 1, 3u));
  const double bnorm = (b.size() == 0) ? 0.0 : operator_norm(b);
  const double bound = fock.eps() * static_cast<double>(tab.bell(p)) * std::pow(bnorm, p);

  return {FockOperator(fock, std::move(remainder_direct)),
          FockOperator(fock, std::move(remainder_sum)),
          max_diff,
          wnorm,
          bound,
          wnorm <= bound + 1e-10};
}

}  // namespace fockbench
