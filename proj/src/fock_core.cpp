#include "fockbench/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fockbench/combinatorics.hpp"

namespace fockbench {

int permutation_parity(const std::vector<unsigned>& perm) {
  // Count inversions; cheap at the sizes used here.
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

double statistics_sign(Statistics stat, const std::vector<unsigned>& perm) {
  return stat == Statistics::bosonic ? 1.0 : static_cast<double>(permutation_parity(perm));
}

std::size_t sector_dimension(Statistics stat, unsigned m, unsigned n) {
  if (m < 1) throw ConfigError("sector_dimension: need m >= 1");
  if (n == 0) return 1;
  if (stat == Statistics::bosonic) {
    return static_cast<std::size_t>(binomial_u64(n + m - 1, n));
  }
  return static_cast<std::size_t>(binomial_u64(m, n));  // 0 when n > m
}

namespace {

void enumerate_descending(Statistics stat, unsigned modes_left, unsigned n_left,
                          std::vector<unsigned>& prefix,
                          std::vector<std::vector<unsigned>>& out) {
  if (modes_left == 0) {
    if (n_left == 0) out.push_back(prefix);
    return;
  }
  unsigned cap = (stat == Statistics::fermionic) ? std::min(1u, n_left) : n_left;
  // Descending first coordinate yields lexicographically descending output.
  for (int occ = static_cast<int>(cap); occ >= 0; --occ) {
    prefix.push_back(static_cast<unsigned>(occ));
    enumerate_descending(stat, modes_left - 1, n_left - occ, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SectorBasis::SectorBasis(Statistics stat, unsigned m, unsigned n)
    : m_stat(stat), m_modes(m), m_particles(n) {
  if (m < 1) throw ConfigError("SectorBasis: need m >= 1");
  std::vector<unsigned> prefix;
  enumerate_descending(stat, m, n, prefix, m_occ);
  for (std::size_t i = 0; i < m_occ.size(); ++i) m_index.emplace(m_occ[i], i);
  if (m_occ.size() != sector_dimension(stat, m, n)) {
    throw CheckFailure("SectorBasis: enumeration disagrees with the counting formula");
  }
}

std::size_t SectorBasis::index_of(const std::vector<unsigned>& occ) const {
  auto it = m_index.find(occ);
  if (it == m_index.end()) throw ConfigError("SectorBasis: occupation vector not in sector");
  return it->second;
}

std::size_t tensor_dim_checked(unsigned m, unsigned p) {
  std::size_t dim = 1;
  for (unsigned i = 0; i < p; ++i) {
    dim *= m;
    if (dim > 65536) {
      throw ResourceError("ordered tensor basis exceeds the m^p <= 65536 cap");
    }
  }
  return dim;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec tensor_power(const Vec& f, unsigned p) {
  std::size_t m = static_cast<std::size_t>(f.size());
  tensor_dim_checked(static_cast<unsigned>(m), p);
  Vec out = Vec::Ones(1);
  for (unsigned i = 0; i < p; ++i) {
    Vec next(out.size() * static_cast<Eigen::Index>(m));
    for (Eigen::Index a = 0; a < out.size(); ++a)
      for (std::size_t b = 0; b < m; ++b)
        next(a * static_cast<Eigen::Index>(m) + static_cast<Eigen::Index>(b)) =
            out(a) * f(static_cast<Eigen::Index>(b));
    out.swap(next);
  }
  return out;
}

namespace {

// Decode a tensor-basis index into the word (w_0 .. w_{p-1}), leftmost slot
// most significant.
std::vector<unsigned> decode_word(std::size_t idx, unsigned m, unsigned p) {
  std::vector<unsigned> w(p, 0);
  for (unsigned slot = p; slot-- > 0;) {
    w[slot] = static_cast<unsigned>(idx % m);
    idx /= m;
  }
  return w;
}

std::size_t encode_word(const std::vector<unsigned>& w, unsigned m) {
  std::size_t idx = 0;
  for (unsigned c : w) idx = idx * m + c;
  return idx;
}

}  // namespace

Mat symmetrizer(Statistics stat, unsigned m, unsigned p) {
  std::size_t dim = tensor_dim_checked(m, p);
  require_budget(dim * dim * sizeof(cxd), "symmetrizer matrix");
  Mat s = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  if (p == 0) {
    s(0, 0) = 1.0;
    return s;
  }
  std::vector<unsigned> perm(p);
  std::iota(perm.begin(), perm.end(), 0u);
  const double w = 1.0 / static_cast<double>(factorial_u64(p));
  do {
    double sgn = statistics_sign(stat, perm);
    for (std::size_t col = 0; col < dim; ++col) {
      std::vector<unsigned> word = decode_word(col, m, p);
      std::vector<unsigned> permuted(p);
      // slot i of the output receives the letter from slot perm[i]
      for (unsigned i = 0; i < p; ++i) permuted[i] = word[perm[i]];
      s(static_cast<Eigen::Index>(encode_word(permuted, m)), static_cast<Eigen::Index>(col)) +=
          sgn * w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

EmbedRestrict embed_restrict(Statistics stat, unsigned m, unsigned p) {
  std::size_t dim = tensor_dim_checked(m, p);
  SectorBasis basis(stat, m, p);
  Mat embed = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(basis.dim()));
  if (p == 0) {
    embed(0, 0) = 1.0;
    return {embed, embed.adjoint()};
  }
  const double inv_sqrt_pfac = 1.0 / std::sqrt(static_cast<double>(factorial_u64(p)));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::vector<unsigned> word = decode_word(idx, m, p);
    std::vector<unsigned> occ(m, 0);
    for (unsigned c : word) ++occ[c];
    if (stat == Statistics::fermionic) {
      bool repeat = false;
      for (unsigned o : occ)
        if (o > 1) repeat = true;
      if (repeat) continue;
      // Sign of the permutation sorting the word into increasing mode order.
      int sgn = permutation_parity(word);
      embed(static_cast<Eigen::Index>(idx),
            static_cast<Eigen::Index>(basis.index_of(occ))) = sgn * inv_sqrt_pfac;
    } else {
      // Every distinct arrangement of content mu carries sqrt(mu!/p!).
      double occ_fac = 1.0;
      for (unsigned o : occ) occ_fac *= static_cast<double>(factorial_u64(o));
      embed(static_cast<Eigen::Index>(idx),
            static_cast<Eigen::Index>(basis.index_of(occ))) =
          std::sqrt(occ_fac) * inv_sqrt_pfac;
    }
  }
  return {embed, embed.adjoint()};
}

Mat odot(const std::vector<Mat>& factors) {
  if (factors.empty()) throw ConfigError("odot: need at least one factor");
  const unsigned p = static_cast<unsigned>(factors.size());
  const Eigen::Index m = factors[0].rows();
  for (const Mat& b : factors) {
    if (b.rows() != m || b.cols() != m) throw ConfigError("odot: factors must be m x m");
  }
  std::size_t dim = tensor_dim_checked(static_cast<unsigned>(m), p);
  std::vector<unsigned> perm(p);
  std::iota(perm.begin(), perm.end(), 0u);
  Mat sum = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  do {
    Mat term = factors[perm[0]];
    for (unsigned i = 1; i < p; ++i) term = kron(term, factors[perm[i]]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / static_cast<double>(factorial_u64(p));
}

}  // namespace fockbench
