#pragma once

#include <map>
#include <vector>

#include "fockbench/linalg.hpp"

namespace fockbench {

enum class Statistics { bosonic, fermionic };

inline const char* statistics_name(Statistics s) {
  return s == Statistics::bosonic ? "bosonic" : "fermionic";
}

// Sign of a permutation given in one-line notation: always +1 for bosons,
// the signature for fermions.
int permutation_parity(const std::vector<unsigned>& perm);
double statistics_sign(Statistics stat, const std::vector<unsigned>& perm);

// Finite-dimensional one-particle space C^m with the standard Hermitian inner
// product, anti-linear in the LEFT argument: inner(f, g) = sum_k conj(f_k) g_k.
class OneParticleSpace {
 public:
  explicit OneParticleSpace(unsigned dim) : m_dim(dim) {
    if (dim < 1) throw ConfigError("OneParticleSpace: dimension must be >= 1");
  }
  unsigned dim() const { return m_dim; }

  static cxd inner(const Vec& f, const Vec& g) {
    if (f.size() != g.size()) throw ConfigError("inner: dimension mismatch");
    return f.dot(g);  // Eigen's dot conjugates the left factor
  }

 private:
  unsigned m_dim;
};

// Number of n-particle occupation states over m modes.
std::size_t sector_dimension(Statistics stat, unsigned m, unsigned n);

// Occupation-number basis of the n-particle sector. Occupation vectors are
// enumerated in lexicographically descending order, which fixes every matrix
// layout downstream. Fermionic basis vectors are wedges of mode vectors taken
// in increasing mode order.
class SectorBasis {
 public:
  SectorBasis(Statistics stat, unsigned m, unsigned n);

  Statistics statistics() const { return m_stat; }
  unsigned modes() const { return m_modes; }
  unsigned particles() const { return m_particles; }
  std::size_t dim() const { return m_occ.size(); }

  const std::vector<unsigned>& occupation(std::size_t i) const { return m_occ[i]; }
  bool contains(const std::vector<unsigned>& occ) const { return m_index.count(occ) != 0; }
  std::size_t index_of(const std::vector<unsigned>& occ) const;

 private:
  Statistics m_stat;
  unsigned m_modes;
  unsigned m_particles;
  std::vector<std::vector<unsigned>> m_occ;
  std::map<std::vector<unsigned>, std::size_t> m_index;
};

// ---- Ordered-tensor (oracle) representation, capped at m^p <= 65536 ----

// Dimension m^p with the resource cap applied.
std::size_t tensor_dim_checked(unsigned m, unsigned p);

// Kronecker product (leftmost factor owns the most significant index).
Mat kron(const Mat& a, const Mat& b);

// f^{(x) p} as a vector in the ordered tensor basis.
Vec tensor_power(const Vec& f, unsigned p);

// The (anti)symmetrization projector on the ordered tensor basis of Z^{(x) p}:
// (1/p!) sum_sigma sign(sigma) * (permutation action).
Mat symmetrizer(Statistics stat, unsigned m, unsigned p);

struct EmbedRestrict {
  Mat embed;         // m^p x sector_dim, isometry: occupation basis -> tensor basis
  Mat restrict_map;  // embed^dagger
};
// restrict_map * embed = Id on the sector; embed * restrict_map = symmetrizer.
EmbedRestrict embed_restrict(Statistics stat, unsigned m, unsigned p);

// Symmetrized tensor product of one-particle operators:
// (1/p!) sum over orderings of b_{sigma(1)} (x) ... (x) b_{sigma(p)}.
Mat odot(const std::vector<Mat>& factors);

}  // namespace fockbench
