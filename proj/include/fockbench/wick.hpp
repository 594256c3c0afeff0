#pragma once

#include <cstdint>
#include <vector>

#include "fockbench/operators.hpp"

namespace fockbench {

// A p -> q particle kernel stored over the occupation bases of the
// symmetrized sectors: matrix dimensions sector_dimension(q) x
// sector_dimension(p). The full ordered-tensor representative is recovered
// on demand through embed/restrict.
class WickKernel {
 public:
  WickKernel(Statistics stat, unsigned m, unsigned p, unsigned q, Mat matrix);

  // Constant kernel (p = q = 0).
  static WickKernel scalar(Statistics stat, unsigned m, cxd value);
  // 1 -> 1 kernel from a one-particle matrix (occupation basis = mode basis).
  static WickKernel from_one_particle(Statistics stat, const Mat& a);
  // 0 -> 1 kernel |f>; quantizes to the creation operator.
  static WickKernel creation_kernel(Statistics stat, const Vec& f);
  // 1 -> 0 kernel <f|; quantizes to the annihilation operator.
  static WickKernel annihilation_kernel(Statistics stat, const Vec& f);
  // Rank-one occupation kernel |e_A><e_B| with q = |A|, p = |B|.
  static WickKernel basis_kernel(Statistics stat, unsigned m,
                                 const std::vector<unsigned>& a_occ,
                                 const std::vector<unsigned>& b_occ);
  // k -> k kernel obtained by compressing factors[0] (x) ... (x) factors[k-1]
  // between the symmetrizers; the compression makes the factor order
  // irrelevant. k = factors.size() >= 1.
  static WickKernel symmetrized_product(Statistics stat,
                                        const std::vector<Mat>& factors);
  // Special case: all factors equal (p-fold power of one matrix).
  static WickKernel tensor_power(Statistics stat, const Mat& b, unsigned p);

  Statistics statistics() const { return m_stat; }
  unsigned modes() const { return m_modes; }
  unsigned p() const { return m_p; }
  unsigned q() const { return m_q; }
  const Mat& matrix() const { return m_matrix; }

  // q -> p kernel with the adjoint matrix; quantization commutes with this.
  WickKernel adjoint() const;
  // Operator norm of the occupation-basis matrix.
  double norm() const;
  // Ordered-tensor representative embed_q * matrix * restrict_p (m^q x m^p).
  Mat full_tensor() const;
  // Bosonic symbol value <z^{(x)q}, kernel z^{(x)p}>.
  cxd symbol_at(const Vec& z) const;

 private:
  Statistics m_stat;
  unsigned m_modes;
  unsigned m_p;
  unsigned m_q;
  Mat m_matrix;
};

// Amplitude c with (|e_A><e_B|)^Wick |mu> = c |mu - B + A| on a space with
// scaling eps; zero when B is not contained in mu or (fermions) the target
// over-fills a mode. `scratch` must have size m and is clobbered. Shared by
// the quantizer and the reduced-density trace pairing.
double wick_monomial_amplitude(Statistics stat, double eps,
                               const std::vector<unsigned>& mu,
                               const std::vector<unsigned>& a_occ,
                               const std::vector<unsigned>& b_occ,
                               std::vector<unsigned>& scratch);

// Wick quantization: block from sector n+p to sector n+q for every n with
// both within the cutoff. Blocks whose target would exceed the cutoff are
// absent (zero); wick_dropped_sectors lists the affected input sectors.
FockOperator wick_quantize(const WickKernel& kernel, const TruncatedFock& fock);
std::vector<unsigned> wick_dropped_sectors(const WickKernel& kernel,
                                           const TruncatedFock& fock);

// ||(1+N)^{-m/2} kernel^Wick (1+N)^{-mp/2}|| on the truncated space.
double weighted_wick_norm(const WickKernel& kernel, const TruncatedFock& fock,
                          unsigned m, unsigned mp);

// Contraction product #^k: pairs k outputs of b2 with k inputs of b1,
// with the exact integer prefactor (p1!/(p1-k)!)(q2!/(q2-k)!). Computed by
// lifting to the ordered tensor basis (cost m^(total degree), capped).
WickKernel contract(const WickKernel& b1, const WickKernel& b2, unsigned k);

// Both sides of the operator-composition identity on a truncated space:
// product = b1^Wick * b2^Wick, expansion = sum_k sign^k (eps^k/k!)
// (b1 #^k b2)^Wick with sign = (+-1)^{(p1-k)(p2+q2)}. The difference is
// reported over input sectors where neither side lost a block to the cutoff.
struct WickComposition {
  FockOperator product;
  FockOperator expansion;
  double max_difference;
  std::vector<unsigned> compared_sectors;
};
WickComposition compose_wick(const WickKernel& b1, const WickKernel& b2,
                             const TruncatedFock& fock);

// Antisymmetrized contraction difference (bosonic only):
// contract(b1,b2,k) - contract(b2,b1,k), normalized so that
// [b1^Wick, b2^Wick] = sum_k (eps^k/k!) poisson_bracket_k(b1,b2,k)^Wick.
WickKernel poisson_bracket_k(const WickKernel& b1, const WickKernel& b2,
                             unsigned k);

// One term of the dGamma-power expansion: coefficient * eps^{p-k} *
// (symmetrized product of b^{powers[0]},...,b^{powers[k-1]})^Wick, where
// powers sums to p. The table for level p carries the main term (k = p,
// all powers 1, coefficient 1) plus the lower-k remainder terms.
struct DGammaTerm {
  unsigned k;
  std::vector<unsigned> powers;  // sorted descending, sum = p
  std::uint64_t coefficient;
};
std::vector<DGammaTerm> dGamma_expansion_table(unsigned p);

// dGamma(b)^p minus the quantization of the symmetrized p-fold power,
// computed two independent ways, with the weighted-norm certificate
// ||(1+N)^{-(p-1)/2} R (1+N)^{-(p-1)/2}|| <= eps * B_p * ||b||^p + 1e-10.
struct DGammaPowerReport {
  FockOperator remainder_direct;
  FockOperator remainder_expansion;
  double max_entry_difference;
  double weighted_norm;
  double bound;
  bool within_bound;
};
DGammaPowerReport dGamma_power_expansion(const Mat& b, unsigned p,
                                         const TruncatedFock& fock);

}  // namespace fockbench
