#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fockbench/common.hpp"
#include "fockbench/rng.hpp"

namespace fockbench {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;
using VecR = Eigen::VectorXd;

// Matrix exponential by Pade-13 scaling-and-squaring (Higham's coefficients).
// Valid for general complex square matrices, including non-normal ones;
// backward error at the 1e-13 level for the scaling threshold used here.
Mat expm(const Mat& a);

// e^a * v without forming e^a: repeated truncated-Taylor application of
// e^{a/s} with s chosen so each segment converges in a few dozen terms.
Vec expm_multiply(const Mat& a, const Vec& v);

struct HermEig {
  VecR values;  // ascending
  Mat vectors;  // columns
};
// Eigendecomposition of a Hermitian matrix (LAPACK zheevd). The strictly
// upper part is ignored; the caller is responsible for Hermiticity.
HermEig hermitian_eig(const Mat& a);

struct SymEig {
  VecR values;
  MatR vectors;
};
// Real symmetric eigendecomposition (LAPACK dsyevd).
SymEig symmetric_eig(const MatR& a);

// Largest singular value.
double operator_norm(const Mat& a);

// Largest |eigenvalue| of a Hermitian matrix by power iteration with a random
// deterministic start; cheap norm estimate for big matrices.
double hermitian_norm_estimate(const MatR& a, int iters = 60);

// det(A) through partial-pivot LU.
cxd det(const Mat& a);

// Unnormalized DFT, in place: data[r] <- sum_l data[l] e^{sign * 2*pi*i*l*r/n}.
// n must be a power of two (FFTW under the hood, plans cached per length).
void dft_inplace(std::vector<cxd>& data, int sign);

// 2-d variant on row-major (n0 x n1) data.
void dft2_inplace(std::vector<cxd>& data, int n0, int n1, int sign);

// Least-squares slope of log|y| against log x, skipping points where either
// coordinate vanishes; the usual estimator of an algebraic convergence order.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

// Dense random matrices with iid standard complex normal entries.
Mat random_complex_matrix(CounterRng& rng, int rows, int cols);
// Random Hermitian with operator norm scaled to `norm`.
Mat random_hermitian(CounterRng& rng, int n, double norm);

}  // namespace fockbench
