#include "fockbench/linalg.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <utility>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace fockbench {

namespace {

double one_norm(const Mat& a) {
  if (a.cols() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

// Pade-13 scaling-and-squaring. theta_13 is the largest 1-norm at which the
// [13/13] approximant keeps the backward error near machine precision.
Mat expm(const Mat& a) {
  if (a.rows() != a.cols()) throw ConfigError("expm: matrix must be square");
  const Eigen::Index n = a.rows();
  require_budget(static_cast<std::size_t>(n) * n * sizeof(cxd) * 8, "expm workspace");

  static const double b[14] = {64764752532480000.0,
                               32382376266240000.0,
                               7771770303897600.0,
                               1187353796428800.0,
                               129060195264000.0,
                               10559470521600.0,
                               670442572800.0,
                               33522128640.0,
                               1323241920.0,
                               40840800.0,
                               960960.0,
                               16380.0,
                               182.0,
                               1.0};
  const double theta13 = 5.371920351148152;

  int squarings = 0;
  double nrm = one_norm(a);
  if (nrm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  }
  Mat as = a / std::pow(2.0, squarings);

  Mat id = Mat::Identity(n, n);
  Mat a2 = as * as;
  Mat a4 = a2 * a2;
  Mat a6 = a2 * a4;

  Mat u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
                b[1] * id);
  Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
          b[0] * id;

  Mat f = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) f = f * f;
  return f;
}

Vec expm_multiply(const Mat& a, const Vec& v) {
  if (a.rows() != a.cols() || a.cols() != v.size()) {
    throw ConfigError("expm_multiply: dimension mismatch");
  }
  double nrm = one_norm(a);
  int segments = 1;
  while (nrm / segments > 1.0 && segments < (1 << 24)) segments *= 2;
  Mat b = a / static_cast<double>(segments);
  Vec y = v;
  for (int seg = 0; seg < segments; ++seg) {
    Vec term = y;
    Vec acc = y;
    for (int k = 1; k <= 80; ++k) {
      term = (b * term) / static_cast<double>(k);
      acc += term;
      if (term.norm() <= 1e-18 * acc.norm()) break;
    }
    y = acc;
  }
  return y;
}

HermEig hermitian_eig(const Mat& a) {
  if (a.rows() != a.cols()) throw ConfigError("hermitian_eig: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  HermEig out;
  out.vectors = a;  // overwritten with eigenvectors (column-major)
  out.values.resize(n);
  if (n == 0) return out;
  lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n,
                                   out.values.data());
  if (info != 0) {
    throw CheckFailure("zheevd failed with info=" + std::to_string(info));
  }
  return out;
}

SymEig symmetric_eig(const MatR& a) {
  if (a.rows() != a.cols()) throw ConfigError("symmetric_eig: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  SymEig out;
  out.vectors = a;
  out.values.resize(n);
  if (n == 0) return out;
  lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n, out.values.data());
  if (info != 0) {
    throw CheckFailure("dsyevd failed with info=" + std::to_string(info));
  }
  return out;
}

double operator_norm(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

double hermitian_norm_estimate(const MatR& a, int iters) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 0.0;
  CounterRng rng(0x9E3779B9ULL);
  VecR v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.normal();
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    VecR w = a * v;
    lambda = w.norm();
    if (lambda == 0.0) return 0.0;
    v = w / lambda;
  }
  return lambda;
}

cxd det(const Mat& a) {
  if (a.rows() != a.cols()) throw ConfigError("det: matrix must be square");
  if (a.rows() == 0) return cxd(1.0, 0.0);
  return Eigen::PartialPivLU<Mat>(a).determinant();
}

namespace {

struct PlanCache {
  std::map<int, fftw_plan> plans_fwd;   // sign -1
  std::map<int, fftw_plan> plans_bwd;   // sign +1
  std::map<std::pair<int, int>, fftw_plan> plans2_fwd;
  std::map<std::pair<int, int>, fftw_plan> plans2_bwd;
  fftw_complex* buf = nullptr;
  std::size_t buf_len = 0;

  fftw_complex* buffer(std::size_t len) {
    if (len > buf_len) {
      if (buf) fftw_free(buf);
      buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * len));
      buf_len = len;
    }
    return buf;
  }
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void dft_inplace(std::vector<cxd>& data, int sign) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return;
  if ((n & (n - 1)) != 0) throw ConfigError("dft_inplace: length must be a power of two");
  PlanCache& cache = plan_cache();
  fftw_complex* buf = cache.buffer(static_cast<std::size_t>(n));
  auto& plans = (sign > 0) ? cache.plans_bwd : cache.plans_fwd;
  auto it = plans.find(n);
  if (it == plans.end()) {
    fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                   FFTW_ESTIMATE);
    it = plans.emplace(n, p).first;
  }
  std::copy(data.begin(), data.end(), reinterpret_cast<cxd*>(buf));
  fftw_execute_dft(it->second, buf, buf);
  std::copy(reinterpret_cast<cxd*>(buf), reinterpret_cast<cxd*>(buf) + n, data.begin());
}

void dft2_inplace(std::vector<cxd>& data, int n0, int n1, int sign) {
  if (n0 <= 0 || n1 <= 0) return;
  if (static_cast<std::size_t>(n0) * n1 != data.size()) {
    throw ConfigError("dft2_inplace: size mismatch");
  }
  if ((n0 & (n0 - 1)) != 0 || (n1 & (n1 - 1)) != 0) {
    throw ConfigError("dft2_inplace: lengths must be powers of two");
  }
  PlanCache& cache = plan_cache();
  fftw_complex* buf = cache.buffer(data.size());
  auto& plans = (sign > 0) ? cache.plans2_bwd : cache.plans2_fwd;
  auto key = std::make_pair(n0, n1);
  auto it = plans.find(key);
  if (it == plans.end()) {
    fftw_plan p = fftw_plan_dft_2d(n0, n1, buf, buf, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                   FFTW_ESTIMATE);
    it = plans.emplace(key, p).first;
  }
  std::copy(data.begin(), data.end(), reinterpret_cast<cxd*>(buf));
  fftw_execute_dft(it->second, buf, buf);
  std::copy(reinterpret_cast<cxd*>(buf), reinterpret_cast<cxd*>(buf) + data.size(), data.begin());
}

Mat random_complex_matrix(CounterRng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = rng.cnormal();
  return m;
}

Mat random_hermitian(CounterRng& rng, int n, double norm) {
  Mat g = random_complex_matrix(rng, n, n);
  Mat h = 0.5 * (g + g.adjoint());
  double nr = operator_norm(h);
  if (nr > 0) h *= (norm / nr);
  return h;
}

}  // namespace fockbench

namespace fockbench {

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ConfigError("log_log_slope: length mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0 || y[i] == 0.0) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return 0.0;
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace fockbench
