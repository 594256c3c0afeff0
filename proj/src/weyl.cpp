#include "fockbench/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace fockbench {

namespace {

bool power_of_two(unsigned n) { return n >= 2 && (n & (n - 1)) == 0; }

int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// Deterministic unit directions in R^{dim} used for construction spot checks.
std::vector<VecR> probe_directions(unsigned dim) {
  std::vector<VecR> dirs;
  for (unsigned i = 0; i < dim; ++i) {
    VecR v = VecR::Zero(dim);
    v(i) = 1.0;
    dirs.push_back(v);
    dirs.push_back(-v);
  }
  VecR ones = VecR::Ones(dim) / std::sqrt(static_cast<double>(dim));
  dirs.push_back(ones);
  VecR alt(dim);
  for (unsigned i = 0; i < dim; ++i) alt(i) = (i % 2 == 0) ? 1.0 : -1.0;
  dirs.push_back(alt / alt.norm());
  if (dim >= 2) {
    VecR mixed(dim);
    for (unsigned i = 0; i < dim; ++i) mixed(i) = 1.0 + 0.5 * i;
    dirs.push_back(mixed / mixed.norm());
  }
  return dirs;
}

double eval_at(const Symbol& a, const VecR& point, VecR& x_buf, VecR& xi_buf) {
  const unsigned d = a.dimension();
  for (unsigned i = 0; i < d; ++i) {
    x_buf(i) = point(i);
    xi_buf(i) = point(d + i);
  }
  return a(x_buf, xi_buf);
}

}  // namespace

PhaseSpaceGrid::PhaseSpaceGrid(unsigned d, double half_width, unsigned n_pts)
    : m_d(d), m_half_width(half_width), m_n(n_pts) {
  if (d < 1 || d > 2) throw ConfigError("PhaseSpaceGrid: d must be 1 or 2");
  if (!(half_width > 0.0)) throw ConfigError("PhaseSpaceGrid: box half-width must be positive");
  if (!power_of_two(n_pts)) throw ConfigError("PhaseSpaceGrid: points per axis must be a power of two");
  m_matrix_dim = 1;
  for (unsigned i = 0; i < d; ++i) m_matrix_dim *= n_pts;
}

PhaseSpaceGrid balanced_grid(unsigned d, double support_bound, double h,
                             unsigned min_points) {
  if (!(support_bound > 0.0) || !(h > 0.0)) {
    throw ConfigError("balanced_grid: positive support bound and h required");
  }
  const double target = 2.0 * support_bound * support_bound / (M_PI * h);
  unsigned n = std::max(min_points, 2u);
  while (n < target) {
    if (n > (1u << 30)) throw ResourceError("balanced_grid: grid too fine");
    n *= 2;
  }
  if (!power_of_two(n)) {
    unsigned p = 2;
    while (p < n) p *= 2;
    n = p;
  }
  return PhaseSpaceGrid(d, std::sqrt(n * M_PI / 2.0), n);
}

double smooth_step_down(double s) {
  auto g = [](double t) { return (t > 0.0) ? std::exp(-1.0 / t) : 0.0; };
  const double up = g(1.0 - s);
  const double down = g(s);
  if (up + down == 0.0) return (s <= 0.0) ? 1.0 : 0.0;
  return up / (up + down);
}

Symbol::Symbol(unsigned d, SymbolClass tag, Eval eval, double support_radius)
    : m_d(d), m_tag(tag), m_eval(std::move(eval)), m_support_radius(support_radius) {
  if (d < 1 || d > 2) throw ConfigError("Symbol: d must be 1 or 2");
  if (!m_eval) throw ConfigError("Symbol: empty evaluation rule");
  const unsigned dim = 2 * d;
  VecR x_buf(d), xi_buf(d);
  const std::vector<VecR> dirs = probe_directions(dim);
  switch (tag) {
    case SymbolClass::compact_support: {
      if (!(m_support_radius > 0.0)) {
        throw ConfigError("Symbol: compact support needs a positive radius");
      }
      for (double factor : {1.25, 1.5, 2.0}) {
        for (const VecR& dir : dirs) {
          const double v = eval_at(*this, VecR(factor * m_support_radius * dir),
                                   x_buf, xi_buf);
          if (!(std::abs(v) <= 1e-9)) {
            throw ConfigError("Symbol: compact_support tag violated outside the stated radius");
          }
        }
      }
      break;
    }
    case SymbolClass::s_one: {
      for (double r : {0.0, 1.0, 5.0, 25.0, 100.0}) {
        for (const VecR& dir : dirs) {
          const double v = eval_at(*this, VecR(r * dir), x_buf, xi_buf);
          if (!std::isfinite(v) || std::abs(v) > 1e8) {
            throw ConfigError("Symbol: s_one tag violated (unbounded sample)");
          }
        }
      }
      break;
    }
    case SymbolClass::quadratic_elliptic: {
      const double a0 = at_origin();
      for (double r : {0.5, 1.0, 2.0, 4.0, 16.0, 64.0}) {
        for (const VecR& dir : dirs) {
          const double v = eval_at(*this, VecR(r * dir), x_buf, xi_buf);
          if (!(v >= a0 - 1e-12)) {
            throw ConfigError("Symbol: quadratic_elliptic tag violated (origin not the minimum)");
          }
          if (r >= 4.0) {
            const double ratio = (v - a0) / (r * r);
            if (!(ratio > 1e-8) || !(ratio < 1e8)) {
              throw ConfigError("Symbol: quadratic_elliptic tag violated (growth not quadratic)");
            }
          }
        }
      }
      break;
    }
  }
}

double Symbol::at_origin() const {
  VecR zero = VecR::Zero(m_d);
  return m_eval(zero, zero);
}

Symbol Symbol::constant(unsigned d, double value) {
  return Symbol(d, SymbolClass::s_one,
                [value](const VecR&, const VecR&) { return value; });
}

Symbol Symbol::gaussian(unsigned d, double decay) {
  if (!(decay > 0.0)) throw ConfigError("Symbol::gaussian: decay must be positive");
  return Symbol(d, SymbolClass::compact_support,
                [decay](const VecR& x, const VecR& xi) {
                  return std::exp(-decay * (x.squaredNorm() + xi.squaredNorm()));
                },
                std::sqrt(28.0 / decay));
}

Symbol Symbol::harmonic(unsigned d) {
  return Symbol(d, SymbolClass::quadratic_elliptic,
                [](const VecR& x, const VecR& xi) {
                  return 0.5 * (x.squaredNorm() + xi.squaredNorm());
                });
}

Symbol Symbol::plateau(unsigned d, double inner, double outer) {
  if (!(0.0 <= inner && inner < outer)) {
    throw ConfigError("Symbol::plateau: need 0 <= inner < outer");
  }
  return Symbol(d, SymbolClass::compact_support,
                [inner, outer](const VecR& x, const VecR& xi) {
                  const double r = std::sqrt(x.squaredNorm() + xi.squaredNorm());
                  return smooth_step_down((r - inner) / (outer - inner));
                },
                outer);
}

namespace {

void check_quantize_args(const Symbol& a, const PhaseSpaceGrid& grid, double h,
                         double t) {
  if (a.dimension() != grid.dimension()) {
    throw ConfigError("weyl_quantize: symbol and grid dimension differ");
  }
  if (!(h > 0.0)) throw ConfigError("weyl_quantize: h must be positive");
  if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("weyl_quantize: t must lie in [0,1]");
  if (a.tag() == SymbolClass::compact_support) {
    const double pos_cover = std::pow(h, t) * grid.half_width();
    const double mom_cover = std::pow(h, 1.0 - t) * grid.nyquist();
    if (pos_cover < a.support_radius() || mom_cover < a.support_radius()) {
      std::ostringstream os;
      os << "weyl_quantize: sampled window (|x| <= " << pos_cover
         << ", |xi| <= " << mom_cover << ") does not cover the symbol support radius "
         << a.support_radius();
      throw ConfigError(os.str());
    }
  }
}

// Shared assembly core. Writes through `put(row, col, value)`; `value` is the
// complex DFT output scaled by n^{-d} and the parity factor.
template <typename Put>
void assemble(const Symbol& a, const PhaseSpaceGrid& grid, double h, double t,
              Ordering ordering, Put&& put) {
  const unsigned n = grid.points();
  const unsigned d = grid.dimension();
  const double xs = std::pow(h, t);
  const double ps = std::pow(h, 1.0 - t);
  VecR x_buf(d), xi_buf(d);
  std::vector<cxd> buf(grid.matrix_dim());
  std::vector<double> xi(n);
  for (unsigned l = 0; l < n; ++l) xi[l] = ps * grid.momentum(l);

  auto wrap = [n](long delta) -> std::size_t {
    long r = delta % static_cast<long>(n);
    if (r < 0) r += n;
    return static_cast<std::size_t>(r);
  };

  // The position lattice is a ring of circumference 2L. Pairs separated by
  // more than half the ring must take the midpoint of their shorter arc,
  // which sits half a circumference away from the in-box average; using the
  // in-box average would couple the two box edges through the center and
  // plant O(1) spurious modes at the seam. n is even, so the parity factor
  // and the DFT index are unchanged by the half-ring shift.
  const long half = n / 2;
  const auto far_mid = [&grid](double mid) {
    return (mid >= 0.0) ? mid - grid.half_width() : mid + grid.half_width();
  };

  if (d == 1) {
    const double scale = 1.0 / n;
    if (ordering == Ordering::midpoint) {
      std::vector<cxd> buf_far(n);
      for (unsigned m = 0; m < 2 * n - 1; ++m) {
        const double mid = -grid.half_width() + 0.5 * m * grid.dx();
        x_buf(0) = xs * mid;
        for (unsigned l = 0; l < n; ++l) {
          xi_buf(0) = xi[l];
          buf[l] = a(x_buf, xi_buf);
        }
        dft_inplace(buf, +1);
        // Largest |j - k| on this anti-diagonal: m below n, 2n-2-m above.
        const long max_off = (m < n) ? m : 2 * static_cast<long>(n) - 2 - m;
        const bool has_far = max_off > half;
        if (has_far) {
          x_buf(0) = xs * far_mid(mid);
          for (unsigned l = 0; l < n; ++l) {
            xi_buf(0) = xi[l];
            buf_far[l] = a(x_buf, xi_buf);
          }
          dft_inplace(buf_far, +1);
        }
        const double signed_scale = sign_pow(m) * scale;
        const unsigned j_lo = (m >= n) ? m - n + 1 : 0;
        const unsigned j_hi = std::min(m, n - 1);
        for (unsigned j = j_lo; j <= j_hi; ++j) {
          const unsigned k = m - j;
          const long off = static_cast<long>(j) - k;
          const std::vector<cxd>& src =
              (has_far && std::labs(off) > half) ? buf_far : buf;
          put(j, k, signed_scale * src[wrap(off)]);
        }
      }
    } else {
      for (unsigned j = 0; j < n; ++j) {
        x_buf(0) = xs * grid.position(j);
        for (unsigned l = 0; l < n; ++l) {
          xi_buf(0) = xi[l];
          buf[l] = a(x_buf, xi_buf);
        }
        dft_inplace(buf, +1);
        for (unsigned k = 0; k < n; ++k) {
          put(j, k,
              static_cast<double>(sign_pow(static_cast<long>(j) - k)) * scale *
                  buf[wrap(static_cast<long>(j) - k)]);
        }
      }
    }
    return;
  }

  // d == 2; grid index (j1, j2) maps to row j1*n + j2. The shorter-arc
  // midpoint rule applies per axis, so an anti-diagonal pair carries up to
  // four sampled profiles (near/far in each axis).
  const double scale = 1.0 / (static_cast<double>(n) * n);
  if (ordering == Ordering::midpoint) {
    const auto axis_max_off = [&](unsigned m) -> long {
      return (m < n) ? static_cast<long>(m)
                     : 2 * static_cast<long>(n) - 2 - static_cast<long>(m);
    };
    std::vector<cxd> bufs[4];
    for (auto& b : bufs) b.resize(grid.matrix_dim());
    for (unsigned m1 = 0; m1 < 2 * n - 1; ++m1) {
      const double mid1 = -grid.half_width() + 0.5 * m1 * grid.dx();
      const bool far1 = axis_max_off(m1) > half;
      for (unsigned m2 = 0; m2 < 2 * n - 1; ++m2) {
        const double mid2 = -grid.half_width() + 0.5 * m2 * grid.dx();
        const bool far2 = axis_max_off(m2) > half;
        for (unsigned v = 0; v < 4; ++v) {
          if ((v & 1) && !far1) continue;
          if ((v & 2) && !far2) continue;
          x_buf(0) = xs * ((v & 1) ? far_mid(mid1) : mid1);
          x_buf(1) = xs * ((v & 2) ? far_mid(mid2) : mid2);
          for (unsigned l1 = 0; l1 < n; ++l1) {
            xi_buf(0) = xi[l1];
            for (unsigned l2 = 0; l2 < n; ++l2) {
              xi_buf(1) = xi[l2];
              bufs[v][static_cast<std::size_t>(l1) * n + l2] = a(x_buf, xi_buf);
            }
          }
          dft2_inplace(bufs[v], static_cast<int>(n), static_cast<int>(n), +1);
        }
        const double signed_scale = sign_pow(static_cast<long>(m1) + m2) * scale;
        const unsigned j1_lo = (m1 >= n) ? m1 - n + 1 : 0;
        const unsigned j1_hi = std::min(m1, n - 1);
        const unsigned j2_lo = (m2 >= n) ? m2 - n + 1 : 0;
        const unsigned j2_hi = std::min(m2, n - 1);
        for (unsigned j1 = j1_lo; j1 <= j1_hi; ++j1) {
          const unsigned k1 = m1 - j1;
          const long off1 = static_cast<long>(j1) - k1;
          const std::size_t r1 = wrap(off1);
          const unsigned pick1 = (far1 && std::labs(off1) > half) ? 1u : 0u;
          for (unsigned j2 = j2_lo; j2 <= j2_hi; ++j2) {
            const unsigned k2 = m2 - j2;
            const long off2 = static_cast<long>(j2) - k2;
            const unsigned pick =
                pick1 | ((far2 && std::labs(off2) > half) ? 2u : 0u);
            put(static_cast<std::size_t>(j1) * n + j2,
                static_cast<std::size_t>(k1) * n + k2,
                signed_scale * bufs[pick][r1 * n + wrap(off2)]);
          }
        }
      }
    }
  } else {
    for (unsigned j1 = 0; j1 < n; ++j1) {
      x_buf(0) = xs * grid.position(j1);
      for (unsigned j2 = 0; j2 < n; ++j2) {
        x_buf(1) = xs * grid.position(j2);
        for (unsigned l1 = 0; l1 < n; ++l1) {
          xi_buf(0) = xi[l1];
          for (unsigned l2 = 0; l2 < n; ++l2) {
            xi_buf(1) = xi[l2];
            buf[static_cast<std::size_t>(l1) * n + l2] = a(x_buf, xi_buf);
          }
        }
        dft2_inplace(buf, static_cast<int>(n), static_cast<int>(n), +1);
        for (unsigned k1 = 0; k1 < n; ++k1) {
          const std::size_t r1 = wrap(static_cast<long>(j1) - k1);
          for (unsigned k2 = 0; k2 < n; ++k2) {
            const long par = static_cast<long>(j1) - k1 + static_cast<long>(j2) - k2;
            put(static_cast<std::size_t>(j1) * n + j2,
                static_cast<std::size_t>(k1) * n + k2,
                static_cast<double>(sign_pow(par)) * scale *
                    buf[r1 * n + wrap(static_cast<long>(j2) - k2)]);
          }
        }
      }
    }
  }
}

}  // namespace

Mat weyl_quantize(const Symbol& a, const PhaseSpaceGrid& grid, double h,
                  double t, Ordering ordering) {
  check_quantize_args(a, grid, h, t);
  const std::size_t dim = grid.matrix_dim();
  require_budget(dim * dim * sizeof(cxd), "weyl_quantize matrix");
  Mat out(dim, dim);
  assemble(a, grid, h, t, ordering,
           [&out](std::size_t row, std::size_t col, cxd v) {
             out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
           });
  return out;
}

MatR weyl_quantize_real(const Symbol& a, const PhaseSpaceGrid& grid, double h,
                        double t) {
  check_quantize_args(a, grid, h, t);
  // The real-symmetric shortcut is only valid for symbols even in momentum.
  {
    const unsigned d = grid.dimension();
    VecR x_buf(d), xi_buf(d), xi_neg(d);
    const std::vector<VecR> dirs = probe_directions(2 * d);
    for (double r : {0.37, 1.21, 2.83}) {
      for (const VecR& dir : dirs) {
        for (unsigned i = 0; i < d; ++i) {
          x_buf(i) = r * dir(i);
          xi_buf(i) = r * dir(d + i);
          xi_neg(i) = -xi_buf(i);
        }
        const double plus = a(x_buf, xi_buf);
        const double minus = a(x_buf, xi_neg);
        if (std::abs(plus - minus) > 1e-12 * std::max(1.0, std::abs(plus))) {
          throw ConfigError("weyl_quantize_real: symbol is not even in momentum");
        }
      }
    }
  }
  const std::size_t dim = grid.matrix_dim();
  require_budget(dim * dim * sizeof(double), "weyl_quantize_real matrix");
  MatR out(dim, dim);
  assemble(a, grid, h, t, Ordering::midpoint,
           [&out](std::size_t row, std::size_t col, cxd v) {
             out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v.real();
           });
  // Exact symmetrization (the DFT introduces rounding-level asymmetry).
  for (Eigen::Index j = 0; j < out.rows(); ++j) {
    for (Eigen::Index k = j + 1; k < out.cols(); ++k) {
      const double avg = 0.5 * (out(j, k) + out(k, j));
      out(j, k) = avg;
      out(k, j) = avg;
    }
  }
  return out;
}

double trace_pair(const Symbol& a, const Symbol& b, const PhaseSpaceGrid& grid,
                  double h, double t) {
  Mat qa = weyl_quantize(a, grid, h, t);
  Mat qb = weyl_quantize(b, grid, h, t);
  const cxd tr = (qa.cwiseProduct(qb.transpose())).sum();
  return std::pow(h, static_cast<double>(grid.dimension())) * tr.real();
}

void validate_singular_weight(const SingularWeight& fw, unsigned d) {
  if (!fw.f) throw ConfigError("SingularWeight: empty weight function");
  if (!(0.0 < fw.kappa0 && fw.kappa0 < d && d < fw.kappa_inf)) {
    throw ConfigError("SingularWeight: need 0 < kappa0 < d < kappa_inf");
  }
  if (!(fw.f0 > 0.0)) throw ConfigError("SingularWeight: f0 must be positive");
  for (double u : {1e-8, 1e-10}) {
    const double r = std::pow(u, fw.kappa0) * fw.f(u);
    if (!(std::abs(r / fw.f0 - 1.0) <= 1e-3)) {
      throw ConfigError("SingularWeight: u^{kappa0} f(u) does not approach f0");
    }
  }
  for (double u = 1e2; u <= 1e8; u *= 10.0) {
    const double s = std::pow(u, fw.kappa_inf) * fw.f(u);
    if (!std::isfinite(s) || s < 0.0 || s > 1e6) {
      throw ConfigError("SingularWeight: large-u bound u^{-kappa_inf} violated");
    }
  }
  double prev = fw.f(1e-6);
  for (double u = 1e-6; u <= 1e6; u *= std::sqrt(10.0)) {
    const double v = fw.f(u);
    if (!(v >= 0.0) || v > prev * (1.0 + 1e-10)) {
      throw ConfigError("SingularWeight: weight must be nonnegative and decreasing");
    }
    prev = v;
  }
}

double singular_limit_integral(const SingularWeight& fw, const Symbol& alpha,
                               const Symbol& a, double radius) {
  if (alpha.dimension() != 1 || a.dimension() != 1) {
    throw ConfigError("singular_limit_integral: d = 1 only");
  }
  if (!(radius > 0.0)) throw ConfigError("singular_limit_integral: positive radius required");
  const unsigned n_theta = 32;
  const unsigned n_v = 1 << 13;  // Simpson panels (even count)
  const double v_max = std::sqrt(radius);
  const double dv = v_max / n_v;
  VecR x_buf(1), xi_buf(1);
  double theta_sum = 0.0;
  for (unsigned ti = 0; ti < n_theta; ++ti) {
    const double theta = 2.0 * M_PI * ti / n_theta;
    const double cx = std::cos(theta);
    const double sx = std::sin(theta);
    // r = v^2 substitution: integrand 2 v^3 f(alpha(r w)) a(r w), zero at v=0.
    auto integrand = [&](double v) -> double {
      if (v == 0.0) return 0.0;
      const double r = v * v;
      x_buf(0) = r * cx;
      xi_buf(0) = r * sx;
      const double u = alpha(x_buf, xi_buf);
      if (!(u > 0.0)) {
        throw ConfigError("singular_limit_integral: alpha must be positive away from the origin");
      }
      return 2.0 * v * v * v * fw.f(u) * a(x_buf, xi_buf);
    };
    double acc = integrand(0.0) + integrand(v_max);
    for (unsigned i = 1; i < n_v; ++i) {
      acc += integrand(i * dv) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    theta_sum += acc * dv / 3.0;
  }
  // (1/2pi) * (2pi/n_theta) * sum of radial integrals.
  return theta_sum / n_theta;
}

std::vector<SingularTraceTable> singular_trace(
    const SingularWeight& fw, const Symbol& alpha, const Symbol& a,
    const std::vector<double>& h_schedule, const std::vector<double>& c_values,
    double support_bound, unsigned max_points) {
  if (alpha.dimension() != 1) {
    throw ConfigError("singular_trace: one-dimensional studies only");
  }
  if (alpha.tag() != SymbolClass::quadratic_elliptic) {
    throw ConfigError("singular_trace: alpha must be tagged quadratic_elliptic");
  }
  if (h_schedule.empty() || c_values.empty()) {
    throw ConfigError("singular_trace: empty schedule");
  }
  const unsigned d = 1;
  validate_singular_weight(fw, d);
  const double int_radius =
      (a.tag() == SymbolClass::compact_support)
          ? std::min(a.support_radius(), support_bound)
          : support_bound;
  const double integral = singular_limit_integral(fw, alpha, a, int_radius);
  const double a0 = a.at_origin();

  std::vector<SingularTraceTable> tables(c_values.size());
  for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
    tables[ci].c = c_values[ci];
    tables[ci].condensate_term = fw.f0 * std::pow(c_values[ci], -fw.kappa0) * a0;
    tables[ci].integral_term = integral;
    tables[ci].limit = tables[ci].condensate_term + integral;
  }

  for (double h : h_schedule) {
    PhaseSpaceGrid grid = balanced_grid(d, support_bound, h);
    if (grid.points() > max_points) {
      std::ostringstream os;
      os << "singular_trace: h = " << h << " needs " << grid.points()
         << " grid points, above the cap " << max_points;
      throw ResourceError(os.str());
    }
    VecR diag;
    VecR values;
    {
      MatR quant = weyl_quantize_real(alpha, grid, h, 0.5);
      SymEig eig = symmetric_eig(quant);
      quant.resize(0, 0);
      MatR aq = weyl_quantize_real(a, grid, h, 0.5);
      MatR av = aq * eig.vectors;
      aq.resize(0, 0);
      diag = (eig.vectors.cwiseProduct(av)).colwise().sum().transpose();
      values = eig.values;
    }
    const double lambda0 = values(0);
    for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
      const double shift = c_values[ci] * std::pow(h, d / fw.kappa0);
      double total = 0.0;
      for (Eigen::Index i = 0; i < values.size(); ++i) {
        total += fw.f(values(i) - lambda0 + shift) * diag(i);
      }
      const double value = std::pow(h, static_cast<double>(d)) * total;
      ConvergenceRow row;
      row.h = h;
      row.value = value;
      row.predicted = tables[ci].limit;
      row.abs_error = std::abs(value - row.predicted);
      row.rel_error = row.abs_error / std::abs(row.predicted);
      tables[ci].rows.push_back(row);
      tables[ci].n_points.push_back(grid.points());
    }
  }

  for (SingularTraceTable& table : tables) {
    std::vector<double> hs, errs;
    for (const ConvergenceRow& row : table.rows) {
      hs.push_back(row.h);
      errs.push_back(row.abs_error);
    }
    table.fitted_order = log_log_slope(hs, errs);
  }
  return tables;
}

}  // namespace fockbench
