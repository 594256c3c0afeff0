#pragma once

#include <functional>
#include <vector>

#include "fockbench/common.hpp"
#include "fockbench/linalg.hpp"

namespace fockbench {

// -------------------------------------------------------------------------
// Discretized phase-space quantization on a periodic position grid.
//
// Position box [-L, L)^d sampled at n points per axis (n a power of two),
// x_j = -L + j * dx with dx = 2L/n.  Discrete Fourier duality induces the
// momentum lattice xi_l = (l - n/2) * dxi with dxi = pi/L, so the covered
// momentum band is [-n pi/(2L), n pi/(2L)).
//
// An operator with scale parameters (h, t) samples a symbol a at the points
// (h^t x, h^{1-t} xi); the kernel quadrature gives the matrix
//   K[j,k] = n^{-d} (-1)^{j-k} sum_l e^{2 pi i l (j-k)/n} a(h^t mid, h^{1-t} xi_l),
// with mid = (x_j + x_k)/2 for midpoint (symmetric) ordering, or mid = x_j
// for standard ordering.  One inverse DFT per anti-diagonal assembles K.
// -------------------------------------------------------------------------

class PhaseSpaceGrid {
 public:
  PhaseSpaceGrid(unsigned d, double half_width, unsigned n_pts);

  unsigned dimension() const { return m_d; }
  double half_width() const { return m_half_width; }
  unsigned points() const { return m_n; }
  // Grid-space dimension n^d (the matrix side length).
  std::size_t matrix_dim() const { return m_matrix_dim; }

  double dx() const { return 2.0 * m_half_width / m_n; }
  double dxi() const { return M_PI / m_half_width; }
  // Largest representable momentum magnitude, n*pi/(2L).
  double nyquist() const { return m_n * M_PI / (2.0 * m_half_width); }

  double position(unsigned j) const { return -m_half_width + j * dx(); }
  double momentum(unsigned l) const {
    return (static_cast<double>(l) - 0.5 * m_n) * dxi();
  }

 private:
  unsigned m_d;
  double m_half_width;
  unsigned m_n;
  std::size_t m_matrix_dim;
};

// Grid sized so that at scale (h, t = 1/2) both the covered position box and
// the covered momentum band reach `support_bound`:  n = 2^ceil with
// n >= 2 B^2/(pi h) and L = sqrt(n pi / 2) balance the two exactly.
PhaseSpaceGrid balanced_grid(unsigned d, double support_bound, double h,
                             unsigned min_points = 16);

// -------------------------------------------------------------------------
// Symbols: real-valued functions on phase space R^{2d}, carrying a class tag
// that is spot-checked numerically at construction.
// -------------------------------------------------------------------------

enum class SymbolClass {
  compact_support,    // |a| <= 1e-9 outside |X| <= support_radius
  s_one,              // bounded
  quadratic_elliptic  // minimum at X = 0, quadratic growth
};

class Symbol {
 public:
  // Evaluation rule a(x, xi); both arguments have length d.
  using Eval = std::function<double(const VecR& x, const VecR& xi)>;

  Symbol(unsigned d, SymbolClass tag, Eval eval, double support_radius = 0.0);

  double operator()(const VecR& x, const VecR& xi) const { return m_eval(x, xi); }
  unsigned dimension() const { return m_d; }
  SymbolClass tag() const { return m_tag; }
  double support_radius() const { return m_support_radius; }

  // a(0, 0).
  double at_origin() const;

  // Ready-made symbols.
  static Symbol constant(unsigned d, double value);
  // e^{-decay |X|^2}; effective support radius sqrt(28/decay).
  static Symbol gaussian(unsigned d, double decay);
  // |X|^2 / 2.
  static Symbol harmonic(unsigned d);
  // Smooth radial cutoff: 1 on |X| <= inner, 0 on |X| >= outer.
  static Symbol plateau(unsigned d, double inner, double outer);

 private:
  unsigned m_d;
  SymbolClass m_tag;
  Eval m_eval;
  double m_support_radius;
};

// C-infinity step: 1 for s <= 0, 0 for s >= 1, strictly decreasing between.
double smooth_step_down(double s);

enum class Ordering { midpoint, standard };

// Dense quantized matrix of `a` at scale (h, t) on the grid.  Hermitian up to
// DFT rounding for midpoint ordering (the symbols here are real-valued).
// Throws ConfigError when a compactly supported symbol is not covered by the
// sampled phase-space window.
Mat weyl_quantize(const Symbol& a, const PhaseSpaceGrid& grid, double h,
                  double t, Ordering ordering = Ordering::midpoint);

// Midpoint-ordered quantization assembled directly as a real symmetric
// matrix.  Requires the symbol to be even in xi (checked by sampling); this
// halves memory and enables the real eigensolver for large grids.
MatR weyl_quantize_real(const Symbol& a, const PhaseSpaceGrid& grid, double h,
                        double t);

// h^d Tr[a^{W,h} b^{W,h}]; converges to the phase-space pairing
// integral of a*b / (2 pi)^d as h -> 0 for compactly supported symbols.
double trace_pair(const Symbol& a, const Symbol& b, const PhaseSpaceGrid& grid,
                  double h, double t = 0.5);

// -------------------------------------------------------------------------
// Singular weights f and the shifted-trace asymptotics
//   h^d Tr[ f(H + c h^{d/kappa0}) a^{W,h} ],   H = alpha^{W,h} - lambda_0,
// whose h -> 0 limit splits into a ground-state term f0 c^{-kappa0} a(0)
// plus the phase-space integral of f(alpha) a.
// -------------------------------------------------------------------------

struct SingularWeight {
  std::function<double(double)> f;  // decreasing on (0, infinity)
  double kappa0 = 0.0;              // u^{kappa0} f(u) -> f0 as u -> 0+
  double kappa_inf = 0.0;           // f(u) = O(u^{-kappa_inf}) at infinity
  double f0 = 0.0;
};

// Numeric checks of the weight's stated exponents on log-spaced grids:
// 0 < kappa0 < d < kappa_inf, small-u limit within 0.1%, large-u bound
// finite, monotone decreasing.  Throws ConfigError on violation.
void validate_singular_weight(const SingularWeight& fw, unsigned d);

struct SingularTraceTable {
  double c = 0.0;               // spectral shift coefficient
  double condensate_term = 0.0; // f0 c^{-kappa0} a(0)
  double integral_term = 0.0;   // integral of f(alpha) a / (2 pi)^d
  double limit = 0.0;           // sum of the two
  std::vector<ConvergenceRow> rows;  // one per h, value vs limit
  std::vector<unsigned> n_points;    // grid size used per h
  double fitted_order = 0.0;         // log-log slope of |error| vs h
};

// Runs the shifted-trace study over the h schedule for every shift
// coefficient in `c_values`, reusing one eigendecomposition per h.
// d = 1 only (dense eigensolves at n up to max_points).
std::vector<SingularTraceTable> singular_trace(
    const SingularWeight& fw, const Symbol& alpha, const Symbol& a,
    const std::vector<double>& h_schedule, const std::vector<double>& c_values,
    double support_bound, unsigned max_points = 8192);

// Phase-space integral of f(alpha(X)) a(X) / (2 pi)^d over R^2 (d = 1) by
// polar quadrature with the r = v^2 substitution that absorbs the u^{-kappa0}
// singularity of f at the elliptic minimum (accurate for kappa0 <= 3/4).
double singular_limit_integral(const SingularWeight& fw, const Symbol& alpha,
                               const Symbol& a, double radius);

}  // namespace fockbench
