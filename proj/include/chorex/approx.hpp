#pragma once

#include <functional>

#include "chorex/io.hpp"
#include "chorex/optimize.hpp"

namespace chorex {

// Black-box density: pointwise evaluator plus the promised Lipschitz constant
// and value bounds. The promises are spot-checked at sample points.
struct DensityOracle {
  std::function<double(double)> f;
  Rational K;  // |f(x) - f(y)| <= K|x - y|
  Rational M;  // lower bound on values
  Rational U;  // upper bound on values
};

// Multiples of 2^-a inside [0, range_top].
struct DyadicGrid {
  int a = 0;
  Rational range_top;

  // a = ceil(2 + log2(1/eps)).
  static DyadicGrid for_eps(const Rational& eps, const Rational& range_top);
  Rational resolution() const { return pow2(-a); }
};

// Largest grid element <= value. Throws OutOfRange outside [0, range_top].
Rational dyadic_floor(const Rational& value, const DyadicGrid& grid);
Rational dyadic_floor(double value, const DyadicGrid& grid);

enum class ApproxMode { Prop, SwapEf };
const char* approx_mode_name(ApproxMode mode);

struct DiscretizationResult {
  Instance instance;  // piecewise constant on a uniform grid, sub-normalized
  int subinterval_count = 0;
  DyadicGrid grid;
  Rational cell_width;
  Rational band;           // target gap: eps/n (prop) or eps/4 (swapef)
  Rational certified_gap;  // guaranteed pointwise v - v': (3/2)K*h + 2^-a
  Rational k_max;
  std::vector<Rational> minima;   // margin-adjusted sampled minima, (i*n+j)*cells+k
  std::vector<Rational> rounded;  // dyadic-floored values actually used
};

// Sample each cell at its endpoints and midpoint, subtract the K*h/2 safety
// margin, clamp at 0, floor onto the dyadic grid. The result underestimates
// the true density everywhere. Cell count: ceil(2nK/eps) for prop,
// ceil(8K/eps) for swapef, at least 1.
DiscretizationResult discretize(const std::vector<std::vector<DensityOracle>>& oracles,
                                const Rational& eps, ApproxMode mode);

// Quadrature audit of an allocation against the true oracles.
struct TrueAudit {
  int quadrature_cells = 0;
  double tolerance = 1e-6;
  double quadrature_bound = 0;  // analytic midpoint-rule error bound
  std::vector<double> values;   // true V_i(A)
  double social_cost = 0;
  bool proportional = false;    // V_i <= 1/n + tolerance + bound
  bool swap_ef_checked = false;
  bool swap_ef = true;          // at eps, swapef mode only
};

struct ApproxResult {
  DiscretizationResult disc;
  Allocation allocation;
  FairnessReport discrete_report;  // exact audit on the discretized instance
  Rational lp_objective;           // certified lower bound on the true optimum
  Rational bound;                  // eps (prop) or n*eps/4 (swapef)
  TrueAudit truth;
  bool within_bound = false;  // true cost <= lp_objective + bound + slack
};

// discretize, solve the piecewise-constant relaxation (Proportional mode, or
// ProportionalEpsSwapEF at eps/2 for swapef), then audit against the true
// oracles with a composite midpoint rule on 64*ceil(2nK/eps) cells.
ApproxResult approx_optimal(const std::vector<std::vector<DensityOracle>>& oracles,
                            const Rational& eps, ApproxMode mode,
                            double tolerance = 1e-6);

// Wrap an exact piecewise-linear density as an oracle; the density must be
// continuous for the Lipschitz promise (K = max |slope|) to hold.
DensityOracle oracle_from_density(const PiecewiseDensity& d);

// Oracle-spec document: {"n": 2, "oracles": [[{...}, ...], ...]} where each
// entry is {"family": "poly"|"sin"|"pwl", ..., "K": R, "M": R, "U": R}.
// poly: {"coeffs": [c0, c1, ...]}              v(x) = sum c_t x^t
// sin:  {"shift": R, "amp": R, "freq": R, "phase": R}
//                                               v(x) = shift + amp*sin(freq*x + phase)
// pwl:  {"points": [[x, y], ...]}               linear interpolation
std::vector<std::vector<DensityOracle>> oracles_from_json(const Json& doc);

}  // namespace chorex
