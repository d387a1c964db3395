#pragma once

#include "chorex/fairness.hpp"
#include "chorex/model.hpp"
#include "chorex/rw_query.hpp"
#include "chorex/simplex.hpp"

namespace chorex {

// Constraint families layered on the assignment LP. Eps mode relaxes each
// swap row's right side by +eps. SwapStable adds one row per agent and
// unordered pair of holders (subsumes the swap-envy rows).
enum class LpMode {
  Unconstrained,
  Proportional,
  ProportionalSwapEF,
  ProportionalEpsSwapEF,
  SwapStable,
};

const char* lp_mode_name(LpMode mode);

// x(i,k) = fraction of refinement interval k assigned to agent i.
// Entries >= 0, every column sums to 1.
struct FractionMatrix {
  int n = 0, m = 0;
  std::vector<Rational> x;

  static FractionMatrix uniform(int n, int m);
  Rational& at(int i, int k) { return x[static_cast<size_t>(i * m + k)]; }
  const Rational& at(int i, int k) const { return x[static_cast<size_t>(i * m + k)]; }
  void validate() const;  // InvalidFractions on violation
};

// Assign each refinement interval wholly to the holder with the least column
// sum (sum_i V_{i,j}(I_k)), ties to the lowest index.
Allocation greedy_optimal(const Instance& inst);

// Same selection routed through evaluate queries; costs exactly m*n^2 queries.
Allocation greedy_optimal_queried(RwSession& session);

LpProblem build_lp(const Instance& inst, LpMode mode, const Rational& eps = Rational(0));

// Exact realization of fractions: contiguous slices in agent order for
// piecewise-constant instances, midpoint-symmetric slice pairs otherwise, so
// V_{i,j}(piece of I_k) = x(p,k) * V_{i,j}(I_k) for every density.
Allocation realize_fractions(const Instance& inst, const FractionMatrix& fr);

struct OptimalResult {
  Allocation allocation;
  FractionMatrix fractions;
  Rational objective;
  FairnessReport report;
};

// build_lp + solve_lp + realize_fractions + audit. Throws InfeasibleModel if
// the LP is infeasible (cannot happen for the built-in modes on normalized
// instances: uniform fractions are always feasible).
OptimalResult optimal_fair_allocation(const Instance& inst, LpMode mode,
                                      const Rational& eps = Rational(0));

}  // namespace chorex
