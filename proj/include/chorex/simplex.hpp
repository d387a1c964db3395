#pragma once

#include <string>
#include <vector>

#include "chorex/rational.hpp"

namespace chorex {

enum class Sense { LE, EQ, GE };

struct LpRow {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LE;
  Rational rhs;
  std::string label;
};

// Minimize objective . x subject to rows and x >= 0.
struct LpProblem {
  int vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  std::string mode_label;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<Rational> x;
  Rational objective;
  // Infeasible: multipliers y per row (y_i >= 0 for LE, <= 0 for GE, free for
  // EQ) with sum_i y_i * row_i having componentwise nonnegative coefficients
  // and negative combined rhs.
  std::vector<Rational> farkas;
  // Unbounded: direction d >= 0 with c.d < 0 preserving feasibility.
  std::vector<Rational> ray;
};

// Dense-tableau two-phase simplex with Bland's rule; exact arithmetic, always
// terminates.
LpSolution solve_lp(const LpProblem& problem);

// One row per line: "min c1 ... cn", then "<sense> c1 ... cn rhs  # label"
// with sense in {le, eq, ge}; x >= 0 is implicit.
std::string lp_to_text(const LpProblem& problem);

}  // namespace chorex
