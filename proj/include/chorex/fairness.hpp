#pragma once

#include <vector>

#include "chorex/model.hpp"

namespace chorex {

enum class Notion { Proportional, SwapEF, SwapStable };

const char* notion_name(Notion n);

// Witness of a failed inequality; indices are 0-based agents.
struct Violation {
  enum class Kind { ProportionalExcess, SwapEnvy, SwapInstability };
  Kind kind;
  int i = -1, j = -1, k = -1;
  Rational lhs, rhs;  // lhs > rhs demonstrates the violation
};

struct FairnessVerdict {
  Notion notion;
  Rational epsilon;
  bool holds = false;
  std::vector<Violation> witnesses;
};

// Precomputed V_{i,j}(A_p) so each check is pure table arithmetic.
class ValueTable {
 public:
  static ValueTable build(const Instance& inst, const Allocation& alloc);
  int agents() const { return n_; }
  const Rational& v(int i, int j, int p) const {
    return w_[static_cast<size_t>((i * n_ + j) * n_ + p)];
  }
  // V_i(A) = sum_j v(i, j, j).
  Rational agent_total(int i) const;

 private:
  int n_ = 0;
  std::vector<Rational> w_;
};

// V_i(A) <= 1/n + eps for every agent.
FairnessVerdict check_proportional(const ValueTable& t, const Rational& eps);
// For every ordered pair i != j:
//   v(i,i,i) + v(i,j,j) <= v(i,i,j) + v(i,j,i) + eps.
FairnessVerdict check_swap_ef(const ValueTable& t, const Rational& eps);
// For every agent i and unordered pair {j,k} (i may be j or k):
//   v(i,j,j) + v(i,k,k) <= v(i,j,k) + v(i,k,j) + eps.
FairnessVerdict check_swap_stable(const ValueTable& t, const Rational& eps);

FairnessVerdict check_proportional(const Instance& inst, const Allocation& alloc,
                                   const Rational& eps);
FairnessVerdict check_swap_ef(const Instance& inst, const Allocation& alloc,
                              const Rational& eps);
FairnessVerdict check_swap_stable(const Instance& inst, const Allocation& alloc,
                                  const Rational& eps);

struct FairnessReport {
  std::vector<Rational> values;  // V_i(A)
  Rational social_cost;
  int cuts = 0;
  FairnessVerdict proportional, swap_ef, swap_stable;
  bool all_hold() const {
    return proportional.holds && swap_ef.holds && swap_stable.holds;
  }
};

FairnessReport audit(const Instance& inst, const Allocation& alloc,
                     const Rational& eps);

}  // namespace chorex
