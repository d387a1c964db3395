#pragma once

#include <cstdint>

#include "chorex/model.hpp"

namespace chorex {

// Per-(i,j) counters for the two query types.
struct QueryLedger {
  int n = 0;
  std::vector<int64_t> evals, cuts;

  explicit QueryLedger(int agents)
      : n(agents),
        evals(static_cast<size_t>(agents) * agents, 0),
        cuts(static_cast<size_t>(agents) * agents, 0) {}
  int64_t eval_count(int i, int j) const { return evals[static_cast<size_t>(i * n + j)]; }
  int64_t cut_count(int i, int j) const { return cuts[static_cast<size_t>(i * n + j)]; }
  int64_t total() const;
  void reset();
};

// Query access to an instance's valuations with usage accounting.
class RwSession {
 public:
  explicit RwSession(const Instance& inst)
      : inst_(&inst), ledger_(inst.agents()) {}

  // V_{i,j}([x,y]); requires 0 <= x <= y <= 1.
  Rational evaluate(int i, int j, const Rational& x, const Rational& y);

  // Smallest y >= x with V_{i,j}([x,y]) = alpha (leftmost point on zero
  // plateaus). Throws Unreachable with the shortfall when alpha exceeds the
  // remaining mass, IrrationalCutError when the exact solution is irrational.
  Rational cut(int i, int j, const Rational& x, const Rational& alpha);

  const Instance& instance() const { return *inst_; }
  const QueryLedger& ledger() const { return ledger_; }
  void reset_ledger() { ledger_.reset(); }

 private:
  const Instance* inst_;
  QueryLedger ledger_;
};

}  // namespace chorex
