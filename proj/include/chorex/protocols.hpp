#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "chorex/model.hpp"

namespace chorex {

// F(x) = V21([0,x]) + V22([x,1]) - V21([x,1]) - V22([0,x]) for a two-agent
// instance, stored per refinement segment as c0 + c1*x + c2*x^2.
// F(0) + F(1) = 0, so a root always exists in [0,1].
class BalanceFunction {
 public:
  struct Seg {
    Interval interval;
    Rational c0, c1, c2;
  };

  static BalanceFunction build(const Instance& inst);  // NotTwoAgents if n != 2
  Rational eval(const Rational& x) const;
  // Smallest root in [0,1]; IrrationalCutError when the first root of a
  // quadratic segment is irrational.
  Rational smallest_root() const;
  const std::vector<Seg>& segments() const { return segs_; }

 private:
  std::vector<Seg> segs_;
};

Rational find_balance_point(const Instance& inst);

// Cut at the balance point; agent 1 takes whichever side costs them less
// (left side on ties), agent 2 is exactly indifferent.
Allocation two_agent_protocol(const Instance& inst);

// Each refinement interval is split into n equal slices, slice i to agent i.
// Piecewise-constant instances only.
Allocation uniform_allocation(const Instance& inst);

// Each refinement interval [a,b] is split into 2n slices of width (b-a)/(2n);
// agent i takes the i-th slice from each end. Exact for linear densities.
Allocation sandwich_allocation(const Instance& inst);

// Family with a proportional contiguous allocation whose swap-envy gap for
// agent 1 is exactly 1/n - 1/(n(n-1)). Requires n >= 3 and 0 < eps < 1.
Instance lower_bound_instance(int n, const Rational& eps);

// Bundled fixture: instance document, optional allocation, recomputed
// properties, and notes where recomputation contradicts the source's claims.
struct PaperFixture {
  std::string id;
  nlohmann::ordered_json instance_doc;
  std::optional<nlohmann::ordered_json> allocation_doc;
  nlohmann::ordered_json expected;
  std::vector<std::string> discrepancies;
};

// id in {ex1, ex2, ex3, ex4, thm8}; ex1 is a family parameterized by n.
PaperFixture paper_example(const std::string& id, int n = 3);

// For the thm8 fixture: V_{1,1}(A_1) - V_{1,2}(A_1), which every complete
// proportional allocation pins to 1/6.
Rational symmetric_fixture_gap(const Instance& inst, const Allocation& alloc);

}  // namespace chorex
