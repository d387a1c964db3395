#pragma once

#include <vector>

#include "chorex/errors.hpp"
#include "chorex/rational.hpp"

namespace chorex {

// Closed subinterval of the chore [0,1].
struct Interval {
  Rational lo, hi;
  Rational length() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }
};

bool operator==(const Interval& a, const Interval& b);

// Finite union of intervals in canonical form: sorted, pairwise disjoint
// interiors, adjacent/overlapping runs merged, degenerate intervals dropped
// (measure zero is treated as empty).
class Piece {
 public:
  Piece() = default;
  static Piece of(std::vector<Interval> intervals);
  static Piece of(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const { return ivs_; }
  bool empty() const { return ivs_.empty(); }
  Rational measure() const;

 private:
  std::vector<Interval> ivs_;
};

bool operator==(const Piece& a, const Piece& b);

// pieces[i] = bundle held by agent i. Disjointness/completeness are checked by
// validate_allocation, not enforced structurally.
struct Allocation {
  std::vector<Piece> pieces;

  static Allocation empty(int n) { return Allocation{std::vector<Piece>(static_cast<size_t>(n))}; }
  // A_i = [(i-1)/n, i/n].
  static Allocation contiguous(int n);
};

bool operator==(const Allocation& a, const Allocation& b);

// Density a + b*x on one interval; must be >= 0 at both endpoints.
struct DensitySegment {
  Interval interval;
  Rational a, b;
  Rational value_at(const Rational& x) const { return a + b * x; }
};

// Piecewise-linear density whose segments tile [0,1] exactly.
class PiecewiseDensity {
 public:
  explicit PiecewiseDensity(std::vector<DensitySegment> segments);

  const std::vector<DensitySegment>& segments() const { return segs_; }
  bool constant() const;  // every segment has zero slope
  Rational total() const; // integral over [0,1]

  // Step function given as (lo, hi, value) runs tiling [0,1].
  static PiecewiseDensity step(const std::vector<std::pair<Interval, Rational>>& runs);
  static PiecewiseDensity constant_density(const Rational& value);
  // value on [lo,hi], zero elsewhere.
  static PiecewiseDensity on_support(const Interval& support, const Rational& value);
  // Single segment a + b*x over all of [0,1].
  static PiecewiseDensity linear(const Rational& a, const Rational& b);

  PiecewiseDensity scaled(const Rational& factor) const;

 private:
  std::vector<DensitySegment> segs_;
};

// Integral of the density over [x,y] (clipped to [0,1]).
Rational eval_value(const PiecewiseDensity& density, const Interval& iv);
Rational eval_value(const PiecewiseDensity& density, const Piece& piece);

// n agents with an n-by-n matrix of densities; breakpoints() is the common
// refinement of every density's segment boundaries.
class Instance {
 public:
  enum class Normalization {
    Require,  // reject unless every agent's densities integrate to 1
    Rescale,  // divide each agent's row by its total
    Allow,    // accept as-is (discretized instances are sub-normalized)
  };

  static Instance make(std::vector<std::vector<PiecewiseDensity>> densities,
                       Normalization policy = Normalization::Require,
                       std::vector<Rational>* scales_out = nullptr);

  int agents() const { return n_; }
  int interval_count() const { return static_cast<int>(breaks_.size()) - 1; }
  const PiecewiseDensity& density(int i, int j) const;
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  Interval refinement_interval(int k) const;
  bool piecewise_constant() const;
  bool normalized() const;

 private:
  Instance() = default;
  int n_ = 0;
  std::vector<std::vector<PiecewiseDensity>> dens_;
  std::vector<Rational> breaks_;
};

// V_i(A) = sum_j V_{i,j}(A_j). Throws DimensionError on size mismatch.
Rational agent_value(const Instance& inst, const Allocation& alloc, int i);

// e(A) = sum_i V_i(A).
Rational social_cost(const Instance& inst, const Allocation& alloc);

// Interior boundary points between maximal same-owner (or unallocated)
// regions after canonical merging; 0 and 1 are never cuts.
int count_cuts(const Allocation& alloc);

struct OverlapWitness {
  int agent_a, agent_b;  // 0-based
  Interval where;
};

struct ValidityReport {
  bool dimension_ok = true;
  bool in_range = true;
  bool disjoint = true;
  bool complete = true;
  std::vector<OverlapWitness> overlaps;
  std::vector<Interval> out_of_range;
  std::vector<Interval> gaps;
  bool valid() const { return dimension_ok && in_range && disjoint; }
};

ValidityReport validate_allocation(const Instance& inst, const Allocation& alloc);

}  // namespace chorex
