#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "chorex/fairness.hpp"
#include "chorex/rng.hpp"

namespace chorex {

// Split every refinement interval into g equal cells; a grid allocation
// assigns each cell wholly to one agent.
struct GridSpec {
  int g = 1;
};

struct PropertySpec {
  std::set<Notion> require, forbid;
  void validate() const;  // require and forbid must be disjoint
};

inline constexpr std::int64_t kEnumerateCap = 10000000;
inline constexpr std::int64_t kSearchBudget = 100000;

// n^(g*m); BudgetExceeded when above cap.
std::int64_t allocation_count(const Instance& inst, GridSpec grid,
                              std::int64_t cap = kEnumerateCap);

Allocation allocation_from_cells(const Instance& inst, GridSpec grid,
                                 const std::vector<int>& owner);

// Walk every owner vector in lexicographic order (cell 0 most significant).
// Returning false from visit stops the walk.
void for_each_grid_allocation(const Instance& inst, GridSpec grid,
                              const std::function<bool(const std::vector<int>&)>& visit,
                              std::int64_t cap = kEnumerateCap);

std::vector<Allocation> enumerate_allocations(const Instance& inst, GridSpec grid,
                                              std::int64_t cap = kEnumerateCap);

struct BruteForceResult {
  Allocation allocation;
  Rational cost;
  std::vector<int> cells;  // owner per grid cell for the winning allocation
};

// Minimum social cost among grid allocations satisfying the constraints at
// eps = 0; ties broken by enumeration order. Throws NoFeasible when nothing
// qualifies at this grid.
BruteForceResult brute_force_optimal(const Instance& inst, GridSpec grid,
                                     const PropertySpec& constraints = {},
                                     std::int64_t cap = kEnumerateCap);

// Piecewise-constant instance on m uniform intervals with values k/16,
// k uniform in 0..16, rescaled exactly so each agent's row integrates to 1.
// Zero rows are resampled.
Instance random_pwc_instance(int n, int m, Rng& rng);
// Piecewise-linear variant: independent k/16 endpoint values per interval,
// linearly interpolated, same exact rescale.
Instance random_pwl_instance(int n, int m, Rng& rng);

struct Witness {
  Instance instance;
  Allocation allocation;
  std::vector<int> cells;
  std::int64_t instances_sampled = 0;  // including the one that produced the hit
  std::int64_t examined = 0;           // allocations examined in total
};

// First (instance, allocation) where every `require` notion holds and every
// `forbid` notion fails, both at eps = 0. Instances come from the seeded
// generator; allocations are scanned in enumeration order, so the witness is
// reproducible. Budget counts examined allocations; exhaustion throws
// NotFound (which proves nothing about nonexistence).
Witness search_counterexample(const PropertySpec& spec, int n, int m, int g,
                              std::uint64_t seed,
                              std::int64_t budget = kSearchBudget);

}  // namespace chorex
