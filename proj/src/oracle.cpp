#include "chorex/oracle.hpp"

#include <boost/multiprecision/integer.hpp>

namespace chorex {

void PropertySpec::validate() const {
  for (Notion n : require)
    if (forbid.count(n))
      throw BadParams(std::string("notion both required and forbidden: ") +
                      notion_name(n));
}

namespace {

struct CellGrid {
  int n = 0, cells = 0;
  std::vector<Interval> cell;
  std::vector<Rational> val;  // (i*n + j)*cells + c
};

CellGrid make_grid(const Instance& inst, GridSpec grid) {
  if (grid.g < 1) throw BadParams("grid resolution must be >= 1");
  CellGrid gv;
  gv.n = inst.agents();
  int m = inst.interval_count();
  gv.cells = grid.g * m;
  gv.cell.reserve(static_cast<size_t>(gv.cells));
  for (int k = 0; k < m; ++k) {
    Interval iv = inst.refinement_interval(k);
    Rational w = iv.length() / grid.g;
    for (int s = 0; s < grid.g; ++s)
      gv.cell.push_back({iv.lo + w * s, iv.lo + w * (s + 1)});
  }
  gv.val.resize(static_cast<size_t>(gv.n) * gv.n * gv.cells);
  for (int i = 0; i < gv.n; ++i)
    for (int j = 0; j < gv.n; ++j)
      for (int c = 0; c < gv.cells; ++c)
        gv.val[static_cast<size_t>((i * gv.n + j) * gv.cells + c)] =
            eval_value(inst.density(i, j), gv.cell[static_cast<size_t>(c)]);
  return gv;
}

bool next_owner(std::vector<int>& owner, int n) {
  for (int c = static_cast<int>(owner.size()) - 1; c >= 0; --c) {
    if (++owner[static_cast<size_t>(c)] < n) return true;
    owner[static_cast<size_t>(c)] = 0;
  }
  return false;
}

// Shared check kernel over either exact rationals or a common-denominator
// int64 representation (the fast path for enumeration-heavy callers).
template <typename T>
struct Engine {
  int n = 0, cells = 0;
  std::vector<T> num;   // same layout as CellGrid::val
  T prop_bound{};       // value of 1/n in this representation
  std::vector<T> w;     // scratch: (i*n + j)*n + p

  void fill(const std::vector<int>& owner) {
    std::fill(w.begin(), w.end(), T{});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int base = i * n + j;
        const T* row = &num[static_cast<size_t>(base) * cells];
        T* out = &w[static_cast<size_t>(base) * n];
        for (int c = 0; c < cells; ++c) out[owner[static_cast<size_t>(c)]] += row[c];
      }
  }

  const T& at(int i, int j, int p) const {
    return w[static_cast<size_t>((i * n + j) * n + p)];
  }

  bool holds(Notion notion) const {
    switch (notion) {
      case Notion::Proportional:
        for (int i = 0; i < n; ++i) {
          T v{};
          for (int j = 0; j < n; ++j) v += at(i, j, j);
          if (v > prop_bound) return false;
        }
        return true;
      case Notion::SwapEF:
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j &&
                at(i, i, i) + at(i, j, j) > at(i, i, j) + at(i, j, i))
              return false;
        return true;
      case Notion::SwapStable:
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
              if (at(i, j, j) + at(i, k, k) > at(i, j, k) + at(i, k, j))
                return false;
        return true;
    }
    return true;
  }

  bool satisfies(const PropertySpec& spec) const {
    for (Notion x : spec.require)
      if (!holds(x)) return false;
    for (Notion x : spec.forbid)
      if (holds(x)) return false;
    return true;
  }

  T cost() const {
    T e{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e += at(i, j, j);
    return e;
  }
};

Engine<Rational> rational_engine(const CellGrid& gv) {
  Engine<Rational> eng;
  eng.n = gv.n;
  eng.cells = gv.cells;
  eng.num = gv.val;
  eng.prop_bound = Rational(1, gv.n);
  eng.w.assign(static_cast<size_t>(gv.n) * gv.n * gv.n, Rational(0));
  return eng;
}

// Common denominator small enough that every sum we form stays in int64.
bool try_int64_engine(const CellGrid& gv, Engine<std::int64_t>& eng) {
  BigInt den = gv.n;
  for (const Rational& v : gv.val) den = boost::multiprecision::lcm(den, BigInt(denominator(v)));
  if (den > BigInt(1) << 31) return false;
  std::int64_t d = den.convert_to<std::int64_t>();
  std::int64_t cap = (std::int64_t(1) << 60) /
                     (std::int64_t(gv.n) * gv.n * std::max(gv.cells, 1));
  eng.n = gv.n;
  eng.cells = gv.cells;
  eng.num.resize(gv.val.size());
  for (size_t t = 0; t < gv.val.size(); ++t) {
    BigInt scaled = numerator(gv.val[t]) * (den / BigInt(denominator(gv.val[t])));
    if (boost::multiprecision::abs(scaled) > cap) return false;
    eng.num[t] = scaled.convert_to<std::int64_t>();
  }
  eng.prop_bound = d / gv.n;
  eng.w.assign(static_cast<size_t>(gv.n) * gv.n * gv.n, 0);
  return true;
}

struct BestTracker {
  bool found = false;
  std::vector<int> owner;
};

// Runs fn over every owner vector; fn may keep state via the tracker.
template <typename T, typename Fn>
void scan(Engine<T>& eng, Fn&& fn) {
  std::vector<int> owner(static_cast<size_t>(eng.cells), 0);
  do {
    eng.fill(owner);
    if (!fn(owner)) return;
  } while (next_owner(owner, eng.n));
}

}  // namespace

std::int64_t allocation_count(const Instance& inst, GridSpec grid,
                              std::int64_t cap) {
  if (grid.g < 1) throw BadParams("grid resolution must be >= 1");
  int n = inst.agents();
  int cells = grid.g * inst.interval_count();
  std::int64_t count = 1;
  for (int c = 0; c < cells; ++c) {
    if (count > cap / n)
      throw BudgetExceeded("grid space " + std::to_string(n) + "^" +
                           std::to_string(cells) + " exceeds budget " +
                           std::to_string(cap));
    count *= n;
  }
  return count;
}

Allocation allocation_from_cells(const Instance& inst, GridSpec grid,
                                 const std::vector<int>& owner) {
  if (grid.g < 1) throw BadParams("grid resolution must be >= 1");
  int n = inst.agents();
  int m = inst.interval_count();
  if (owner.size() != static_cast<size_t>(grid.g) * m)
    throw DimensionError("owner vector does not match grid");
  std::vector<std::vector<Interval>> parts(static_cast<size_t>(n));
  int c = 0;
  for (int k = 0; k < m; ++k) {
    Interval iv = inst.refinement_interval(k);
    Rational w = iv.length() / grid.g;
    for (int s = 0; s < grid.g; ++s, ++c) {
      int p = owner[static_cast<size_t>(c)];
      if (p < 0 || p >= n) throw DimensionError("cell owner out of range");
      parts[static_cast<size_t>(p)].push_back(
          {iv.lo + w * s, iv.lo + w * (s + 1)});
    }
  }
  Allocation a;
  for (auto& ivs : parts) a.pieces.push_back(Piece::of(std::move(ivs)));
  return a;
}

void for_each_grid_allocation(const Instance& inst, GridSpec grid,
                              const std::function<bool(const std::vector<int>&)>& visit,
                              std::int64_t cap) {
  allocation_count(inst, grid, cap);
  std::vector<int> owner(static_cast<size_t>(grid.g) * inst.interval_count(), 0);
  do {
    if (!visit(owner)) return;
  } while (next_owner(owner, inst.agents()));
}

std::vector<Allocation> enumerate_allocations(const Instance& inst, GridSpec grid,
                                              std::int64_t cap) {
  std::vector<Allocation> out;
  for_each_grid_allocation(
      inst, grid,
      [&](const std::vector<int>& owner) {
        out.push_back(allocation_from_cells(inst, grid, owner));
        return true;
      },
      cap);
  return out;
}

BruteForceResult brute_force_optimal(const Instance& inst, GridSpec grid,
                                     const PropertySpec& constraints,
                                     std::int64_t cap) {
  constraints.validate();
  allocation_count(inst, grid, cap);
  CellGrid gv = make_grid(inst, grid);

  BestTracker best;
  auto run = [&](auto& eng) {
    using T = std::decay_t<decltype(eng.num[0])>;
    T best_cost{};
    scan(eng, [&](const std::vector<int>& owner) {
      if (eng.satisfies(constraints)) {
        T e = eng.cost();
        if (!best.found || e < best_cost) {
          best.found = true;
          best_cost = e;
          best.owner = owner;
        }
      }
      return true;
    });
  };

  Engine<std::int64_t> fast;
  if (try_int64_engine(gv, fast)) {
    run(fast);
  } else {
    Engine<Rational> slow = rational_engine(gv);
    run(slow);
  }

  if (!best.found)
    throw NoFeasible("no grid allocation satisfies the constraints at g=" +
                     std::to_string(grid.g));
  BruteForceResult res;
  res.cells = best.owner;
  res.allocation = allocation_from_cells(inst, grid, best.owner);
  res.cost = social_cost(inst, res.allocation);
  return res;
}

namespace {

Instance random_instance(int n, int m, Rng& rng, bool linear) {
  if (n < 2) throw BadParams("need at least 2 agents");
  if (m < 1) throw BadParams("need at least 1 interval");
  std::vector<std::vector<PiecewiseDensity>> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (;;) {
      // Raw values first, so the rescale keeps the draw count independent of
      // the running total.
      std::vector<std::vector<std::pair<Rational, Rational>>> ends(
          static_cast<size_t>(n),
          std::vector<std::pair<Rational, Rational>>(static_cast<size_t>(m)));
      Rational total = 0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < m; ++k) {
          Rational v0(static_cast<long long>(rng.below(17)), 16);
          Rational v1 = linear ? Rational(static_cast<long long>(rng.below(17)), 16) : v0;
          ends[static_cast<size_t>(j)][static_cast<size_t>(k)] = {v0, v1};
          total += (v0 + v1) / (2 * m);
        }
      if (total == 0) continue;
      std::vector<PiecewiseDensity> row;
      row.reserve(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) {
        std::vector<DensitySegment> segs;
        segs.reserve(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) {
          Interval iv{Rational(k, m), Rational(k + 1, m)};
          Rational v0 = ends[static_cast<size_t>(j)][static_cast<size_t>(k)].first / total;
          Rational v1 = ends[static_cast<size_t>(j)][static_cast<size_t>(k)].second / total;
          Rational b = (v1 - v0) * m;
          segs.push_back({iv, v0 - b * iv.lo, b});
        }
        row.push_back(PiecewiseDensity(std::move(segs)));
      }
      rows.push_back(std::move(row));
      break;
    }
  }
  return Instance::make(std::move(rows), Instance::Normalization::Require);
}

}  // namespace

Instance random_pwc_instance(int n, int m, Rng& rng) {
  return random_instance(n, m, rng, false);
}

Instance random_pwl_instance(int n, int m, Rng& rng) {
  return random_instance(n, m, rng, true);
}

Witness search_counterexample(const PropertySpec& spec, int n, int m, int g,
                              std::uint64_t seed, std::int64_t budget) {
  spec.validate();
  if (budget <= 0) throw BadParams("budget must be positive");
  Rng rng(seed);
  std::int64_t examined = 0;
  std::int64_t sampled = 0;
  for (;;) {
    Instance inst = random_pwc_instance(n, m, rng);
    ++sampled;
    GridSpec grid{g};
    CellGrid gv = make_grid(inst, grid);

    std::vector<int> hit;
    auto run = [&](auto& eng) {
      scan(eng, [&](const std::vector<int>& owner) {
        if (examined == budget) return false;
        ++examined;
        if (eng.satisfies(spec)) {
          hit = owner;
          return false;
        }
        return true;
      });
    };
    Engine<std::int64_t> fast;
    if (try_int64_engine(gv, fast)) {
      run(fast);
    } else {
      Engine<Rational> slow = rational_engine(gv);
      run(slow);
    }

    if (!hit.empty()) {
      Allocation alloc = allocation_from_cells(inst, grid, hit);
      return Witness{std::move(inst), std::move(alloc), std::move(hit),
                     sampled, examined};
    }
    if (examined >= budget)
      throw NotFound("no witness within " + std::to_string(budget) +
                     " allocations (" + std::to_string(sampled) +
                     " instances)");
  }
}

}  // namespace chorex
