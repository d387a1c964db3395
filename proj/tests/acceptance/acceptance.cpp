// Acceptance suite: one criterion per numbered line, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "chorex/approx.hpp"
#include "chorex/io.hpp"
#include "chorex/optimize.hpp"
#include "chorex/oracle.hpp"
#include "chorex/protocols.hpp"
#include "chorex/rw_query.hpp"

using namespace chorex;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Rational r(long long n, long long d = 1) { return Rational(n, d); }

int g_failures = 0;

template <typename Body>
void criterion(int id, Body body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %d: %s (%s, %.2fs)\n", id, ok ? "PASS" : "FAIL",
              detail.c_str(), secs);
  if (!ok) ++g_failures;
}

Instance ex2_instance() {
  return instance_from_json(paper_example("ex2").instance_doc);
}

// ---- criterion 1: the two-agent protocol's guarantees ----------------------

std::string run_protocol_suite() {
  Rng rng(101);
  int checked = 0;
  auto verify = [&](const Instance& inst) {
    Allocation alloc = two_agent_protocol(inst);
    require(check_proportional(inst, alloc, r(0)).holds, "proportionality failed");
    require(check_swap_ef(inst, alloc, r(0)).holds, "swap envy-freeness failed");
    require(count_cuts(alloc) <= 1, "more than one cut");
    require(agent_value(inst, alloc, 1) == r(1, 2), "V_2 != 1/2");
    ++checked;
  };
  verify(ex2_instance());
  for (int t = 0; t < 500; ++t) verify(random_pwc_instance(2, 1 + t % 4, rng));
  return std::to_string(checked) + " instances";
}

// ---- criterion 2: implication structure over exhaustive grids --------------

std::string run_implication_suite() {
  Rng rng(202);
  long long allocations = 0, prop_seen = 0, cross_checks = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 2;
    int m = 1 + (t / 2) % 3;
    int g = 1 + (t / 6) % 3;
    Instance inst = random_pwc_instance(n, m, rng);
    GridSpec grid{g};
    int cells = g * inst.interval_count();

    // exact per-cell masses, then pure table arithmetic per allocation
    std::vector<Rational> w(static_cast<size_t>(n * n * cells));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int c = 0; c < cells; ++c) {
          Interval base = inst.refinement_interval(c / g);
          Rational width = (base.hi - base.lo) / g;
          Interval cell{base.lo + width * (c % g), base.lo + width * (c % g + 1)};
          w[static_cast<size_t>((i * n + j) * cells + c)] =
              eval_value(inst.density(i, j), cell);
        }

    std::vector<Rational> v(static_cast<size_t>(n * n * n));
    Rational bound(1, n);
    long long index = -1;
    for_each_grid_allocation(inst, grid, [&](const std::vector<int>& owner) {
      ++index;
      ++allocations;
      for (Rational& x : v) x = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int c = 0; c < cells; ++c)
            v[static_cast<size_t>((i * n + j) * n + owner[c])] +=
                w[static_cast<size_t>((i * n + j) * cells + c)];
      auto at = [&](int i, int j, int p) -> const Rational& {
        return v[static_cast<size_t>((i * n + j) * n + p)];
      };

      bool prop = true;
      for (int i = 0; i < n && prop; ++i) {
        Rational total(0);
        for (int j = 0; j < n; ++j) total += at(i, j, j);
        prop = total <= bound;
      }
      bool swap_ef = true;
      for (int i = 0; i < n && swap_ef; ++i)
        for (int j = 0; j < n && swap_ef; ++j)
          if (i != j)
            swap_ef = at(i, i, i) + at(i, j, j) <= at(i, i, j) + at(i, j, i);
      bool stable = true;
      for (int i = 0; i < n && stable; ++i)
        for (int j = 0; j < n && stable; ++j)
          for (int k = j + 1; k < n && stable; ++k)
            stable = at(i, j, j) + at(i, k, k) <= at(i, j, k) + at(i, k, j);

      if (prop) ++prop_seen;
      if (n == 2)
        require(!(swap_ef && !prop), "SwapEF without Proportional at n=2");
      require(!(stable && !prop), "SwapStable without Proportional");

      if (index % 97 == 0) {
        Allocation alloc = allocation_from_cells(inst, grid, owner);
        FairnessReport rep = audit(inst, alloc, r(0));
        require(rep.proportional.holds == prop, "prop cross-check mismatch");
        require(rep.swap_ef.holds == swap_ef, "swapEF cross-check mismatch");
        require(rep.swap_stable.holds == stable, "swap-stable cross-check mismatch");
        ++cross_checks;
      }
      return true;
    });
  }
  require(prop_seen > 0, "no proportional allocation ever seen (vacuous)");
  return std::to_string(allocations) + " allocations, " +
         std::to_string(cross_checks) + " cross-checked";
}

// ---- criterion 3: the swap-envy lower-bound family -------------------------

std::string run_lower_bound_suite() {
  for (int n = 3; n <= 8; ++n) {
    Instance inst = lower_bound_instance(n, r(1, 10));
    Allocation alloc = Allocation::contiguous(n);
    require(check_proportional(inst, alloc, r(0)).holds,
            "n=" + std::to_string(n) + ": not proportional");
    FairnessVerdict swap = check_swap_ef(inst, alloc, r(0));
    require(!swap.holds, "n=" + std::to_string(n) + ": swap envy missing");
    Rational gap = r(1, n) - Rational(1, static_cast<long long>(n) * (n - 1));
    bool exact = false;
    for (const Violation& wtn : swap.witnesses)
      if (wtn.lhs - wtn.rhs == gap) exact = true;
    require(exact, "n=" + std::to_string(n) + ": witness gap != 1/n - 1/(n(n-1))");
  }
  return "n=3..8, exact gaps";
}

// ---- criterion 4: identical-value allocations -------------------------------

std::string run_identical_value_suite() {
  Rng rng(404);
  auto verify = [&](const Instance& inst, const Allocation& alloc) {
    int n = inst.agents();
    ValueTable table = ValueTable::build(inst, alloc);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int p = 1; p < n; ++p)
          require(table.v(i, j, p) == table.v(i, j, 0), "pieces valued unequally");
    require(check_swap_stable(table, r(0)).holds, "not swap-stable");
  };
  for (int t = 0; t < 100; ++t) {
    int n = 2 + t % 3;
    Instance pwc = random_pwc_instance(n, 1 + t % 3, rng);
    verify(pwc, uniform_allocation(pwc));
    Instance pwl = random_pwl_instance(n, 1 + t % 3, rng);
    verify(pwl, sandwich_allocation(pwl));
  }

  // symmetric pairs capture a linear density exactly: integral = width * center value
  for (int t = 0; t < 100; ++t) {
    Rational a(static_cast<long long>(rng.below(17)), 16);
    Rational b = Rational(static_cast<long long>(rng.below(17)), 8) - a;  // a + b >= 0
    PiecewiseDensity d = PiecewiseDensity::linear(a, b);
    int slices = 2 + t % 4;  // n <= 5 agents worth of slicing
    Rational c(static_cast<long long>(4 + rng.below(9)), 16);
    Rational tt(static_cast<long long>(rng.below(5)), 64);
    Rational s(static_cast<long long>(1 + rng.below(static_cast<unsigned>(slices))), 64);
    Piece pair = Piece::of({{c - tt - s, c - tt}, {c + tt, c + tt + s}});
    require(eval_value(d, pair) == 2 * s * (a + b * c), "symmetric-pair equality broke");
  }
  return "100 uniform + 100 sandwich + 100 linear pairs";
}

// ---- criterion 5: three independent routes to the optimum ------------------

std::string run_optimum_agreement_suite() {
  Rng rng(505);
  int agree = 0;
  for (int t = 0; t < 60; ++t) {
    int n = 2 + t % 2, m = 1 + t % 3;
    Instance inst = (t % 5 == 4) ? random_pwl_instance(n, m, rng)
                                 : random_pwc_instance(n, m, rng);
    Rational greedy_cost = social_cost(inst, greedy_optimal(inst));
    OptimalResult lp = optimal_fair_allocation(inst, LpMode::Unconstrained);
    require(lp.objective == greedy_cost, "LP and greedy disagree");
    BruteForceResult brute = brute_force_optimal(inst, {1});
    require(brute.cost == greedy_cost, "brute force disagrees");
    ++agree;
  }

  Instance ex2 = ex2_instance();
  require(optimal_fair_allocation(ex2, LpMode::ProportionalSwapEF).objective == r(3, 4),
          "constrained optimum on the two-agent fixture != 3/4");

  // the LP optimum is a lower bound for every feasible fraction matrix
  int dominated = 0;
  for (int t = 0; t < 20; ++t) {
    Instance inst = random_pwc_instance(2 + t % 2, 1 + t % 3, rng);
    int n = inst.agents(), m = inst.interval_count();
    Rational lp_obj = optimal_fair_allocation(inst, LpMode::Unconstrained).objective;
    std::vector<Rational> colsum(static_cast<size_t>(n * m));
    for (int p = 0; p < n; ++p)
      for (int k = 0; k < m; ++k) {
        Rational sum(0);
        for (int i = 0; i < n; ++i)
          sum += eval_value(inst.density(i, p), inst.refinement_interval(k));
        colsum[static_cast<size_t>(p * m + k)] = sum;
      }
    for (int rep = 0; rep < 50; ++rep) {
      FractionMatrix fr;
      fr.n = n;
      fr.m = m;
      fr.x.assign(static_cast<size_t>(n * m), Rational(0));
      for (int k = 0; k < m; ++k) {
        Rational total(0);
        std::vector<Rational> weights(static_cast<size_t>(n));
        for (int p = 0; p < n; ++p) {
          weights[static_cast<size_t>(p)] = static_cast<long long>(1 + rng.below(16));
          total += weights[static_cast<size_t>(p)];
        }
        for (int p = 0; p < n; ++p)
          fr.at(p, k) = weights[static_cast<size_t>(p)] / total;
      }
      fr.validate();
      Rational cost(0);
      for (int p = 0; p < n; ++p)
        for (int k = 0; k < m; ++k)
          cost += fr.at(p, k) * colsum[static_cast<size_t>(p * m + k)];
      require(lp_obj <= cost, "LP objective above a feasible fraction matrix");
      ++dominated;
    }
  }
  return std::to_string(agree) + " triple agreements, " +
         std::to_string(dominated) + " dominated matrices";
}

// ---- criterion 6: fraction realization and mode guarantees -----------------

std::string run_realization_suite() {
  Rng rng(606);
  int realized = 0;
  struct ModeCase {
    LpMode mode;
    Rational eps;
  };
  std::vector<ModeCase> modes = {{LpMode::Proportional, r(0)},
                                 {LpMode::ProportionalSwapEF, r(0)},
                                 {LpMode::ProportionalEpsSwapEF, r(1, 8)},
                                 {LpMode::SwapStable, r(0)}};
  for (int t = 0; t < 12; ++t) {
    int n = 2 + t % 2, m = 1 + t % 3;
    Instance inst = (t % 2 == 0) ? random_pwc_instance(n, m, rng)
                                 : random_pwl_instance(n, m, rng);
    for (const ModeCase& mc : modes) {
      OptimalResult res = optimal_fair_allocation(inst, mc.mode, mc.eps);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int p = 0; p < n; ++p) {
            Rational direct = eval_value(inst.density(i, j),
                                         res.allocation.pieces[static_cast<size_t>(p)]);
            Rational from_fractions(0);
            for (int k = 0; k < inst.interval_count(); ++k)
              from_fractions += res.fractions.at(p, k) *
                                eval_value(inst.density(i, j),
                                           inst.refinement_interval(k));
            require(direct == from_fractions, "realized values drifted from fractions");
          }
      require(check_proportional(inst, res.allocation, r(0)).holds,
              "mode lost proportionality");
      if (mc.mode == LpMode::ProportionalSwapEF)
        require(check_swap_ef(inst, res.allocation, r(0)).holds, "swapEF lost");
      if (mc.mode == LpMode::ProportionalEpsSwapEF)
        require(check_swap_ef(inst, res.allocation, mc.eps).holds, "eps-swapEF lost");
      if (mc.mode == LpMode::SwapStable)
        require(check_swap_stable(inst, res.allocation, r(0)).holds,
                "swap stability lost");
      ++realized;
    }
  }
  return std::to_string(realized) + " mode solutions realized exactly";
}

// ---- criterion 7: approximation against exact ground truth -----------------

struct GroundTruth {
  Instance instance;
  Rational optimum;
};

// two agents: v11 = x, v22 = 1 - x, off-diagonals 1/2; optimum splits at 1/2
GroundTruth two_agent_truth() {
  Rational h(1, 2);
  PiecewiseDensity up({{{r(0), h}, r(0), r(1)}, {{h, r(1)}, r(0), r(1)}});
  PiecewiseDensity down({{{r(0), h}, r(1), r(-1)}, {{h, r(1)}, r(1), r(-1)}});
  PiecewiseDensity half = PiecewiseDensity::constant_density(h);
  return {Instance::make({{up, half}, {half, down}}), r(3, 4)};
}

// three agents: ramps on the diagonal, 1/3 off it; optimum cuts at 3/8 and 5/8
GroundTruth three_agent_truth() {
  Rational c1(3, 8), c2(1, 2), c3(5, 8);
  PiecewiseDensity v11({{{r(0), c1}, r(1, 12), r(1, 2)},
                        {{c1, c3}, r(1, 12), r(1, 2)},
                        {{c3, r(1)}, r(1, 12), r(1, 2)}});
  PiecewiseDensity v22({{{r(0), c1}, r(11, 24), r(-1, 2)},
                        {{c1, c2}, r(11, 24), r(-1, 2)},
                        {{c2, c3}, r(-1, 24), r(1, 2)},
                        {{c3, r(1)}, r(-1, 24), r(1, 2)}});
  PiecewiseDensity v33({{{r(0), c1}, r(7, 12), r(-1, 2)},
                        {{c1, c3}, r(7, 12), r(-1, 2)},
                        {{c3, r(1)}, r(7, 12), r(-1, 2)}});
  PiecewiseDensity third = PiecewiseDensity::constant_density(r(1, 3));
  return {Instance::make({{v11, third, third},
                          {third, v22, third},
                          {third, third, v33}}),
          r(55, 64)};
}

std::string run_approx_suite() {
  int runs = 0;
  for (const GroundTruth& gt : {two_agent_truth(), three_agent_truth()}) {
    int n = gt.instance.agents();
    // the exact optimum from the optimize module, cross-checked two ways
    Rational star = social_cost(gt.instance, greedy_optimal(gt.instance));
    require(star == gt.optimum, "greedy misses the analytic optimum");
    require(brute_force_optimal(gt.instance, {1}).cost == star,
            "brute force misses the analytic optimum");

    std::vector<std::vector<DensityOracle>> oracles;
    for (int i = 0; i < n; ++i) {
      std::vector<DensityOracle> row;
      for (int j = 0; j < n; ++j)
        row.push_back(oracle_from_density(gt.instance.density(i, j)));
      oracles.push_back(std::move(row));
    }

    double estar = to_double(star);
    for (const Rational& eps : {r(1, 10), r(1, 20)}) {
      double epsd = to_double(eps);
      ApproxResult prop = approx_optimal(oracles, eps, ApproxMode::Prop);
      require(prop.truth.proportional, "prop mode lost true proportionality");
      require(prop.truth.social_cost <= estar + epsd + 1e-6,
              "prop mode exceeded e* + eps");
      require(prop.within_bound, "prop mode outside its certified bound");

      ApproxResult sw = approx_optimal(oracles, eps, ApproxMode::SwapEf);
      require(sw.truth.swap_ef, "swapef mode lost eps-swap-EF");
      require(sw.truth.social_cost <= estar + n * epsd / 4 + 1e-6,
              "swapef mode exceeded e* + n*eps/4");
      require(sw.within_bound, "swapef mode outside its certified bound");
      runs += 2;
    }
  }
  return std::to_string(runs) + " runs at n=2,3";
}

// ---- criterion 8: query-model consistency -----------------------------------

std::string run_query_suite() {
  Rng rng(808);
  int queries = 0;
  while (queries < 1000) {
    Instance inst = random_pwc_instance(2 + static_cast<int>(rng.below(2)),
                                        1 + static_cast<int>(rng.below(4)), rng);
    RwSession session(inst);
    int n = inst.agents();
    for (int q = 0; q < 4 && queries < 1000; ++q) {
      int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      Rational x(static_cast<long long>(rng.below(13)), 16);
      Rational rest = session.evaluate(i, j, x, r(1));
      Rational alpha = rest * Rational(static_cast<long long>(rng.below(9)), 8);
      Rational y = session.cut(i, j, x, alpha);
      require(session.evaluate(i, j, x, y) == alpha, "evaluate(cut) != alpha");
      ++queries;
    }
  }

  int audited = 0;
  for (int t = 0; t < 10; ++t) {
    Instance inst = random_pwc_instance(2 + t % 3, 1 + t % 4, rng);
    RwSession session(inst);
    Allocation direct = greedy_optimal(inst);
    Allocation queried = greedy_optimal_queried(session);
    require(queried == direct, "queried greedy diverged");
    int n = inst.agents(), m = inst.interval_count();
    require(session.ledger().total() ==
                static_cast<std::int64_t>(m) * n * n,
            "query count != m*n^2");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        require(session.ledger().cut_count(i, j) == 0, "greedy issued cut queries");
    ++audited;
  }
  return std::to_string(queries) + " inverse queries, " + std::to_string(audited) +
         " greedy ledgers";
}

// ---- criterion 9: counterexample regeneration -------------------------------

std::string run_search_suite() {
  auto verify = [](const PropertySpec& spec, int n) {
    Witness w = search_counterexample(spec, n, 2, 1, 42);
    FairnessReport rep = audit(w.instance, w.allocation, r(0));
    auto holds = [&](Notion x) {
      if (x == Notion::Proportional) return rep.proportional.holds;
      if (x == Notion::SwapEF) return rep.swap_ef.holds;
      return rep.swap_stable.holds;
    };
    for (Notion x : spec.require) require(holds(x), "witness misses a required notion");
    for (Notion x : spec.forbid) require(!holds(x), "witness satisfies a forbidden notion");
    require(w.examined <= kSearchBudget, "budget overrun");
    return w.examined;
  };

  PropertySpec a;  // proportional yet swap-envious
  a.require = {Notion::Proportional};
  a.forbid = {Notion::SwapEF};
  std::int64_t ea = verify(a, 3);

  PropertySpec b;  // swap-envy-free yet disproportional
  b.require = {Notion::SwapEF};
  b.forbid = {Notion::Proportional};
  std::int64_t eb = verify(b, 3);

  PropertySpec c;  // both pairwise notions without full stability
  c.require = {Notion::Proportional, Notion::SwapEF};
  c.forbid = {Notion::SwapStable};
  std::int64_t ec = verify(c, 3);

  // at n=2 the first two combinations are impossible (V_i <= 1/2 and the swap
  // inequality are complements), so the search must exhaust its budget
  bool exhausted_a = false, exhausted_b = false;
  try {
    search_counterexample(a, 2, 2, 1, 42, 3000);
  } catch (const NotFound&) {
    exhausted_a = true;
  }
  try {
    search_counterexample(b, 2, 2, 1, 42, 3000);
  } catch (const NotFound&) {
    exhausted_b = true;
  }
  require(exhausted_a && exhausted_b, "an impossible two-agent spec produced a witness");

  return "witnesses at n=3 after " + std::to_string(ea) + "/" + std::to_string(eb) +
         "/" + std::to_string(ec) + " allocations; two-agent variants exhaust";
}

// ---- criterion 10: fixture expectations match recomputation ----------------

std::string run_fixture_suite() {
  PaperFixture ex2 = paper_example("ex2");
  Instance inst2 = instance_from_json(ex2.instance_doc);
  Allocation halves = allocation_from_json(*ex2.allocation_doc);
  FairnessReport rep2 = audit(inst2, halves, r(0));
  require(rep2.values[0] == r(5, 8) && rep2.values[1] == r(5, 8),
          "ex2 recomputed values != 5/8");
  require(ex2.expected["values"] == Json::array({"5/8", "5/8"}),
          "ex2 expected values drifted");
  require(ex2.expected["proportional"] == false, "ex2 should flag proportionality");
  require(!ex2.discrepancies.empty(), "ex2 lost its discrepancy note");

  PaperFixture ex3 = paper_example("ex3");
  bool rejected = false;
  try {
    instance_from_json(ex3.instance_doc);
  } catch (const NormalizationError& e) {
    rejected = (e.agent == 3 && e.sum == r(3));
  }
  require(rejected, "ex3 strict parse did not flag agent 3 with sum 3");
  require(ex3.expected["normalization_violation"]["agent"] == 3 &&
              ex3.expected["normalization_violation"]["sum"] == "3",
          "ex3 expected violation drifted");
  std::vector<Rational> scales;
  Instance resc = instance_from_json(ex3.instance_doc,
                                     Instance::Normalization::Rescale, &scales);
  require(scales[2] == r(1, 3), "ex3 rescale factor != 1/3");
  FairnessReport rep3 = audit(resc, allocation_from_json(*ex3.allocation_doc), r(0));
  Json vals3 = Json::array();
  for (const Rational& v : rep3.values) vals3.push_back(rational_str(v));
  require(vals3 == ex3.expected["rescaled_values"], "ex3 rescaled values drifted");
  require(!rep3.swap_ef.holds && ex3.expected["swap_ef"] == false,
          "ex3 swap verdict drifted");
  require(ex3.discrepancies.size() == 2, "ex3 lost a discrepancy note");

  PaperFixture ex4 = paper_example("ex4");
  Instance inst4 = instance_from_json(ex4.instance_doc);
  FairnessReport rep4 = audit(inst4, allocation_from_json(*ex4.allocation_doc), r(0));
  require(rep4.values[0] == r(5, 9), "ex4 recomputed V_1 != 5/9");
  require(ex4.expected["values"][0] == "5/9", "ex4 expected V_1 drifted");
  require(!rep4.proportional.holds && !rep4.swap_ef.holds,
          "ex4 should fail both notions");
  require(ex4.expected["proportional"] == false && ex4.expected["swap_ef"] == false,
          "ex4 expected verdicts drifted");
  require(!ex4.discrepancies.empty(), "ex4 lost its discrepancy notes");

  PaperFixture thm8 = paper_example("thm8");
  Instance inst8 = instance_from_json(thm8.instance_doc);
  require(rational_str(inst8.density(0, 0).total()) == thm8.expected["v11_total"],
          "thm8 diagonal total drifted");
  require(rational_str(inst8.density(0, 1).total()) == thm8.expected["v12_total"],
          "thm8 off-diagonal total drifted");
  Allocation alloc8 = two_agent_protocol(inst8);
  require(check_proportional(inst8, alloc8, r(0)).holds, "thm8 protocol not proportional");
  Rational gap = eval_value(inst8.density(0, 0), alloc8.pieces[0]) -
                 eval_value(inst8.density(0, 1), alloc8.pieces[0]);
  require(rational_str(gap) == thm8.expected["proportional_complete_gap"],
          "thm8 gap != 1/6");

  return "ex2/ex3/ex4/thm8 verified against recomputation";
}

}  // namespace

int main() {
  criterion(1, run_protocol_suite);
  criterion(2, run_implication_suite);
  criterion(3, run_lower_bound_suite);
  criterion(4, run_identical_value_suite);
  criterion(5, run_optimum_agreement_suite);
  criterion(6, run_realization_suite);
  criterion(7, run_approx_suite);
  criterion(8, run_query_suite);
  criterion(9, run_search_suite);
  criterion(10, run_fixture_suite);
  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
