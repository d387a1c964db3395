#include <doctest.h>

#include "chorex/fairness.hpp"
#include "chorex/io.hpp"
#include "chorex/oracle.hpp"
#include "chorex/protocols.hpp"

using namespace chorex;

namespace {

Rational r(int n, int d = 1) { return Rational(n, d); }

Instance ex2() { return instance_from_json(paper_example("ex2").instance_doc); }

Instance from_rows(std::vector<std::vector<PiecewiseDensity>> rows) {
  return Instance::make(std::move(rows));
}

}  // namespace

TEST_CASE("balance function basics") {
  Instance inst = ex2();
  BalanceFunction f = BalanceFunction::build(inst);
  CHECK(f.eval(r(0)) + f.eval(r(1)) == r(0));
  // F(x) = x/2 on the left half, (1-x)/2 on the right
  CHECK(f.eval(r(1, 4)) == r(1, 8));
  CHECK(f.eval(r(3, 4)) == r(1, 8));
  CHECK(f.smallest_root() == r(0));

  PiecewiseDensity half = PiecewiseDensity::constant_density(r(1, 2));
  Instance symmetric = from_rows({{half, half}, {half, half}});
  CHECK(BalanceFunction::build(symmetric).smallest_root() == r(0));

  PiecewiseDensity one = PiecewiseDensity::constant_density(r(1));
  PiecewiseDensity zero = PiecewiseDensity::constant_density(r(0));
  Instance lopsided = from_rows({{half, half}, {one, zero}});
  BalanceFunction g = BalanceFunction::build(lopsided);
  CHECK(g.eval(r(1, 2)) == r(0));  // F(x) = 2x - 1
  CHECK(g.smallest_root() == r(1, 2));

  CHECK_THROWS_AS(BalanceFunction::build(lower_bound_instance(3, r(1, 10))),
                  NotTwoAgents);
}

TEST_CASE("balance point is the leftmost root for random two-agent instances") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    Instance inst = random_pwc_instance(2, 1 + static_cast<int>(t % 4), rng);
    BalanceFunction f = BalanceFunction::build(inst);
    Rational root = find_balance_point(inst);
    CHECK(f.eval(root) == r(0));
    CHECK(root >= r(0));
    CHECK(root <= r(1));
  }
}

TEST_CASE("two-agent protocol on the degenerate-cut fixture") {
  Instance inst = ex2();
  Allocation alloc = two_agent_protocol(inst);
  CHECK(alloc.pieces[0].empty());
  CHECK(alloc.pieces[1].measure() == r(1));
  CHECK(count_cuts(alloc) == 0);
  CHECK(agent_value(inst, alloc, 0) == r(1, 2));
  CHECK(agent_value(inst, alloc, 1) == r(1, 2));
  CHECK(check_proportional(inst, alloc, r(0)).holds);
  CHECK(check_swap_ef(inst, alloc, r(0)).holds);
}

TEST_CASE("two-agent protocol guarantees hold on random instances") {
  Rng rng(47);
  for (int t = 0; t < 60; ++t) {
    bool pwc = t % 2 == 0;
    Instance inst = pwc ? random_pwc_instance(2, 1 + t % 4, rng)
                        : random_pwl_instance(2, 1 + t % 3, rng);
    Allocation alloc;
    try {
      alloc = two_agent_protocol(inst);
    } catch (const IrrationalCutError&) {
      // quadratic balance segments may cross at irrational points; the
      // piecewise-constant case below never does
      CHECK_FALSE(pwc);
      continue;
    }
    CHECK(validate_allocation(inst, alloc).valid());
    CHECK(count_cuts(alloc) <= 1);
    CHECK(agent_value(inst, alloc, 1) == r(1, 2));
    CHECK(check_proportional(inst, alloc, r(0)).holds);
    CHECK(check_swap_ef(inst, alloc, r(0)).holds);
  }
}

TEST_CASE("quadratic balance segment with a rational root") {
  PiecewiseDensity half = PiecewiseDensity::constant_density(r(1, 2));
  PiecewiseDensity v21 = PiecewiseDensity::linear(r(3, 16), r(1));
  PiecewiseDensity v22 = PiecewiseDensity::constant_density(r(5, 16));
  Instance inst = from_rows({{half, half}, {v21, v22}});
  // F(x) = x^2 - x/4 - 3/8, roots 3/4 and -1/2
  CHECK(find_balance_point(inst) == r(3, 4));
  Allocation alloc = two_agent_protocol(inst);
  CHECK(alloc.pieces[0] == Piece::of(r(0), r(3, 4)));  // agent 1 ties, takes left
  CHECK(agent_value(inst, alloc, 1) == r(1, 2));
  CHECK(count_cuts(alloc) == 1);

  // all-quadratic instance whose first crossing is irrational
  PiecewiseDensity v2x = PiecewiseDensity::linear(r(0), r(2));
  PiecewiseDensity zero = PiecewiseDensity::constant_density(r(0));
  Instance bad = from_rows({{half, half}, {v2x, zero}});
  CHECK_THROWS_AS(find_balance_point(bad), IrrationalCutError);
}

TEST_CASE("uniform allocation slices every interval in agent order") {
  PiecewiseDensity v11 = PiecewiseDensity::step(
      {{{r(0), r(1, 2)}, r(3, 4)}, {{r(1, 2), r(1)}, r(1, 4)}});
  PiecewiseDensity half = PiecewiseDensity::constant_density(r(1, 2));
  Instance inst = from_rows({{v11, half},
                             {half, PiecewiseDensity::step({{{r(0), r(1, 2)}, r(1, 4)},
                                                            {{r(1, 2), r(1)}, r(3, 4)}})}});
  Allocation uni = uniform_allocation(inst);
  CHECK(uni.pieces[0] == Piece::of({{r(0), r(1, 4)}, {r(1, 2), r(3, 4)}}));
  CHECK(uni.pieces[1] == Piece::of({{r(1, 4), r(1, 2)}, {r(3, 4), r(1)}}));
  CHECK(count_cuts(uni) == 3);

  ValueTable t = ValueTable::build(inst, uni);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(t.v(i, j, 0) == t.v(i, j, 1));
  CHECK(check_swap_stable(t, r(0)).holds);
}

TEST_CASE("uniform allocation rejects non-constant densities, handles n=1") {
  Instance pwl = Instance::make(
      {{PiecewiseDensity::linear(r(0), r(2))}}, Instance::Normalization::Require);
  CHECK_THROWS_AS(uniform_allocation(pwl), NotPiecewiseConstant);

  Instance single = from_rows({{PiecewiseDensity::constant_density(r(1))}});
  Allocation a = uniform_allocation(single);
  CHECK(a.pieces[0].measure() == r(1));
  CHECK(count_cuts(a) == 0);
}

TEST_CASE("sandwich allocation symmetric pairs on a linear density") {
  Instance inst = Instance::make(
      {{PiecewiseDensity::linear(r(0), r(1)), PiecewiseDensity::constant_density(r(1, 2))},
       {PiecewiseDensity::constant_density(r(1, 2)), PiecewiseDensity::linear(r(1), r(-1))}});
  Allocation sw = sandwich_allocation(inst);
  CHECK(sw.pieces[0] == Piece::of({{r(0), r(1, 4)}, {r(3, 4), r(1)}}));
  CHECK(sw.pieces[1] == Piece::of(r(1, 4), r(3, 4)));
  PiecewiseDensity vx = PiecewiseDensity::linear(r(0), r(1));
  CHECK(eval_value(vx, sw.pieces[0]) == r(1, 4));
  CHECK(eval_value(vx, sw.pieces[1]) == r(1, 4));
  CHECK(check_swap_stable(inst, sw, r(0)).holds);
}

TEST_CASE("sandwich allocation equalizes three agents on v(x)=2x") {
  PiecewiseDensity v2x = PiecewiseDensity::linear(r(0), r(2));
  PiecewiseDensity zero = PiecewiseDensity::constant_density(r(0));
  Instance inst = Instance::make({{v2x, zero, zero}, {zero, v2x, zero}, {zero, zero, v2x}},
                                 Instance::Normalization::Allow);
  Allocation sw = sandwich_allocation(inst);
  for (int p = 0; p < 3; ++p) {
    CHECK(sw.pieces[p].measure() == r(1, 3));
    CHECK(eval_value(v2x, sw.pieces[p]) == r(1, 3));
  }
  CHECK(validate_allocation(inst, sw).complete);
}

TEST_CASE("uniform and sandwich identical-value property on random instances") {
  Rng rng(59);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + t % 3;
    Instance pwc = random_pwc_instance(n, 1 + t % 3, rng);
    ValueTable tu = ValueTable::build(pwc, uniform_allocation(pwc));
    Instance pwl = random_pwl_instance(n, 1 + t % 3, rng);
    ValueTable ts = ValueTable::build(pwl, sandwich_allocation(pwl));
    for (const ValueTable* t2 : {&tu, &ts})
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int p = 1; p < n; ++p)
            CHECK(t2->v(i, j, p) == t2->v(i, j, 0));
    CHECK(check_swap_stable(tu, r(0)).holds);
    CHECK(check_swap_stable(ts, r(0)).holds);
  }
}

TEST_CASE("lemma-2 style equality for random linear slices") {
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + t % 4;  // up to 5 agents
    Rational a(rng.below(17), 16), b(rng.below(17), 16);
    if (t % 2 == 0) b = -a * r(rng.range(0, 1));  // mix in downward slopes
    if (a + b < 0) b = -a;
    PiecewiseDensity v = PiecewiseDensity::linear(a, b);
    // slice [0,1] into 2n equal cells; pair i takes slices i and 2n-1-i
    Rational w = r(1, 2 * n);
    std::vector<Rational> vals;
    for (int i = 0; i < n; ++i) {
      Piece pair = Piece::of({{r(i) * w, r(i + 1) * w},
                              {r(1) - r(i + 1) * w, r(1) - r(i) * w}});
      vals.push_back(eval_value(v, pair));
    }
    for (int i = 1; i < n; ++i) CHECK(vals[i] == vals[0]);
  }
}

TEST_CASE("lower-bound family parameters") {
  CHECK_THROWS_AS(lower_bound_instance(2, r(1, 10)), BadParams);
  CHECK_THROWS_AS(lower_bound_instance(3, r(0)), BadParams);
  CHECK_THROWS_AS(lower_bound_instance(3, r(1)), BadParams);

  for (int n = 3; n <= 8; ++n) {
    Instance inst = lower_bound_instance(n, r(1, 10));
    CHECK(inst.normalized());
    Allocation contig = Allocation::contiguous(n);
    CHECK(check_proportional(inst, contig, r(0)).holds);
    FairnessVerdict swap = check_swap_ef(inst, contig, r(0));
    CHECK_FALSE(swap.holds);
    Rational want = r(1, n) - Rational(1, n * (n - 1));
    bool seen = false;
    for (const Violation& v : swap.witnesses)
      if (v.i == 0 && v.lhs - v.rhs == want) seen = true;
    CHECK(seen);
  }
}

TEST_CASE("zero-cut swap-stable instance") {
  int n = 3;
  PiecewiseDensity zero = PiecewiseDensity::constant_density(r(0));
  PiecewiseDensity off = PiecewiseDensity::constant_density(r(1, n - 1));
  std::vector<std::vector<PiecewiseDensity>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<PiecewiseDensity> row{zero};
    for (int j = 1; j < n; ++j) row.push_back(off);
    rows.push_back(std::move(row));
  }
  Instance inst = from_rows(std::move(rows));
  Allocation alloc = Allocation::empty(n);
  alloc.pieces[0] = Piece::of(r(0), r(1));
  CHECK(check_swap_stable(inst, alloc, r(0)).holds);
  CHECK(count_cuts(alloc) == 0);
}

TEST_CASE("fixture metadata") {
  PaperFixture ex1 = paper_example("ex1", 3);
  CHECK(ex1.expected["values"] == Json::array({"1", "1", "1"}));
  CHECK(ex1.expected["proportional"] == false);

  PaperFixture fx2 = paper_example("ex2");
  CHECK(fx2.expected["values"][0] == "5/8");
  CHECK(fx2.expected["proportional"] == false);
  CHECK(fx2.expected["swap_ef"] == false);
  CHECK_FALSE(fx2.discrepancies.empty());

  PaperFixture fx3 = paper_example("ex3");
  CHECK(fx3.expected["normalization_violation"]["agent"] == 3);
  CHECK(fx3.expected["normalization_violation"]["sum"] == "3");
  CHECK_FALSE(fx3.discrepancies.empty());

  PaperFixture fx4 = paper_example("ex4");
  CHECK(fx4.expected["values"][0] == "5/9");
  CHECK(fx4.expected["swap_stable"] == false);
  CHECK_FALSE(fx4.discrepancies.empty());

  CHECK_THROWS_AS(paper_example("nope"), BadParams);
}

TEST_CASE("symmetric fixture pins the proportional gap") {
  PaperFixture fx = paper_example("thm8");
  Instance inst = instance_from_json(fx.instance_doc);
  CHECK(eval_value(inst.density(0, 0), Interval{r(0), r(1)}) == r(2, 3));
  CHECK(eval_value(inst.density(0, 1), Interval{r(0), r(1)}) == r(1, 3));

  // any complete proportional allocation pins the gap to 1/6
  Allocation proto = two_agent_protocol(inst);
  CHECK(check_proportional(inst, proto, r(0)).holds);
  CHECK(symmetric_fixture_gap(inst, proto) == r(1, 6));

  Allocation halves{{Piece::of(r(0), r(1, 2)), Piece::of(r(1, 2), r(1))}};
  if (check_proportional(inst, halves, r(0)).holds)
    CHECK(symmetric_fixture_gap(inst, halves) == r(1, 6));
}
