#include "chorex/fairness.hpp"

namespace chorex {

const char* notion_name(Notion n) {
  switch (n) {
    case Notion::Proportional: return "proportional";
    case Notion::SwapEF: return "swap_ef";
    case Notion::SwapStable: return "swap_stable";
  }
  return "?";
}

ValueTable ValueTable::build(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.pieces.size()) != inst.agents())
    throw DimensionError("allocation size does not match instance");
  ValueTable t;
  t.n_ = inst.agents();
  t.w_.resize(static_cast<size_t>(t.n_) * t.n_ * t.n_);
  for (int i = 0; i < t.n_; ++i)
    for (int j = 0; j < t.n_; ++j)
      for (int p = 0; p < t.n_; ++p)
        t.w_[static_cast<size_t>((i * t.n_ + j) * t.n_ + p)] =
            eval_value(inst.density(i, j), alloc.pieces[static_cast<size_t>(p)]);
  return t;
}

Rational ValueTable::agent_total(int i) const {
  Rational sum = 0;
  for (int j = 0; j < n_; ++j) sum += v(i, j, j);
  return sum;
}

FairnessVerdict check_proportional(const ValueTable& t, const Rational& eps) {
  FairnessVerdict verdict{Notion::Proportional, eps, true, {}};
  int n = t.agents();
  Rational bound = Rational(1, n) + eps;
  for (int i = 0; i < n; ++i) {
    Rational vi = t.agent_total(i);
    if (vi > bound) {
      verdict.holds = false;
      verdict.witnesses.push_back(
          {Violation::Kind::ProportionalExcess, i, -1, -1, vi, bound});
    }
  }
  return verdict;
}

FairnessVerdict check_swap_ef(const ValueTable& t, const Rational& eps) {
  FairnessVerdict verdict{Notion::SwapEF, eps, true, {}};
  int n = t.agents();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational lhs = t.v(i, i, i) + t.v(i, j, j);
      Rational rhs = t.v(i, i, j) + t.v(i, j, i);
      if (lhs > rhs + eps) {
        verdict.holds = false;
        verdict.witnesses.push_back(
            {Violation::Kind::SwapEnvy, i, j, -1, lhs, rhs});
      }
    }
  return verdict;
}

FairnessVerdict check_swap_stable(const ValueTable& t, const Rational& eps) {
  FairnessVerdict verdict{Notion::SwapStable, eps, true, {}};
  int n = t.agents();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Rational lhs = t.v(i, j, j) + t.v(i, k, k);
        Rational rhs = t.v(i, j, k) + t.v(i, k, j);
        if (lhs > rhs + eps) {
          verdict.holds = false;
          verdict.witnesses.push_back(
              {Violation::Kind::SwapInstability, i, j, k, lhs, rhs});
        }
      }
  return verdict;
}

FairnessVerdict check_proportional(const Instance& inst, const Allocation& alloc,
                                   const Rational& eps) {
  return check_proportional(ValueTable::build(inst, alloc), eps);
}

FairnessVerdict check_swap_ef(const Instance& inst, const Allocation& alloc,
                              const Rational& eps) {
  return check_swap_ef(ValueTable::build(inst, alloc), eps);
}

FairnessVerdict check_swap_stable(const Instance& inst, const Allocation& alloc,
                                  const Rational& eps) {
  return check_swap_stable(ValueTable::build(inst, alloc), eps);
}

FairnessReport audit(const Instance& inst, const Allocation& alloc,
                     const Rational& eps) {
  ValueTable t = ValueTable::build(inst, alloc);
  FairnessReport rep;
  for (int i = 0; i < inst.agents(); ++i) rep.values.push_back(t.agent_total(i));
  rep.social_cost = 0;
  for (const Rational& v : rep.values) rep.social_cost += v;
  rep.cuts = count_cuts(alloc);
  rep.proportional = check_proportional(t, eps);
  rep.swap_ef = check_swap_ef(t, eps);
  rep.swap_stable = check_swap_stable(t, eps);
  return rep;
}

}  // namespace chorex
