#include "chorex/optimize.hpp"

namespace chorex {

const char* lp_mode_name(LpMode mode) {
  switch (mode) {
    case LpMode::Unconstrained: return "unconstrained";
    case LpMode::Proportional: return "prop";
    case LpMode::ProportionalSwapEF: return "prop-swapef";
    case LpMode::ProportionalEpsSwapEF: return "prop-eps-swapef";
    case LpMode::SwapStable: return "swap-stable";
  }
  return "?";
}

FractionMatrix FractionMatrix::uniform(int n, int m) {
  FractionMatrix fr;
  fr.n = n;
  fr.m = m;
  fr.x.assign(static_cast<size_t>(n) * m, Rational(1, n));
  return fr;
}

void FractionMatrix::validate() const {
  if (n < 1 || m < 1 || x.size() != static_cast<size_t>(n) * m)
    throw InvalidFractions("fraction matrix shape mismatch");
  for (const Rational& v : x)
    if (v < 0) throw InvalidFractions("negative fraction");
  for (int k = 0; k < m; ++k) {
    Rational sum = 0;
    for (int i = 0; i < n; ++i) sum += at(i, k);
    if (sum != 1)
      throw InvalidFractions("column " + std::to_string(k) + " sums to " +
                             rational_str(sum) + ", expected 1");
  }
}

namespace {

// values[i][j][k] = V_{i,j}(I_k)
std::vector<Rational> interval_values(const Instance& inst) {
  int n = inst.agents(), m = inst.interval_count();
  std::vector<Rational> c(static_cast<size_t>(n) * n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        c[static_cast<size_t>((i * n + j) * m + k)] =
            eval_value(inst.density(i, j), inst.refinement_interval(k));
  return c;
}

Allocation assignment_to_allocation(const Instance& inst,
                                    const std::vector<int>& owner) {
  int n = inst.agents();
  std::vector<std::vector<Interval>> parts(static_cast<size_t>(n));
  for (int k = 0; k < inst.interval_count(); ++k)
    parts[static_cast<size_t>(owner[static_cast<size_t>(k)])].push_back(
        inst.refinement_interval(k));
  Allocation a;
  for (auto& ivs : parts) a.pieces.push_back(Piece::of(std::move(ivs)));
  return a;
}

}  // namespace

Allocation greedy_optimal(const Instance& inst) {
  int n = inst.agents(), m = inst.interval_count();
  std::vector<Rational> c = interval_values(inst);
  std::vector<int> owner(static_cast<size_t>(m), 0);
  for (int k = 0; k < m; ++k) {
    int best = 0;
    Rational best_sum;
    for (int j = 0; j < n; ++j) {
      Rational sum = 0;
      for (int i = 0; i < n; ++i)
        sum += c[static_cast<size_t>((i * n + j) * m + k)];
      if (j == 0 || sum < best_sum) {
        best = j;
        best_sum = sum;
      }
    }
    owner[static_cast<size_t>(k)] = best;
  }
  return assignment_to_allocation(inst, owner);
}

Allocation greedy_optimal_queried(RwSession& session) {
  const Instance& inst = session.instance();
  int n = inst.agents(), m = inst.interval_count();
  std::vector<int> owner(static_cast<size_t>(m), 0);
  for (int k = 0; k < m; ++k) {
    Interval iv = inst.refinement_interval(k);
    int best = 0;
    Rational best_sum;
    for (int j = 0; j < n; ++j) {
      Rational sum = 0;
      for (int i = 0; i < n; ++i) sum += session.evaluate(i, j, iv.lo, iv.hi);
      if (j == 0 || sum < best_sum) {
        best = j;
        best_sum = sum;
      }
    }
    owner[static_cast<size_t>(k)] = best;
  }
  return assignment_to_allocation(inst, owner);
}

LpProblem build_lp(const Instance& inst, LpMode mode, const Rational& eps) {
  if (mode == LpMode::ProportionalEpsSwapEF && eps < 0)
    throw BadEps("eps must be >= 0");
  int n = inst.agents(), m = inst.interval_count();
  std::vector<Rational> c = interval_values(inst);
  auto cval = [&](int i, int j, int k) -> const Rational& {
    return c[static_cast<size_t>((i * n + j) * m + k)];
  };
  auto var = [m](int i, int k) { return i * m + k; };

  LpProblem lp;
  lp.vars = n * m;
  lp.mode_label = lp_mode_name(mode);
  lp.objective.assign(static_cast<size_t>(lp.vars), Rational(0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < m; ++k) {
      Rational sum = 0;
      for (int i = 0; i < n; ++i) sum += cval(i, j, k);
      lp.objective[static_cast<size_t>(var(j, k))] = sum;
    }

  for (int k = 0; k < m; ++k) {
    LpRow row;
    row.coeffs.assign(static_cast<size_t>(lp.vars), Rational(0));
    for (int i = 0; i < n; ++i) row.coeffs[static_cast<size_t>(var(i, k))] = 1;
    row.sense = Sense::EQ;
    row.rhs = 1;
    row.label = "cover " + std::to_string(k + 1);
    lp.rows.push_back(std::move(row));
  }

  bool proportional = mode != LpMode::Unconstrained;
  if (proportional)
    for (int i = 0; i < n; ++i) {
      LpRow row;
      row.coeffs.assign(static_cast<size_t>(lp.vars), Rational(0));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < m; ++k)
          row.coeffs[static_cast<size_t>(var(j, k))] += cval(i, j, k);
      row.sense = Sense::LE;
      row.rhs = Rational(1, n);
      row.label = "prop " + std::to_string(i + 1);
      lp.rows.push_back(std::move(row));
    }

  if (mode == LpMode::ProportionalSwapEF || mode == LpMode::ProportionalEpsSwapEF) {
    Rational slack = mode == LpMode::ProportionalEpsSwapEF ? eps : Rational(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        LpRow row;
        row.coeffs.assign(static_cast<size_t>(lp.vars), Rational(0));
        for (int k = 0; k < m; ++k) {
          Rational d = cval(i, i, k) - cval(i, j, k);
          row.coeffs[static_cast<size_t>(var(i, k))] += d;
          row.coeffs[static_cast<size_t>(var(j, k))] -= d;
        }
        row.sense = Sense::LE;
        row.rhs = slack;
        row.label = "swapef " + std::to_string(i + 1) + " " + std::to_string(j + 1);
        lp.rows.push_back(std::move(row));
      }
  }

  if (mode == LpMode::SwapStable)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          LpRow row;
          row.coeffs.assign(static_cast<size_t>(lp.vars), Rational(0));
          for (int t = 0; t < m; ++t) {
            Rational d = cval(i, j, t) - cval(i, k, t);
            row.coeffs[static_cast<size_t>(var(j, t))] += d;
            row.coeffs[static_cast<size_t>(var(k, t))] -= d;
          }
          row.sense = Sense::LE;
          row.rhs = 0;
          row.label = "swapstable " + std::to_string(i + 1) + " {" +
                      std::to_string(j + 1) + "," + std::to_string(k + 1) + "}";
          lp.rows.push_back(std::move(row));
        }

  return lp;
}

Allocation realize_fractions(const Instance& inst, const FractionMatrix& fr) {
  fr.validate();
  if (fr.n != inst.agents() || fr.m != inst.interval_count())
    throw InvalidFractions("fraction matrix does not match instance shape");
  int n = fr.n;
  bool pwc = inst.piecewise_constant();
  std::vector<std::vector<Interval>> parts(static_cast<size_t>(n));
  for (int k = 0; k < fr.m; ++k) {
    Interval iv = inst.refinement_interval(k);
    Rational w = iv.length();
    Rational acc = 0;
    for (int i = 0; i < n; ++i) {
      Rational next = acc + fr.at(i, k);
      if (pwc) {
        parts[static_cast<size_t>(i)].push_back(
            {iv.lo + w * acc, iv.lo + w * next});
      } else {
        // Symmetric pair around the midpoint; exact for linear densities.
        Rational half = w / 2;
        parts[static_cast<size_t>(i)].push_back(
            {iv.lo + half * acc, iv.lo + half * next});
        parts[static_cast<size_t>(i)].push_back(
            {iv.hi - half * next, iv.hi - half * acc});
      }
      acc = next;
    }
  }
  Allocation a;
  for (auto& ivs : parts) a.pieces.push_back(Piece::of(std::move(ivs)));
  return a;
}

OptimalResult optimal_fair_allocation(const Instance& inst, LpMode mode,
                                      const Rational& eps) {
  LpProblem lp = build_lp(inst, mode, eps);
  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::Infeasible)
    throw InfeasibleModel("no feasible assignment under mode " +
                          std::string(lp_mode_name(mode)));
  if (sol.status == LpStatus::Unbounded)
    throw Error("internal", "assignment LP cannot be unbounded");

  OptimalResult res;
  res.fractions.n = inst.agents();
  res.fractions.m = inst.interval_count();
  res.fractions.x = sol.x;
  res.objective = sol.objective;
  res.allocation = realize_fractions(inst, res.fractions);
  Rational audit_eps = mode == LpMode::ProportionalEpsSwapEF ? eps : Rational(0);
  res.report = audit(inst, res.allocation, audit_eps);
  return res;
}

}  // namespace chorex
