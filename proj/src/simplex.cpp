#include "chorex/simplex.hpp"

#include <algorithm>

#include "chorex/errors.hpp"

namespace chorex {

namespace {

// Dense tableau over the transformed system A'x = b', b' >= 0, with slack and
// artificial columns appended after the structural ones.
struct Tableau {
  int nv = 0;           // structural variables
  int ncols = 0;        // structural + slack + artificial
  std::vector<std::vector<Rational>> a;  // per row: ncols coefficients
  std::vector<Rational> rhs;
  std::vector<int> basis;       // basic column per row
  std::vector<Rational> obj;    // reduced costs, size ncols
  Rational obj_val;             // current objective value
  std::vector<char> allowed;    // columns eligible to enter

  int rows() const { return static_cast<int>(a.size()); }

  void pivot(int r, int e) {
    Rational p = a[static_cast<size_t>(r)][static_cast<size_t>(e)];
    auto& row = a[static_cast<size_t>(r)];
    for (Rational& v : row) v /= p;
    rhs[static_cast<size_t>(r)] /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(e)];
      if (f == 0) continue;
      auto& other = a[static_cast<size_t>(i)];
      for (int j = 0; j < ncols; ++j)
        other[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
      rhs[static_cast<size_t>(i)] -= f * rhs[static_cast<size_t>(r)];
    }
    Rational f = obj[static_cast<size_t>(e)];
    if (f != 0) {
      for (int j = 0; j < ncols; ++j)
        obj[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
      obj_val += f * rhs[static_cast<size_t>(r)];
    }
    basis[static_cast<size_t>(r)] = e;
  }

  void set_costs(const std::vector<Rational>& costs) {
    obj = costs;
    obj_val = 0;
    for (int r = 0; r < rows(); ++r) {
      Rational cb = costs[static_cast<size_t>(basis[static_cast<size_t>(r)])];
      if (cb == 0) continue;
      for (int j = 0; j < ncols; ++j)
        obj[static_cast<size_t>(j)] -=
            cb * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
      obj_val += cb * rhs[static_cast<size_t>(r)];
    }
  }

  // Bland's rule. Returns Optimal or Unbounded (entering column reported via
  // *entering for the ray).
  LpStatus iterate(int* entering = nullptr) {
    for (;;) {
      int e = -1;
      for (int j = 0; j < ncols; ++j)
        if (allowed[static_cast<size_t>(j)] && obj[static_cast<size_t>(j)] < 0) {
          e = j;
          break;
        }
      if (e < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int r = 0; r < rows(); ++r) {
        const Rational& arj = a[static_cast<size_t>(r)][static_cast<size_t>(e)];
        if (arj <= 0) continue;
        Rational ratio = rhs[static_cast<size_t>(r)] / arj;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<size_t>(r)] <
                                  basis[static_cast<size_t>(leave)])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) {
        if (entering) *entering = e;
        return LpStatus::Unbounded;
      }
      pivot(leave, e);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  int nv = problem.vars;
  int m = static_cast<int>(problem.rows.size());
  for (const LpRow& row : problem.rows)
    if (static_cast<int>(row.coeffs.size()) != nv)
      throw DimensionError("LP row width does not match variable count");
  if (static_cast<int>(problem.objective.size()) != nv)
    throw DimensionError("LP objective width does not match variable count");

  std::vector<int> slack_col(static_cast<size_t>(m), -1);
  std::vector<int> art_col(static_cast<size_t>(m), -1);
  std::vector<int> row_sign(static_cast<size_t>(m), 1);

  int ncols = nv;
  for (int i = 0; i < m; ++i)
    if (problem.rows[static_cast<size_t>(i)].sense != Sense::EQ)
      slack_col[static_cast<size_t>(i)] = ncols++;
  int first_art = ncols;

  Tableau t;
  t.nv = nv;
  for (int i = 0; i < m; ++i) {
    const LpRow& row = problem.rows[static_cast<size_t>(i)];
    // Rows with negative rhs are negated so b' >= 0 throughout.
    int sign = row.rhs < 0 ? -1 : 1;
    row_sign[static_cast<size_t>(i)] = sign;
    std::vector<Rational> coeffs(static_cast<size_t>(ncols), Rational(0));
    for (int j = 0; j < nv; ++j)
      coeffs[static_cast<size_t>(j)] = sign * row.coeffs[static_cast<size_t>(j)];
    if (slack_col[static_cast<size_t>(i)] >= 0) {
      Rational sc = row.sense == Sense::LE ? 1 : -1;
      coeffs[static_cast<size_t>(slack_col[static_cast<size_t>(i)])] = sign * sc;
    }
    t.a.push_back(std::move(coeffs));
    t.rhs.push_back(sign * row.rhs);
  }

  // Slack is a valid starting basis iff its transformed coefficient is +1.
  t.basis.assign(static_cast<size_t>(m), -1);
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    int sc = slack_col[static_cast<size_t>(i)];
    if (sc >= 0 && t.a[static_cast<size_t>(i)][static_cast<size_t>(sc)] == 1)
      t.basis[static_cast<size_t>(i)] = sc;
    else
      ++n_art;
  }
  t.ncols = ncols + n_art;
  for (auto& row : t.a) row.resize(static_cast<size_t>(t.ncols), Rational(0));
  {
    int next = first_art;
    for (int i = 0; i < m; ++i)
      if (t.basis[static_cast<size_t>(i)] < 0) {
        art_col[static_cast<size_t>(i)] = next;
        t.a[static_cast<size_t>(i)][static_cast<size_t>(next)] = 1;
        t.basis[static_cast<size_t>(i)] = next;
        ++next;
      }
  }
  t.allowed.assign(static_cast<size_t>(t.ncols), 1);

  LpSolution sol;

  if (n_art > 0) {
    std::vector<Rational> phase1(static_cast<size_t>(t.ncols), Rational(0));
    for (int j = first_art; j < t.ncols; ++j) phase1[static_cast<size_t>(j)] = 1;
    t.set_costs(phase1);
    t.iterate();
    if (t.obj_val > 0) {
      // Farkas: y'_i = -d(slack_i)/coef or 1 - d(artificial_i), mapped back
      // through the row negations.
      sol.status = LpStatus::Infeasible;
      sol.farkas.assign(static_cast<size_t>(m), Rational(0));
      for (int i = 0; i < m; ++i) {
        Rational yhat;
        if (art_col[static_cast<size_t>(i)] >= 0) {
          yhat = 1 - t.obj[static_cast<size_t>(art_col[static_cast<size_t>(i)])];
        } else {
          int sc = slack_col[static_cast<size_t>(i)];
          // transformed slack coefficient was +1 by construction here
          yhat = -t.obj[static_cast<size_t>(sc)];
        }
        sol.farkas[static_cast<size_t>(i)] =
            -Rational(row_sign[static_cast<size_t>(i)]) * yhat;
      }
      return sol;
    }
    // Remove artificials from the basis (all at level zero now).
    for (int r = 0; r < t.rows(); ++r) {
      if (t.basis[static_cast<size_t>(r)] < first_art) continue;
      int piv = -1;
      for (int j = 0; j < first_art; ++j)
        if (t.a[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0) {
          piv = j;
          break;
        }
      if (piv >= 0) {
        t.pivot(r, piv);
      } else {
        // Redundant row.
        t.a.erase(t.a.begin() + r);
        t.rhs.erase(t.rhs.begin() + r);
        t.basis.erase(t.basis.begin() + r);
        --r;
      }
    }
    for (int j = first_art; j < t.ncols; ++j) t.allowed[static_cast<size_t>(j)] = 0;
  }

  std::vector<Rational> phase2(static_cast<size_t>(t.ncols), Rational(0));
  for (int j = 0; j < nv; ++j)
    phase2[static_cast<size_t>(j)] = problem.objective[static_cast<size_t>(j)];
  t.set_costs(phase2);
  int entering = -1;
  LpStatus st = t.iterate(&entering);
  if (st == LpStatus::Unbounded) {
    sol.status = LpStatus::Unbounded;
    sol.ray.assign(static_cast<size_t>(nv), Rational(0));
    if (entering < nv) sol.ray[static_cast<size_t>(entering)] = 1;
    for (int r = 0; r < t.rows(); ++r) {
      int b = t.basis[static_cast<size_t>(r)];
      if (b < nv)
        sol.ray[static_cast<size_t>(b)] =
            -t.a[static_cast<size_t>(r)][static_cast<size_t>(entering)];
    }
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(static_cast<size_t>(nv), Rational(0));
  for (int r = 0; r < t.rows(); ++r) {
    int b = t.basis[static_cast<size_t>(r)];
    if (b < nv) sol.x[static_cast<size_t>(b)] = t.rhs[static_cast<size_t>(r)];
  }
  sol.objective = 0;
  for (int j = 0; j < nv; ++j)
    sol.objective += problem.objective[static_cast<size_t>(j)] * sol.x[static_cast<size_t>(j)];
  return sol;
}

std::string lp_to_text(const LpProblem& problem) {
  std::string out = "min";
  for (const Rational& c : problem.objective) {
    out += ' ';
    out += rational_str(c);
  }
  out += '\n';
  for (const LpRow& row : problem.rows) {
    out += row.sense == Sense::LE ? "le" : (row.sense == Sense::EQ ? "eq" : "ge");
    for (const Rational& c : row.coeffs) {
      out += ' ';
      out += rational_str(c);
    }
    out += ' ';
    out += rational_str(row.rhs);
    if (!row.label.empty()) {
      out += "  # ";
      out += row.label;
    }
    out += '\n';
  }
  return out;
}

}  // namespace chorex
