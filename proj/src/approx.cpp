#include "chorex/approx.hpp"

#include <cmath>
#include <memory>

namespace chorex {

const char* approx_mode_name(ApproxMode mode) {
  return mode == ApproxMode::Prop ? "prop" : "swapef";
}

DyadicGrid DyadicGrid::for_eps(const Rational& eps, const Rational& range_top) {
  if (eps <= 0) throw BadEps("eps must be positive");
  int t = 0;
  Rational pow = 1;
  while (pow * eps < 1) {
    pow *= 2;
    ++t;
  }
  return DyadicGrid{t + 2, range_top};
}

Rational dyadic_floor(const Rational& value, const DyadicGrid& grid) {
  if (value < 0 || value > grid.range_top)
    throw OutOfRange("value " + rational_str(value) + " outside [0, " +
                     rational_str(grid.range_top) + "]");
  return floor_to_multiple(value, pow2(-grid.a));
}

Rational dyadic_floor(double value, const DyadicGrid& grid) {
  return dyadic_floor(rational_from_double(value), grid);
}

namespace {

Rational ceil_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt fl = num / den;
  if (fl * den < num) ++fl;  // q > 0 here
  return Rational(fl);
}

int cell_count(int n, const Rational& k_max, const Rational& eps, ApproxMode mode) {
  Rational q = mode == ApproxMode::Prop ? Rational(2 * n) * k_max / eps
                                        : Rational(8) * k_max / eps;
  Rational cells = q > 0 ? ceil_rational(q) : Rational(0);
  if (cells < 1) cells = 1;
  if (cells > (1 << 20))
    throw BadParams("discretization needs " + rational_str(cells) +
                    " cells; eps too small for this K");
  return static_cast<int>(numerator(cells).convert_to<long long>());
}

double sample(const DensityOracle& o, double x) {
  double v = o.f(x);
  if (!std::isfinite(v))
    throw OracleContractError("oracle returned a non-finite value at x=" +
                              std::to_string(x));
  return v;
}

void contract_checks(const DensityOracle& o, const Rational (&xs)[3],
                     const Rational (&vs)[3]) {
  for (int t = 0; t < 3; ++t) {
    // Slack absorbs double rounding of sample positions and values.
    if (vs[t] < o.M - pow2(-40) || vs[t] > o.U + pow2(-40))
      throw OracleContractError("sample " + rational_str(vs[t]) +
                                " escapes the promised bounds [" +
                                rational_str(o.M) + ", " + rational_str(o.U) + "]");
    if (t > 0) {
      Rational dv = vs[t] - vs[t - 1];
      if (dv < 0) dv = -dv;
      // Slack absorbs double rounding of sample positions and values.
      if (dv > o.K * (xs[t] - xs[t - 1]) + pow2(-40))
        throw OracleContractError("samples violate the promised Lipschitz bound");
    }
  }
}

}  // namespace

DiscretizationResult discretize(const std::vector<std::vector<DensityOracle>>& oracles,
                                const Rational& eps, ApproxMode mode) {
  if (eps <= 0) throw BadEps("eps must be positive");
  int n = static_cast<int>(oracles.size());
  if (n < 2) throw BadParams("need at least 2 agents");
  Rational k_max = 0, u_max = 0;
  for (const auto& row : oracles) {
    if (static_cast<int>(row.size()) != n)
      throw DimensionError("oracle matrix must be n by n");
    for (const DensityOracle& o : row) {
      if (!o.f) throw BadParams("oracle has no evaluator");
      if (o.K < 0 || o.M < 0 || o.U < o.M)
        throw BadParams("need 0 <= M <= U and K >= 0");
      k_max = std::max(k_max, o.K);
      u_max = std::max(u_max, o.U);
    }
  }

  DyadicGrid grid = DyadicGrid::for_eps(eps, u_max);
  int cells = cell_count(n, k_max, eps, mode);
  Rational h(1, cells);
  Rational half = h / 2;

  std::vector<Rational> minima(static_cast<size_t>(n) * n * cells);
  std::vector<Rational> rounded(minima.size());
  std::vector<std::vector<PiecewiseDensity>> dens(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const DensityOracle& o = oracles[static_cast<size_t>(i)][static_cast<size_t>(j)];
      std::vector<std::pair<Interval, Rational>> runs;
      runs.reserve(static_cast<size_t>(cells));
      for (int k = 0; k < cells; ++k) {
        Rational xs[3] = {h * k, h * k + half, h * (k + 1)};
        Rational vs[3];
        for (int t = 0; t < 3; ++t)
          vs[t] = rational_from_double(sample(o, to_double(xs[t])));
        contract_checks(o, xs, vs);
        Rational est = std::min(vs[0], std::min(vs[1], vs[2])) - o.K * half;
        if (est < 0) est = 0;
        Rational p = dyadic_floor(est, grid);
        size_t idx = static_cast<size_t>((i * n + j) * cells + k);
        minima[idx] = est;
        rounded[idx] = p;
        runs.push_back({{xs[0], xs[2]}, p});
      }
      dens[static_cast<size_t>(i)].push_back(PiecewiseDensity::step(runs));
    }
  }

  Instance inst = Instance::make(std::move(dens), Instance::Normalization::Allow);
  Rational band = mode == ApproxMode::Prop ? eps / n : eps / 4;
  Rational certified = Rational(3, 2) * k_max * h + pow2(-grid.a);
  return DiscretizationResult{std::move(inst), cells,     grid,
                              h,               band,      certified,
                              k_max,           std::move(minima), std::move(rounded)};
}

namespace {

// Composite midpoint rule over one piece; fixed order for reproducibility.
double integrate(const DensityOracle& o, const Piece& piece, int q_cells) {
  double sum = 0;
  for (const Interval& iv : piece.intervals()) {
    Rational len = iv.length();
    if (len == 0) continue;
    Rational c = ceil_rational(Rational(q_cells) * len);
    long long steps = numerator(c).convert_to<long long>();
    if (steps < 1) steps = 1;
    double lo = to_double(iv.lo);
    double w = to_double(len) / static_cast<double>(steps);
    double acc = 0;
    for (long long t = 0; t < steps; ++t)
      acc += sample(o, lo + (static_cast<double>(t) + 0.5) * w);
    sum += acc * w;
  }
  return sum;
}

}  // namespace

ApproxResult approx_optimal(const std::vector<std::vector<DensityOracle>>& oracles,
                            const Rational& eps, ApproxMode mode,
                            double tolerance) {
  DiscretizationResult disc = discretize(oracles, eps, mode);
  int n = disc.instance.agents();

  LpMode lp_mode = mode == ApproxMode::Prop ? LpMode::Proportional
                                            : LpMode::ProportionalEpsSwapEF;
  Rational lp_eps = mode == ApproxMode::Prop ? Rational(0) : eps / 2;
  OptimalResult opt = optimal_fair_allocation(disc.instance, lp_mode, lp_eps);

  TrueAudit truth;
  truth.tolerance = tolerance;
  truth.quadrature_cells = 64 * cell_count(n, disc.k_max, eps, ApproxMode::Prop);
  double k_d = to_double(disc.k_max);
  truth.quadrature_bound = k_d / (4.0 * truth.quadrature_cells);
  double slack = tolerance + k_d / (2.0 * truth.quadrature_cells);

  // T[(i*n+j)*n + p] = true V_{i,j}(A_p) by quadrature; only the entries the
  // checks below read are filled.
  std::vector<double> tbl(static_cast<size_t>(n) * n * n, 0.0);
  auto at = [&](int i, int j, int p) -> double& {
    return tbl[static_cast<size_t>((i * n + j) * n + p)];
  };
  auto piece = [&](int p) -> const Piece& {
    return opt.allocation.pieces[static_cast<size_t>(p)];
  };
  for (int i = 0; i < n; ++i) {
    const auto& row = oracles[static_cast<size_t>(i)];
    for (int p = 0; p < n; ++p)
      at(i, i, p) = integrate(row[static_cast<size_t>(i)], piece(p),
                              truth.quadrature_cells);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      at(i, j, j) = integrate(row[static_cast<size_t>(j)], piece(j),
                              truth.quadrature_cells);
      at(i, j, i) = integrate(row[static_cast<size_t>(j)], piece(i),
                              truth.quadrature_cells);
    }
  }

  truth.values.resize(static_cast<size_t>(n));
  truth.proportional = true;
  double bound_i = 1.0 / n + slack;
  for (int i = 0; i < n; ++i) {
    double v = 0;
    for (int j = 0; j < n; ++j) v += at(i, j, j);
    truth.values[static_cast<size_t>(i)] = v;
    truth.social_cost += v;
    if (v > bound_i) truth.proportional = false;
  }

  if (mode == ApproxMode::SwapEf) {
    truth.swap_ef_checked = true;
    double eps_d = to_double(eps);
    for (int i = 0; i < n && truth.swap_ef; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (at(i, i, i) + at(i, j, j) >
            at(i, i, j) + at(i, j, i) + eps_d + slack) {
          truth.swap_ef = false;
          break;
        }
      }
  }

  Rational bound = mode == ApproxMode::Prop ? eps : Rational(n) * eps / 4;
  bool within = truth.social_cost <= to_double(opt.objective + bound) + slack;
  return ApproxResult{std::move(disc),   std::move(opt.allocation),
                      std::move(opt.report), std::move(opt.objective),
                      std::move(bound),  std::move(truth), within};
}

DensityOracle oracle_from_density(const PiecewiseDensity& d) {
  // Double mirrors of the segments so the evaluator never touches rationals.
  struct Seg {
    double lo, hi, a, b;
  };
  auto fast = std::make_shared<std::vector<Seg>>();
  Rational k = 0, m_lo, m_hi;
  bool first = true;
  for (const DensitySegment& s : d.segments()) {
    fast->push_back({to_double(s.interval.lo), to_double(s.interval.hi),
                     to_double(s.a), to_double(s.b)});
    Rational slope = s.b < 0 ? -s.b : s.b;
    k = std::max(k, slope);
    for (const Rational& v : {s.value_at(s.interval.lo), s.value_at(s.interval.hi)}) {
      if (first || v < m_lo) m_lo = v;
      if (first || v > m_hi) m_hi = v;
      first = false;
    }
  }
  DensityOracle o;
  o.f = [fast](double x) {
    if (x < 0) x = 0;
    if (x > 1) x = 1;
    for (const Seg& s : *fast)
      if (x <= s.hi || &s == &fast->back()) return s.a + s.b * x;
    return 0.0;
  };
  o.K = k;
  o.M = m_lo;
  o.U = m_hi;
  return o;
}

std::vector<std::vector<DensityOracle>> oracles_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("oracles"))
    throw SchemaError("oracle spec needs \"n\" and \"oracles\"");
  if (!doc["n"].is_number_integer()) throw SchemaError("\"n\" must be an integer");
  int n = doc["n"].get<int>();
  const Json& rows = doc["oracles"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw SchemaError("\"oracles\" must be an n-element array");

  std::vector<std::vector<DensityOracle>> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError("oracle row must have n entries");
    for (int j = 0; j < n; ++j) {
      const Json& e = row[static_cast<size_t>(j)];
      if (!e.is_object() || !e.contains("family"))
        throw SchemaError("oracle entry needs \"family\"");
      DensityOracle o;
      for (const char* key : {"K", "M", "U"})
        if (!e.contains(key))
          throw SchemaError(std::string("oracle entry needs \"") + key + "\"");
      o.K = number_from_json(e["K"], "\"K\"");
      o.M = number_from_json(e["M"], "\"M\"");
      o.U = number_from_json(e["U"], "\"U\"");
      std::string family = e["family"].get<std::string>();
      if (family == "poly") {
        if (!e.contains("coeffs") || !e["coeffs"].is_array())
          throw SchemaError("poly oracle needs \"coeffs\" array");
        std::vector<double> cs;
        for (const Json& c : e["coeffs"])
          cs.push_back(to_double(number_from_json(c, "coefficient")));
        o.f = [cs](double x) {
          double v = 0;
          for (size_t t = cs.size(); t-- > 0;) v = v * x + cs[t];
          return v;
        };
      } else if (family == "sin") {
        double shift = to_double(number_from_json(e.value("shift", Json("0")), "\"shift\""));
        double amp = to_double(number_from_json(e.value("amp", Json("1")), "\"amp\""));
        double freq = to_double(number_from_json(e.value("freq", Json("1")), "\"freq\""));
        double phase = to_double(number_from_json(e.value("phase", Json("0")), "\"phase\""));
        o.f = [shift, amp, freq, phase](double x) {
          return shift + amp * std::sin(freq * x + phase);
        };
      } else if (family == "pwl") {
        if (!e.contains("points") || !e["points"].is_array() || e["points"].size() < 2)
          throw SchemaError("pwl oracle needs at least 2 points");
        std::vector<std::pair<double, double>> pts;
        for (const Json& p : e["points"]) {
          if (!p.is_array() || p.size() != 2)
            throw SchemaError("pwl point must be [x, y]");
          pts.push_back({to_double(number_from_json(p[0], "x")),
                         to_double(number_from_json(p[1], "y"))});
        }
        for (size_t t = 1; t < pts.size(); ++t)
          if (pts[t].first <= pts[t - 1].first)
            throw SchemaError("pwl points must have increasing x");
        o.f = [pts](double x) {
          if (x <= pts.front().first) return pts.front().second;
          if (x >= pts.back().first) return pts.back().second;
          for (size_t t = 1; t < pts.size(); ++t)
            if (x <= pts[t].first) {
              double w = (x - pts[t - 1].first) / (pts[t].first - pts[t - 1].first);
              return pts[t - 1].second + w * (pts[t].second - pts[t - 1].second);
            }
          return pts.back().second;
        };
      } else {
        throw SchemaError("unknown oracle family \"" + family + "\"");
      }
      out[static_cast<size_t>(i)].push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace chorex
