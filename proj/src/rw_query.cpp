#include "chorex/rw_query.hpp"

#include <numeric>

namespace chorex {

int64_t QueryLedger::total() const {
  return std::accumulate(evals.begin(), evals.end(), int64_t{0}) +
         std::accumulate(cuts.begin(), cuts.end(), int64_t{0});
}

void QueryLedger::reset() {
  std::fill(evals.begin(), evals.end(), 0);
  std::fill(cuts.begin(), cuts.end(), 0);
}

Rational RwSession::evaluate(int i, int j, const Rational& x, const Rational& y) {
  if (x < 0 || y > 1 || x > y) throw BadRange("evaluate needs 0 <= x <= y <= 1");
  const PiecewiseDensity& d = inst_->density(i, j);
  ledger_.evals[static_cast<size_t>(i * ledger_.n + j)] += 1;
  return eval_value(d, Interval{x, y});
}

Rational RwSession::cut(int i, int j, const Rational& x, const Rational& alpha) {
  if (x < 0 || x > 1) throw BadRange("cut needs 0 <= x <= 1");
  if (alpha < 0) throw BadRange("cut needs alpha >= 0");
  const PiecewiseDensity& d = inst_->density(i, j);
  ledger_.cuts[static_cast<size_t>(i * ledger_.n + j)] += 1;
  if (alpha == 0) return x;

  Rational rem = alpha;
  for (const DensitySegment& seg : d.segments()) {
    Rational lo = std::max(x, seg.interval.lo);
    Rational hi = seg.interval.hi;
    if (lo >= hi) continue;
    Rational whole = seg.a * (hi - lo) + seg.b * (hi * hi - lo * lo) / 2;
    if (whole < rem) {
      rem -= whole;
      continue;
    }
    // Smallest y in [lo,hi] with a*(y-lo) + b*(y^2-lo^2)/2 = rem.
    if (seg.b == 0) {
      if (seg.a == 0) continue;  // zero segment adds nothing; rem > 0 moves on
      return lo + rem / seg.a;
    }
    // (b/2) y^2 + a y - (rem + a lo + (b/2) lo^2) = 0
    Rational c2 = seg.b / 2;
    Rational c1 = seg.a;
    Rational c0 = -(rem + seg.a * lo + c2 * lo * lo);
    Rational disc = c1 * c1 - 4 * c2 * c0;
    std::optional<Rational> root = exact_sqrt(disc);
    if (!root)
      throw IrrationalCutError("cut point on a linear-density segment is irrational");
    Rational r1 = (-c1 - *root) / (2 * c2);
    Rational r2 = (-c1 + *root) / (2 * c2);
    if (r1 > r2) std::swap(r1, r2);
    if (lo <= r1 && r1 <= hi) return r1;
    if (lo <= r2 && r2 <= hi) return r2;
    throw BadRange("cut solution escaped its segment");  // unreachable
  }
  throw Unreachable(rem, "cut target exceeds available mass by " + rational_str(rem));
}

}  // namespace chorex
