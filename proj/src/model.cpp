#include "chorex/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chorex {

bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

Piece Piece::of(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& iv) { return iv.degenerate(); });
  for (const Interval& iv : intervals)
    if (iv.lo > iv.hi) throw BadRange("interval with lo > hi");
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) {
              return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
            });
  Piece p;
  for (const Interval& iv : intervals) {
    if (!p.ivs_.empty() && iv.lo <= p.ivs_.back().hi) {
      if (iv.hi > p.ivs_.back().hi) p.ivs_.back().hi = iv.hi;
    } else {
      p.ivs_.push_back(iv);
    }
  }
  return p;
}

Piece Piece::of(const Rational& lo, const Rational& hi) {
  return of(std::vector<Interval>{{lo, hi}});
}

Rational Piece::measure() const {
  Rational m = 0;
  for (const Interval& iv : ivs_) m += iv.length();
  return m;
}

bool operator==(const Piece& a, const Piece& b) {
  return a.intervals() == b.intervals();
}

Allocation Allocation::contiguous(int n) {
  Allocation a;
  for (int i = 0; i < n; ++i)
    a.pieces.push_back(Piece::of(Rational(i, n), Rational(i + 1, n)));
  return a;
}

bool operator==(const Allocation& a, const Allocation& b) {
  return a.pieces == b.pieces;
}

PiecewiseDensity::PiecewiseDensity(std::vector<DensitySegment> segments)
    : segs_(std::move(segments)) {
  if (segs_.empty()) throw SchemaError("density with no segments");
  if (segs_.front().interval.lo != 0 || segs_.back().interval.hi != 1)
    throw SchemaError("density segments must tile [0,1]");
  for (size_t k = 0; k < segs_.size(); ++k) {
    const DensitySegment& s = segs_[k];
    if (s.interval.lo >= s.interval.hi)
      throw SchemaError("density segment with non-positive width");
    if (k > 0 && segs_[k - 1].interval.hi != s.interval.lo)
      throw SchemaError("density segments must tile [0,1] without gaps");
    if (s.value_at(s.interval.lo) < 0 || s.value_at(s.interval.hi) < 0)
      throw NegativeDensityError("density negative on [" +
                                 rational_str(s.interval.lo) + "," +
                                 rational_str(s.interval.hi) + "]");
  }
}

bool PiecewiseDensity::constant() const {
  for (const DensitySegment& s : segs_)
    if (s.b != 0) return false;
  return true;
}

Rational PiecewiseDensity::total() const {
  return eval_value(*this, Interval{Rational(0), Rational(1)});
}

PiecewiseDensity PiecewiseDensity::step(
    const std::vector<std::pair<Interval, Rational>>& runs) {
  std::vector<DensitySegment> segs;
  for (const auto& [iv, v] : runs) segs.push_back({iv, v, Rational(0)});
  return PiecewiseDensity(std::move(segs));
}

PiecewiseDensity PiecewiseDensity::constant_density(const Rational& value) {
  return step({{Interval{Rational(0), Rational(1)}, value}});
}

PiecewiseDensity PiecewiseDensity::on_support(const Interval& support,
                                              const Rational& value) {
  std::vector<std::pair<Interval, Rational>> runs;
  if (support.lo > 0) runs.push_back({Interval{Rational(0), support.lo}, Rational(0)});
  runs.push_back({support, value});
  if (support.hi < 1) runs.push_back({Interval{support.hi, Rational(1)}, Rational(0)});
  return step(runs);
}

PiecewiseDensity PiecewiseDensity::linear(const Rational& a, const Rational& b) {
  return PiecewiseDensity({{Interval{Rational(0), Rational(1)}, a, b}});
}

PiecewiseDensity PiecewiseDensity::scaled(const Rational& factor) const {
  std::vector<DensitySegment> segs = segs_;
  for (DensitySegment& s : segs) {
    s.a *= factor;
    s.b *= factor;
  }
  return PiecewiseDensity(std::move(segs));
}

Rational eval_value(const PiecewiseDensity& density, const Interval& iv) {
  Rational lo = std::max(iv.lo, Rational(0));
  Rational hi = std::min(iv.hi, Rational(1));
  if (lo >= hi) return Rational(0);
  Rational sum = 0;
  for (const DensitySegment& s : density.segments()) {
    Rational x = std::max(lo, s.interval.lo);
    Rational y = std::min(hi, s.interval.hi);
    if (x >= y) continue;
    // integral of a + b*u over [x,y]
    sum += s.a * (y - x) + s.b * (y * y - x * x) / 2;
  }
  return sum;
}

Rational eval_value(const PiecewiseDensity& density, const Piece& piece) {
  Rational sum = 0;
  for (const Interval& iv : piece.intervals()) sum += eval_value(density, iv);
  return sum;
}

Instance Instance::make(std::vector<std::vector<PiecewiseDensity>> densities,
                        Normalization policy, std::vector<Rational>* scales_out) {
  int n = static_cast<int>(densities.size());
  if (n == 0) throw DimensionError("instance needs at least one agent");
  for (const auto& row : densities)
    if (static_cast<int>(row.size()) != n)
      throw DimensionError("density matrix must be n-by-n");

  if (scales_out) scales_out->assign(static_cast<size_t>(n), Rational(1));
  for (int i = 0; i < n; ++i) {
    Rational total = 0;
    for (int j = 0; j < n; ++j) total += densities[i][j].total();
    if (policy == Normalization::Require && total != 1)
      throw NormalizationError(i + 1, total,
                               "agent " + std::to_string(i + 1) +
                                   " densities integrate to " + rational_str(total) +
                                   ", expected 1");
    if (policy == Normalization::Rescale) {
      if (total == 0)
        throw NormalizationError(i + 1, total,
                                 "agent " + std::to_string(i + 1) +
                                     " densities integrate to 0; cannot rescale");
      if (total != 1) {
        for (int j = 0; j < n; ++j)
          densities[i][j] = densities[i][j].scaled(1 / total);
        if (scales_out) (*scales_out)[static_cast<size_t>(i)] = 1 / total;
      }
    }
  }

  std::set<Rational> cuts;
  for (const auto& row : densities)
    for (const PiecewiseDensity& d : row)
      for (const DensitySegment& s : d.segments()) {
        cuts.insert(s.interval.lo);
        cuts.insert(s.interval.hi);
      }

  Instance inst;
  inst.n_ = n;
  inst.dens_ = std::move(densities);
  inst.breaks_.assign(cuts.begin(), cuts.end());
  return inst;
}

const PiecewiseDensity& Instance::density(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw DimensionError("density index out of range");
  return dens_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Interval Instance::refinement_interval(int k) const {
  if (k < 0 || k >= interval_count())
    throw DimensionError("refinement interval index out of range");
  return {breaks_[static_cast<size_t>(k)], breaks_[static_cast<size_t>(k) + 1]};
}

bool Instance::piecewise_constant() const {
  for (const auto& row : dens_)
    for (const PiecewiseDensity& d : row)
      if (!d.constant()) return false;
  return true;
}

bool Instance::normalized() const {
  for (int i = 0; i < n_; ++i) {
    Rational total = 0;
    for (int j = 0; j < n_; ++j) total += dens_[i][j].total();
    if (total != 1) return false;
  }
  return true;
}

Rational agent_value(const Instance& inst, const Allocation& alloc, int i) {
  if (static_cast<int>(alloc.pieces.size()) != inst.agents())
    throw DimensionError("allocation has " + std::to_string(alloc.pieces.size()) +
                         " pieces for " + std::to_string(inst.agents()) + " agents");
  if (i < 0 || i >= inst.agents()) throw DimensionError("agent index out of range");
  Rational sum = 0;
  for (int j = 0; j < inst.agents(); ++j)
    sum += eval_value(inst.density(i, j), alloc.pieces[static_cast<size_t>(j)]);
  return sum;
}

Rational social_cost(const Instance& inst, const Allocation& alloc) {
  Rational sum = 0;
  for (int i = 0; i < inst.agents(); ++i) sum += agent_value(inst, alloc, i);
  return sum;
}

int count_cuts(const Allocation& alloc) {
  // Owner of each elementary gap between consecutive endpoints; -1 = nobody.
  std::set<Rational> points{Rational(0), Rational(1)};
  for (const Piece& p : alloc.pieces)
    for (const Interval& iv : p.intervals()) {
      points.insert(iv.lo);
      points.insert(iv.hi);
    }
  std::vector<Rational> pts(points.begin(), points.end());
  int prev_owner = -2;
  int cuts = 0;
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k + 1] <= 0 || pts[k] >= 1) continue;
    Rational mid = (pts[k] + pts[k + 1]) / 2;
    int owner = -1;
    for (size_t i = 0; i < alloc.pieces.size() && owner < 0; ++i)
      for (const Interval& iv : alloc.pieces[i].intervals())
        if (iv.lo <= mid && mid < iv.hi) {
          owner = static_cast<int>(i);
          break;
        }
    if (prev_owner != -2 && owner != prev_owner) ++cuts;
    prev_owner = owner;
  }
  return cuts;
}

ValidityReport validate_allocation(const Instance& inst, const Allocation& alloc) {
  ValidityReport rep;
  int n = inst.agents();
  if (static_cast<int>(alloc.pieces.size()) != n) {
    rep.dimension_ok = false;
    rep.in_range = rep.disjoint = rep.complete = false;
    return rep;
  }
  for (const Piece& p : alloc.pieces)
    for (const Interval& iv : p.intervals())
      if (iv.lo < 0 || iv.hi > 1) {
        rep.in_range = false;
        rep.out_of_range.push_back(iv);
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (const Interval& x : alloc.pieces[static_cast<size_t>(a)].intervals())
        for (const Interval& y : alloc.pieces[static_cast<size_t>(b)].intervals()) {
          Rational lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
          if (lo < hi) {
            rep.disjoint = false;
            rep.overlaps.push_back({a, b, Interval{lo, hi}});
          }
        }
  // Gaps: union of all pieces vs [0,1].
  std::vector<Interval> all;
  for (const Piece& p : alloc.pieces)
    for (const Interval& iv : p.intervals()) all.push_back(iv);
  Piece u = Piece::of(std::move(all));
  Rational pos = 0;
  for (const Interval& iv : u.intervals()) {
    if (iv.lo > pos) rep.gaps.push_back({pos, iv.lo});
    pos = std::max(pos, iv.hi);
  }
  if (pos < 1) rep.gaps.push_back({pos, Rational(1)});
  rep.complete = rep.gaps.empty();
  return rep;
}

}  // namespace chorex
