#include "triang/borel.hpp"

#include <algorithm>
#include <stdexcept>

namespace triang {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

BorelSet BorelSet::canonicalize(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (iv.lo < kZero || iv.hi > kOne)
      throw std::domain_error("BorelSet: endpoint outside [0,1]");
    if (iv.hi < iv.lo) throw std::domain_error("BorelSet: interval with hi < lo");
  }
  std::erase_if(intervals, [](const Interval& iv) { return iv.lo == iv.hi; });
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  BorelSet out;
  for (const Interval& iv : intervals) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      // overlap or abutment: extend the last interval
      if (out.intervals_.back().hi < iv.hi) out.intervals_.back().hi = iv.hi;
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

BorelSet BorelSet::interval(const Rational& lo, const Rational& hi) {
  return canonicalize({Interval{lo, hi}});
}

bool BorelSet::contains_point(const Rational& x) const {
  for (const Interval& iv : intervals_) {
    if (x < iv.lo) return false;
    if (x < iv.hi) return true;
  }
  return false;
}

bool BorelSet::contains_interval(const Interval& cell) const {
  if (cell.lo == cell.hi) return true;
  for (const Interval& iv : intervals_) {
    if (iv.lo <= cell.lo && cell.hi <= iv.hi) return true;
    if (cell.lo < iv.lo) return false;
  }
  return false;
}

Rational BorelSet::measure() const {
  Rational m(0);
  for (const Interval& iv : intervals_) m = m + (iv.hi - iv.lo);
  return m;
}

BorelSet set_union(const BorelSet& a, const BorelSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return BorelSet::canonicalize(std::move(all));
}

BorelSet set_intersect(const BorelSet& a, const BorelSet& b) {
  std::vector<Interval> out;
  for (const Interval& x : a.intervals()) {
    for (const Interval& y : b.intervals()) {
      Rational lo = std::max(x.lo, y.lo);
      Rational hi = std::min(x.hi, y.hi);
      if (lo < hi) out.push_back(Interval{lo, hi});
    }
  }
  return BorelSet::canonicalize(std::move(out));
}

BorelSet complement(const BorelSet& a) {
  std::vector<Interval> out;
  Rational cursor(0);
  for (const Interval& iv : a.intervals()) {
    if (cursor < iv.lo) out.push_back(Interval{cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < Rational(1)) out.push_back(Interval{cursor, Rational(1)});
  return BorelSet::canonicalize(std::move(out));
}

BorelSet set_difference(const BorelSet& a, const BorelSet& b) {
  return set_intersect(a, complement(b));
}

BorelSet combine(SetOp op, const BorelSet& a, const BorelSet& b) {
  switch (op) {
    case SetOp::Union:
      return set_union(a, b);
    case SetOp::Intersect:
      return set_intersect(a, b);
    case SetOp::Difference:
      return set_difference(a, b);
  }
  throw std::logic_error("combine: bad op");
}

std::size_t RefinementPartition::cell_index(const Rational& x) const {
  if (x < Rational(0) || !(x < Rational(1)))
    throw std::domain_error("cell_index: point outside [0,1)");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].lo <= x && x < cells[i].hi) return i;
  }
  throw std::logic_error("cell_index: partition does not cover [0,1)");
}

RefinementPartition refinement(const std::vector<BorelSet>& family) {
  std::vector<Rational> pts = {Rational(0), Rational(1)};
  for (const BorelSet& s : family) {
    for (const Interval& iv : s.intervals()) {
      pts.push_back(iv.lo);
      pts.push_back(iv.hi);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  RefinementPartition part;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] < pts[i + 1]) part.cells.push_back(Interval{pts[i], pts[i + 1]});
  }
  return part;
}

}  // namespace triang
