#pragma once

#include <vector>

#include "triang/rational.hpp"

namespace triang {

/// Half-open interval [lo, hi) inside [0,1).
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Borel set modeled as a canonical finite union of half-open intervals with
/// rational endpoints: pairwise disjoint, sorted, non-abutting. Canonical form
/// is unique, so operator== is pointwise-equality of indicator functions.
class BorelSet {
 public:
  BorelSet() = default;

  /// Canonicalizes an arbitrary interval list (merging overlaps and abutting
  /// neighbors). Throws std::domain_error on endpoints outside [0,1].
  static BorelSet canonicalize(std::vector<Interval> intervals);

  /// [lo, hi) as a one-interval set; empty when lo == hi.
  static BorelSet interval(const Rational& lo, const Rational& hi);

  static BorelSet empty() { return BorelSet(); }
  static BorelSet full() { return interval(Rational(0), Rational(1)); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool is_empty() const { return intervals_.empty(); }

  bool contains_point(const Rational& x) const;
  /// True iff [cell.lo, cell.hi) is entirely inside the set.
  bool contains_interval(const Interval& cell) const;

  Rational measure() const;

  friend bool operator==(const BorelSet& a, const BorelSet& b) {
    return a.intervals_ == b.intervals_;
  }
  friend bool operator!=(const BorelSet& a, const BorelSet& b) { return !(a == b); }

 private:
  std::vector<Interval> intervals_;
};

enum class SetOp { Union, Intersect, Difference };

BorelSet combine(SetOp op, const BorelSet& a, const BorelSet& b);
BorelSet set_union(const BorelSet& a, const BorelSet& b);
BorelSet set_intersect(const BorelSet& a, const BorelSet& b);
BorelSet set_difference(const BorelSet& a, const BorelSet& b);
/// Complement within [0,1).
BorelSet complement(const BorelSet& a);

/// Consecutive cells covering [0,1); every generating set is a union of cells.
struct RefinementPartition {
  std::vector<Interval> cells;

  /// Index of the cell containing x in [0,1). Throws outside the domain.
  std::size_t cell_index(const Rational& x) const;
};

/// Minimal common refinement of a finite family: cells between consecutive
/// distinct endpoints. The empty family yields the single cell [0,1).
RefinementPartition refinement(const std::vector<BorelSet>& family);

}  // namespace triang
