#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mudef::trace {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Bounded Borel set modeled as a finite union of disjoint closed intervals.
///
/// Intervals are kept sorted; every interval has finite lo < hi and no two
/// intervals share a point. The empty set (no intervals) is allowed.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Sorts the intervals; throws std::invalid_argument if any is degenerate,
  /// non-finite, or if two intersect.
  explicit IntervalSet(std::vector<Interval> intervals);
  IntervalSet(std::initializer_list<Interval> intervals)
      : IntervalSet(std::vector<Interval>(intervals)) {}

  /// Parses "[a,b]∪[c,d]" or the ASCII form "[a,b]+[c,d]"; "{}" or "∅" is the empty set.
  static IntervalSet parse(std::string_view text);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  /// True iff some interval contains 0.
  bool contains_zero() const;
  /// sup |x| over the set (0 for the empty set).
  double sup_abs() const;
  /// Image under x -> -x.
  IntervalSet reflected() const;
  /// Intervals cut at 0 so that none straddles the origin.
  std::vector<Interval> split_at_zero() const;

  /// ASCII form "[a,b]+[c,d]" with shortest round-trip numbers; "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace mudef::trace
