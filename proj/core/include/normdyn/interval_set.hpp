#pragma once

#include <vector>

namespace normdyn {

/// Sub-interval of [0, 1] with explicit endpoint inclusion.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool contains(double x) const {
    return (x > lo || (lo_closed && x == lo)) && (x < hi || (hi_closed && x == hi));
  }
  double length() const { return empty() ? 0.0 : hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted union of pairwise disjoint, non-adjacent intervals inside [0, 1].
///
/// Open/closed endpoints are tracked so that measure-zero success points
/// (for instance c_j = mu_j when the collaboration surplus is zero) survive
/// complementation.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval interval);

  /// Adds an interval (clipped to [0, 1]) and merges overlapping or touching pieces.
  void add(Interval interval);
  IntervalSet united(const IntervalSet& other) const;
  IntervalSet complement() const;
  IntervalSet intersected(const Interval& window) const;

  bool contains(double x) const;
  bool empty() const { return parts_.empty(); }
  double length() const;
  const std::vector<Interval>& intervals() const { return parts_; }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace normdyn
