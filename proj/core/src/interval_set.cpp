#include "normdyn/interval_set.hpp"

#include <algorithm>

namespace normdyn {
namespace {

Interval intersect(const Interval& x, const Interval& y) {
  Interval out;
  if (x.lo > y.lo) {
    out.lo = x.lo;
    out.lo_closed = x.lo_closed;
  } else if (y.lo > x.lo) {
    out.lo = y.lo;
    out.lo_closed = y.lo_closed;
  } else {
    out.lo = x.lo;
    out.lo_closed = x.lo_closed && y.lo_closed;
  }
  if (x.hi < y.hi) {
    out.hi = x.hi;
    out.hi_closed = x.hi_closed;
  } else if (y.hi < x.hi) {
    out.hi = y.hi;
    out.hi_closed = y.hi_closed;
  } else {
    out.hi = x.hi;
    out.hi_closed = x.hi_closed && y.hi_closed;
  }
  return out;
}

const Interval kUnit{0.0, 1.0, true, true};

}  // namespace

IntervalSet::IntervalSet(Interval interval) { add(interval); }

void IntervalSet::add(Interval interval) {
  interval = intersect(interval, kUnit);
  if (interval.empty()) return;
  parts_.push_back(interval);
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });

  std::vector<Interval> merged;
  for (const auto& part : parts_) {
    if (!merged.empty()) {
      auto& last = merged.back();
      const bool joins =
          part.lo < last.hi || (part.lo == last.hi && (last.hi_closed || part.lo_closed));
      if (joins) {
        if (part.lo == last.lo) last.lo_closed = last.lo_closed || part.lo_closed;
        if (part.hi > last.hi) {
          last.hi = part.hi;
          last.hi_closed = part.hi_closed;
        } else if (part.hi == last.hi) {
          last.hi_closed = last.hi_closed || part.hi_closed;
        }
        continue;
      }
    }
    merged.push_back(part);
  }
  parts_ = std::move(merged);
}

IntervalSet IntervalSet::united(const IntervalSet& other) const {
  IntervalSet out = *this;
  for (const auto& part : other.parts_) out.add(part);
  return out;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out;
  double cursor = 0.0;
  bool cursor_closed = true;
  for (const auto& part : parts_) {
    out.add({cursor, part.lo, cursor_closed, !part.lo_closed});
    cursor = part.hi;
    cursor_closed = !part.hi_closed;
  }
  out.add({cursor, 1.0, cursor_closed, true});
  return out;
}

IntervalSet IntervalSet::intersected(const Interval& window) const {
  IntervalSet out;
  for (const auto& part : parts_) out.add(intersect(part, window));
  return out;
}

bool IntervalSet::contains(double x) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [x](const Interval& part) { return part.contains(x); });
}

double IntervalSet::length() const {
  double total = 0.0;
  for (const auto& part : parts_) total += part.length();
  return total;
}

}  // namespace normdyn
