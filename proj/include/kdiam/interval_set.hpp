#ifndef KDIAM_INTERVAL_SET_HPP
#define KDIAM_INTERVAL_SET_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace kdiam {

using Position = std::uint32_t;

/// Closed range of positions [first, last] in a vertex order.
struct Interval {
  Position first = 0;
  Position last = 0;

  std::size_t length() const { return static_cast<std::size_t>(last - first) + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * Canonical interval representation of a position set: intervals sorted,
 * pairwise disjoint and non-adjacent (last_i + 1 < first_{i+1}). It is the
 * unique representation with the fewest intervals.
 */
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Adopts `intervals`; throws InputError unless they are already canonical.
  static IntervalSet from_canonical(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  std::size_t cardinality() const;
  bool contains(Position p) const;
  std::vector<Position> positions() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}
  friend IntervalSet canonicalize(std::vector<Position> positions);
  friend IntervalSet union_sweep(std::span<const IntervalSet* const> sets);
  friend IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

  std::vector<Interval> intervals_;
};

bool is_canonical(std::span<const Interval> intervals);

IntervalSet canonicalize(std::vector<Position> positions);

/// Union by an endpoint sweep; output is canonical.
IntervalSet union_sweep(std::span<const IntervalSet* const> sets);
IntervalSet union_sweep(std::span<const IntervalSet> sets);

/// a \ b as intervals.
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

}  // namespace kdiam

#endif  // KDIAM_INTERVAL_SET_HPP
