#include "kdiam/interval_set.hpp"

#include <algorithm>

#include "kdiam/error.hpp"

namespace kdiam {

bool is_canonical(std::span<const Interval> intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].first > intervals[i].last) return false;
    if (i > 0 && static_cast<std::uint64_t>(intervals[i - 1].last) + 1 >= intervals[i].first) return false;
  }
  return true;
}

IntervalSet IntervalSet::from_canonical(std::vector<Interval> intervals) {
  if (!is_canonical(intervals)) throw InputError("interval list is not canonical");
  return IntervalSet(std::move(intervals));
}

std::size_t IntervalSet::cardinality() const {
  std::size_t total = 0;
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

bool IntervalSet::contains(Position p) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), p,
                             [](Position x, const Interval& iv) { return x < iv.first; });
  return it != intervals_.begin() && std::prev(it)->last >= p;
}

std::vector<Position> IntervalSet::positions() const {
  std::vector<Position> out;
  out.reserve(cardinality());
  for (const auto& iv : intervals_) {
    for (std::uint64_t p = iv.first; p <= iv.last; ++p) out.push_back(static_cast<Position>(p));
  }
  return out;
}

IntervalSet canonicalize(std::vector<Position> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  std::vector<Interval> out;
  for (Position p : positions) {
    if (!out.empty() && static_cast<std::uint64_t>(out.back().last) + 1 == p) {
      out.back().last = p;
    } else {
      out.push_back({p, p});
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet union_sweep(std::span<const IntervalSet* const> sets) {
  struct Event {
    std::uint64_t position;
    int delta;
  };
  std::vector<Event> events;
  for (const IntervalSet* s : sets) {
    for (const auto& iv : s->intervals()) {
      events.push_back({iv.first, +1});
      events.push_back({static_cast<std::uint64_t>(iv.last) + 1, -1});
    }
  }
  // Opens before closes at equal positions, so touching intervals merge.
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.position < b.position || (a.position == b.position && a.delta > b.delta);
  });
  std::vector<Interval> out;
  int depth = 0;
  std::uint64_t start = 0;
  for (const auto& e : events) {
    if (e.delta > 0) {
      if (depth++ == 0) start = e.position;
    } else if (--depth == 0) {
      out.push_back({static_cast<Position>(start), static_cast<Position>(e.position - 1)});
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet union_sweep(std::span<const IntervalSet> sets) {
  std::vector<const IntervalSet*> ptrs;
  ptrs.reserve(sets.size());
  for (const auto& s : sets) ptrs.push_back(&s);
  return union_sweep(std::span<const IntervalSet* const>(ptrs));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& bi = b.intervals();
  std::size_t j = 0;
  for (const auto& iv : a.intervals()) {
    std::uint64_t cursor = iv.first;
    while (j < bi.size() && bi[j].last < iv.first) ++j;
    std::size_t k = j;
    while (k < bi.size() && bi[k].first <= iv.last && cursor <= iv.last) {
      if (bi[k].first > cursor) out.push_back({static_cast<Position>(cursor), bi[k].first - 1});
      cursor = std::max<std::uint64_t>(cursor, static_cast<std::uint64_t>(bi[k].last) + 1);
      ++k;
    }
    if (cursor <= iv.last) out.push_back({static_cast<Position>(cursor), iv.last});
  }
  return IntervalSet(std::move(out));
}

}  // namespace kdiam
