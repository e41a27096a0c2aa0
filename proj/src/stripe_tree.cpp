#include "kdiam/stripe_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kdiam/error.hpp"

namespace kdiam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double key(const StripePoint& p, double slope) { return p.y - slope * p.x; }

bool close_enough(double stored, double expected) {
  if (std::isinf(expected) || std::isinf(stored)) return stored == expected;
  return std::abs(stored - expected) <= 1e-9 * std::max(1.0, std::abs(expected));
}

}  // namespace

StripeTree::StripeTree(std::vector<StripePoint> points, std::int64_t band,
                       std::vector<double> slopes, const std::vector<Fingerprint>* keys)
    : points_(std::move(points)), band_(band), slopes_(std::move(slopes)), keys_(keys) {
  if (points_.empty()) throw InputError("a stripe needs at least one point");
  if (slopes_.empty()) throw InputError("a stripe needs at least one slope");
  if (keys_ == nullptr) throw InputError("missing point fingerprints");
  for (const auto& p : points_) {
    if (static_cast<std::int64_t>(std::floor(p.y)) != band_) {
      throw InputError("point outside stripe band " + std::to_string(band_));
    }
    if (p.id >= keys_->size()) throw InputError("point id has no fingerprint");
  }
  std::sort(points_.begin(), points_.end(), [](const StripePoint& a, const StripePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
  });
  build(0, static_cast<std::uint32_t>(points_.size() - 1));

  const std::size_t s = slopes_.size();
  nodes_.resize(slots_.size());
  extremes_.resize(slots_.size() * 4 * s);
  for (std::uint32_t k = 0; k < slots_.size(); ++k) {
    Node& n = nodes_[k];
    n.slot = k;
    n.left = slots_[k].left;
    n.right = slots_[k].right;
    n.ext = static_cast<std::uint32_t>(k * 4 * s);
    for (std::size_t j = 0; j < s; ++j) {
      double* e = &extremes_[n.ext + 4 * j];
      e[0] = e[1] = -kInf;
      e[2] = e[3] = kInf;
    }
  }
}

std::uint32_t StripeTree::build(std::uint32_t lo, std::uint32_t hi) {
  const auto id = static_cast<std::uint32_t>(slots_.size());
  slots_.push_back({});
  Slot slot;
  slot.lo = lo;
  slot.hi = hi;
  slot.key_offset = static_cast<std::uint32_t>(sorted_keys_.size());
  slot.prefix_offset = static_cast<std::uint32_t>(prefix_.size());
  std::vector<std::uint32_t> idx(hi - lo + 1);
  for (std::size_t j = 0; j < slopes_.size(); ++j) {
    std::iota(idx.begin(), idx.end(), lo);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return key(points_[a], slopes_[j]) < key(points_[b], slopes_[j]);
    });
    Fingerprint acc;
    prefix_.push_back(acc);
    for (std::uint32_t i : idx) {
      sorted_keys_.push_back(key(points_[i], slopes_[j]));
      acc ^= (*keys_)[points_[i].id];
      prefix_.push_back(acc);
    }
  }
  if (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    slot.left = build(lo, mid);
    slot.right = build(mid + 1, hi);
  }
  slots_[id] = slot;
  return id;
}

std::pair<std::size_t, std::size_t> StripeTree::index_range(double x_lo, double x_hi) const {
  auto first = std::lower_bound(points_.begin(), points_.end(), x_lo,
                                [](const StripePoint& p, double x) { return p.x < x; });
  auto last = std::upper_bound(points_.begin(), points_.end(), x_hi,
                               [](double x, const StripePoint& p) { return x < p.x; });
  const auto f = static_cast<std::size_t>(first - points_.begin());
  const auto l = static_cast<std::size_t>(last - points_.begin());
  return {f, std::max(f, l)};
}

StripeTree::NodeId StripeTree::clone(NodeId id) {
  const std::size_t block = 4 * slopes_.size();
  Node copy = nodes_[id];
  const auto offset = static_cast<std::uint32_t>(extremes_.size());
  extremes_.resize(extremes_.size() + block);
  std::copy_n(extremes_.begin() + copy.ext, block, extremes_.begin() + offset);
  copy.ext = offset;
  nodes_.push_back(copy);
  return static_cast<NodeId>(nodes_.size() - 1);
}

Fingerprint StripeTree::all_hash(const Slot& s) const { return prefix_[s.prefix_offset + s.count()]; }

void StripeTree::assign_line(NodeId id, Side side, std::uint32_t dir, double a) {
  Node& n = nodes_[id];
  const Slot& s = slots_[n.slot];
  const double x_min = points_[s.lo].x;
  const double x_max = points_[s.hi].x;
  double* e = ext(n);
  const int base = side == kBottom ? 0 : 2;
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    const double d = slopes_[dir] - slopes_[k];
    const double v1 = a + d * x_min;
    const double v2 = a + d * x_max;
    e[4 * k + base] = std::min(v1, v2);
    e[4 * k + base + 1] = std::max(v1, v2);
  }
  const double* keys = &sorted_keys_[s.key_offset + dir * s.count()];
  const Fingerprint* prefix = &prefix_[s.prefix_offset + dir * (s.count() + 1)];
  if (side == kBottom) {
    n.bot = prefix[std::upper_bound(keys, keys + s.count(), a) - keys];
    n.bot_dir = static_cast<std::int32_t>(dir);
    n.bot_a = a;
  } else {
    n.top = prefix[s.count()] ^ prefix[std::lower_bound(keys, keys + s.count(), a) - keys];
    n.top_dir = static_cast<std::int32_t>(dir);
    n.top_a = a;
  }
}

bool StripeTree::resolve_hash(NodeId id) {
  Node& n = nodes_[id];
  const double* e = ext(n);
  bool disjoint = false;
  bool everything = false;
  if (n.bot_dir >= 0) {
    disjoint = e[4 * n.bot_dir + 2] > n.bot_a;
    everything = e[4 * n.bot_dir + 3] <= n.bot_a;
  } else if (n.top_dir >= 0) {
    disjoint = e[4 * n.top_dir + 1] < n.top_a;
    everything = e[4 * n.top_dir] >= n.top_a;
  } else {
    return false;
  }
  if (disjoint) {
    n.hash = n.bot ^ n.top;
  } else if (everything) {
    n.hash = all_hash(slots_[n.slot]);
  } else {
    return false;
  }
  return true;
}

StripeTree::NodeId StripeTree::push(NodeId id) {
  const Node parent = nodes_[id];
  if (slots_[parent.slot].leaf() || (parent.bot_dir < 0 && parent.top_dir < 0)) return id;
  ++stats_.pushes;
  NodeId children[2] = {parent.left, parent.right};
  for (NodeId& c : children) {
    c = clone(c);
    if (parent.bot_dir >= 0) assign_line(c, kBottom, static_cast<std::uint32_t>(parent.bot_dir), parent.bot_a);
    if (parent.top_dir >= 0) assign_line(c, kTop, static_cast<std::uint32_t>(parent.top_dir), parent.top_a);
    if (!resolve_hash(c)) throw std::logic_error("lazy stripe node is not decisive");
  }
  const NodeId copy = clone(id);
  Node& n = nodes_[copy];
  n.left = children[0];
  n.right = children[1];
  n.bot_dir = n.top_dir = -1;
  return copy;
}

StripeTree::NodeId StripeTree::combine(NodeId base, NodeId left, NodeId right) {
  const std::size_t s = slopes_.size();
  Node n;
  n.slot = nodes_[base].slot;
  n.left = left;
  n.right = right;
  n.ext = static_cast<std::uint32_t>(extremes_.size());
  extremes_.resize(extremes_.size() + 4 * s);
  const double* l = ext(nodes_[left]);
  const double* r = ext(nodes_[right]);
  double* e = &extremes_[n.ext];
  for (std::size_t q = 0; q < 4 * s; q += 2) {
    e[q] = std::min(l[q], r[q]);
    e[q + 1] = std::max(l[q + 1], r[q + 1]);
  }
  n.bot = nodes_[left].bot ^ nodes_[right].bot;
  n.top = nodes_[left].top ^ nodes_[right].top;
  n.hash = nodes_[left].hash ^ nodes_[right].hash;
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

StripeTree::NodeId StripeTree::update(NodeId id, std::size_t first, std::size_t last, Side side,
                                      StripeLine line, std::uint32_t depth) {
  const Slot s = slots_[nodes_[id].slot];
  if (s.hi < first || s.lo >= last) return id;
  ++visits_;
  if (first <= s.lo && s.hi < last) {
    const double* e = ext(nodes_[id]);
    const std::size_t j = line.dir;
    const double a = line.offset;
    bool full = false;
    if (side == kBottom) {
      if (e[4 * j] >= a) return id;
      full = e[4 * j + 1] <= a;
    } else {
      if (e[4 * j + 3] <= a) return id;
      full = e[4 * j + 2] >= a;
    }
    if (full) {
      const NodeId c = clone(id);
      assign_line(c, side, line.dir, a);
      if (resolve_hash(c)) return c;
      nodes_.pop_back();
      extremes_.resize(extremes_.size() - 4 * slopes_.size());
    }
    if (s.leaf()) throw std::logic_error("stripe leaf left undecided");
    if (depth >= straddle_.size()) straddle_.resize(depth + 1, 0);
    ++straddle_[depth];
  }
  const NodeId p = push(id);
  const NodeId old_left = nodes_[p].left;
  const NodeId old_right = nodes_[p].right;
  const NodeId l = update(old_left, first, last, side, line, depth + 1);
  const NodeId r = update(old_right, first, last, side, line, depth + 1);
  if (l == old_left && r == old_right) return p;
  return combine(p, l, r);
}

StripeTree::NodeId StripeTree::mark(NodeId root, std::size_t first, std::size_t last, Side side,
                                    StripeLine line) {
  if (root >= nodes_.size()) throw HandleError("unknown stripe node");
  if (first > last || last > points_.size()) throw InputError("point range out of bounds");
  if (line.dir >= slopes_.size()) throw InputError("unknown boundary direction");
  if (first == last) return root;
  visits_ = 0;
  straddle_.assign(straddle_.size(), 0);
  const NodeId out = update(root, first, last, side, line, 0);
  ++stats_.marks;
  stats_.mark_visits += visits_;
  stats_.max_mark_visits = std::max(stats_.max_mark_visits, visits_);
  for (auto c : straddle_) stats_.max_straddling = std::max(stats_.max_straddling, c);
  return out;
}

StripeTree::NodeId StripeTree::mark_bottom(NodeId root, std::size_t first, std::size_t last,
                                           StripeLine line) {
  return mark(root, first, last, kBottom, line);
}

StripeTree::NodeId StripeTree::mark_top(NodeId root, std::size_t first, std::size_t last,
                                        StripeLine line) {
  return mark(root, first, last, kTop, line);
}

void StripeTree::diff(NodeId a, NodeId b, std::vector<std::uint32_t>& out) {
  ++stats_.list_visits;
  if (nodes_[a].hash == nodes_[b].hash) return;
  const Slot& s = slots_[nodes_[a].slot];
  if (s.leaf()) {
    out.push_back(points_[s.lo].id);
    return;
  }
  a = push(a);
  b = push(b);
  const NodeId al = nodes_[a].left, ar = nodes_[a].right;
  const NodeId bl = nodes_[b].left, br = nodes_[b].right;
  diff(al, bl, out);
  diff(ar, br, out);
}

std::vector<std::uint32_t> StripeTree::list_differences(NodeId a, NodeId b) {
  if (a >= nodes_.size() || b >= nodes_.size()) throw HandleError("unknown stripe node");
  std::vector<std::uint32_t> out;
  diff(a, b, out);
  return out;
}

std::vector<std::uint32_t> StripeTree::decode(NodeId root) const {
  std::vector<std::uint32_t> out;
  struct Walker {
    const StripeTree& t;
    std::vector<std::uint32_t>& out;
    void operator()(NodeId id, std::optional<StripeLine> bot, std::optional<StripeLine> top) const {
      const Node& n = t.nodes_[id];
      if (!bot && n.bot_dir >= 0) bot = StripeLine{static_cast<std::uint32_t>(n.bot_dir), n.bot_a};
      if (!top && n.top_dir >= 0) top = StripeLine{static_cast<std::uint32_t>(n.top_dir), n.top_a};
      const Slot& s = t.slots_[n.slot];
      if (s.leaf()) {
        const StripePoint& p = t.points_[s.lo];
        const bool below = bot && key(p, t.slopes_[bot->dir]) <= bot->offset;
        const bool above = top && key(p, t.slopes_[top->dir]) >= top->offset;
        if (below || above) out.push_back(p.id);
        return;
      }
      (*this)(n.left, bot, top);
      (*this)(n.right, bot, top);
    }
  };
  Walker{*this, out}(root, std::nullopt, std::nullopt);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t StripeTree::audit(NodeId root) const {
  const std::size_t s = slopes_.size();
  struct Truth {
    std::vector<double> ext;
    Fingerprint bot, top, hash;
  };
  std::size_t bad = 0;
  auto rec = [&](auto&& self, NodeId id, std::optional<StripeLine> bot,
                 std::optional<StripeLine> top) -> Truth {
    const Node& n = nodes_[id];
    const bool checked = !bot && !top;
    if (!bot && n.bot_dir >= 0) bot = StripeLine{static_cast<std::uint32_t>(n.bot_dir), n.bot_a};
    if (!top && n.top_dir >= 0) top = StripeLine{static_cast<std::uint32_t>(n.top_dir), n.top_a};
    const Slot& sl = slots_[n.slot];
    Truth t;
    t.ext.assign(4 * s, 0.0);
    if (sl.leaf()) {
      const StripePoint& p = points_[sl.lo];
      const Fingerprint& h = (*keys_)[p.id];
      for (std::size_t k = 0; k < s; ++k) {
        t.ext[4 * k] = t.ext[4 * k + 1] =
            bot ? bot->offset + (slopes_[bot->dir] - slopes_[k]) * p.x : -kInf;
        t.ext[4 * k + 2] = t.ext[4 * k + 3] =
            top ? top->offset + (slopes_[top->dir] - slopes_[k]) * p.x : kInf;
      }
      const bool below = bot && key(p, slopes_[bot->dir]) <= bot->offset;
      const bool above = top && key(p, slopes_[top->dir]) >= top->offset;
      if (below) t.bot = h;
      if (above) t.top = h;
      if (below || above) t.hash = h;
    } else {
      Truth l = self(self, n.left, bot, top);
      Truth r = self(self, n.right, bot, top);
      for (std::size_t q = 0; q < 4 * s; q += 2) {
        t.ext[q] = std::min(l.ext[q], r.ext[q]);
        t.ext[q + 1] = std::max(l.ext[q + 1], r.ext[q + 1]);
      }
      t.bot = l.bot ^ r.bot;
      t.top = l.top ^ r.top;
      t.hash = l.hash ^ r.hash;
    }
    if (checked) {
      bool ok = n.bot == t.bot && n.top == t.top && n.hash == t.hash;
      const double* e = ext(n);
      for (std::size_t q = 0; q < 4 * s && ok; ++q) ok = close_enough(e[q], t.ext[q]);
      if (!ok) ++bad;
    }
    return t;
  };
  rec(rec, root, std::nullopt, std::nullopt);
  return bad;
}

}  // namespace kdiam
