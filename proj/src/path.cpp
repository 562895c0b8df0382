#include "udtoda/path.hpp"

#include <algorithm>

namespace udtoda {

namespace {

void require_interlaced(const IntervalList& down, const char* what) {
  for (std::size_t n = 0; n < down.size(); ++n) {
    if (!(down[n].a < down[n].b)) {
      throw InvariantError(std::string(what) + ": a_n < b_n violated at n=" + std::to_string(n + 1));
    }
    if (n + 1 < down.size() && !(down[n].b < down[n + 1].a)) {
      throw InvariantError(std::string(what) + ": b_n < a_{n+1} violated at n=" +
                           std::to_string(n + 1));
    }
  }
}

// |[a, b] intersect (-inf, x]|
Scalar covered(const Interval& iv, const Scalar& x) {
  if (x <= iv.a) return Scalar{};
  if (x >= iv.b) return iv.b - iv.a;
  return x - iv.a;
}

// Heights at every endpoint from the height at a_1 and the unit slopes.
std::vector<Vertex> endpoint_heights(const IntervalList& down, Scalar y) {
  std::vector<Vertex> v;
  v.reserve(2 * down.size());
  for (std::size_t n = 0; n < down.size(); ++n) {
    if (n > 0) y += down[n].a - down[n - 1].b;
    v.push_back({down[n].a, y});
    y -= down[n].b - down[n].a;
    v.push_back({down[n].b, y});
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlternatingPath

AlternatingPath::AlternatingPath(IntervalList down) : down_(std::move(down)) {
  require_interlaced(down_, "AlternatingPath");
}

bool AlternatingPath::is_canonical() const {
  return !down_.empty() && down_.front().a.sign() == 0;
}

std::vector<Vertex> AlternatingPath::endpoints() const {
  if (down_.empty()) return {};
  return endpoint_heights(down_, value(down_.front().a));
}

Scalar AlternatingPath::unanchored(const Scalar& x) const {
  Scalar inside;
  for (const auto& iv : down_) {
    if (x <= iv.a) break;
    inside += covered(iv, x);
  }
  return x - inside * 2;
}

Scalar AlternatingPath::value(const Scalar& x) const { return unanchored(x) - unanchored(0); }

Scalar AlternatingPath::past_max(const Scalar& x) const {
  const Scalar anchor = unanchored(0);
  Scalar best = value(x);
  Scalar inside;
  for (const auto& iv : down_) {
    if (iv.a > x) break;
    best = max(best, iv.a - inside * 2 - anchor);
    inside += iv.b - iv.a;
  }
  return best;
}

// ---------------------------------------------------------------------------
// PeriodicPath

PeriodicPath::PeriodicPath(Scalar period, IntervalList down)
    : period_(std::move(period)), down_(std::move(down)) {
  if (period_.sign() <= 0) throw InvariantError("PeriodicPath: L > 0 violated");
  if (down_.empty()) throw InvariantError("PeriodicPath: N >= 1 violated");
  require_interlaced(down_, "PeriodicPath");
  if (!(down_.back().b < down_.front().a + period_)) {
    throw InvariantError("PeriodicPath: b_N < a_1 + L violated");
  }
  Scalar mass;
  for (const auto& iv : down_) mass += iv.b - iv.a;
  drift_ = period_ - mass * 2;
  if (drift_.sign() <= 0) {
    throw InvariantError("PeriodicPath: positive drift L - 2 sum Q > 0 violated");
  }
  anchor_ = unanchored(0);
}

bool PeriodicPath::is_canonical() const { return down_.front().a.sign() == 0; }

std::vector<Vertex> PeriodicPath::endpoints() const {
  return endpoint_heights(down_, value(down_.front().a));
}

Scalar PeriodicPath::unanchored(const Scalar& x) const {
  const Scalar& a1 = down_.front().a;
  const Scalar k = floor((x - a1) / period_);
  const Scalar r = x - k * period_;
  Scalar inside;
  for (const auto& iv : down_) {
    if (r <= iv.a) break;
    inside += covered(iv, r);
  }
  return k * drift_ + (r - a1) - inside * 2;
}

Scalar PeriodicPath::value(const Scalar& x) const { return unanchored(x) - anchor_; }

Scalar PeriodicPath::past_max(const Scalar& x) const { return max_over_window(x, 1); }

Scalar PeriodicPath::max_over_window(const Scalar& x, std::size_t periods) const {
  Scalar best = value(x);
  const Scalar width(static_cast<std::int64_t>(periods));
  for (const auto& iv : down_) {
    // Copies a_n + kL in (x - periods*L, x].
    const Scalar k_max = floor((x - iv.a) / period_);
    for (Scalar k = k_max; k > k_max - width; k -= 1) {
      best = max(best, value(iv.a + k * period_));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// PLPath

namespace {

Scalar slope_between(const Vertex& p, const Vertex& q) { return (q.y - p.y) / (q.x - p.x); }

}  // namespace

PLPath::PLPath(std::vector<Vertex> vertices, Scalar left_slope, Scalar right_slope)
    : vertices_(std::move(vertices)), left_(std::move(left_slope)), right_(std::move(right_slope)) {
  if (vertices_.empty()) throw InvariantError("PLPath: at least one breakpoint required");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (!(vertices_[i].x < vertices_[i + 1].x)) {
      throw InvariantError("PLPath: x_i strictly increasing violated at i=" + std::to_string(i));
    }
  }
  if (left_.sign() <= 0) throw InvariantError("PLPath: left tail slope > 0 violated");
  if (right_.sign() <= 0) throw InvariantError("PLPath: right tail slope > 0 violated");

  std::vector<Scalar> slopes{left_};
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) slopes.push_back(segment_slope(i));
  slopes.push_back(right_);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (slopes[i].sign() == 0) {
      throw InvariantError("PLPath: nonzero slope violated at segment " + std::to_string(i));
    }
    if (i > 0 && slopes[i] == slopes[i - 1]) {
      throw InvariantError("PLPath: no collinear consecutive segments violated at breakpoint " +
                           std::to_string(i - 1));
    }
  }
  if (value(0).sign() != 0) throw InvariantError("PLPath: S_0 = 0 violated");
}

PLPath PLPath::from_slopes(const std::vector<Scalar>& xs, const std::vector<Scalar>& slopes,
                           const Scalar& left_slope, const Scalar& right_slope) {
  if (xs.empty() || slopes.size() + 1 != xs.size()) {
    throw InvariantError("PLPath: need len(slopes) = len(xs) - 1 and len(xs) >= 1");
  }
  std::vector<Vertex> v{{xs[0], Scalar{}}};
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    v.push_back({xs[i + 1], v.back().y + slopes[i] * (xs[i + 1] - xs[i])});
  }
  // Height at 0 of the unshifted path.
  Scalar at_zero;
  const Scalar zero;
  if (zero <= v.front().x) {
    at_zero = v.front().y + left_slope * (zero - v.front().x);
  } else if (zero >= v.back().x) {
    at_zero = v.back().y + right_slope * (zero - v.back().x);
  } else {
    std::size_t i = 0;
    while (v[i + 1].x < zero) ++i;
    at_zero = v[i].y + slopes[i] * (zero - v[i].x);
  }
  for (auto& p : v) p.y -= at_zero;
  return PLPath(std::move(v), left_slope, right_slope);
}

Scalar PLPath::segment_slope(std::size_t i) const {
  return slope_between(vertices_[i], vertices_[i + 1]);
}

std::size_t PLPath::segment_index(const Scalar& x) const {
  // Index i with x_i <= x < x_{i+1}; callers guarantee x_0 <= x < x_M.
  const auto it = std::upper_bound(vertices_.begin(), vertices_.end(), x,
                                   [](const Scalar& v, const Vertex& p) { return v < p.x; });
  return static_cast<std::size_t>(it - vertices_.begin()) - 1;
}

Scalar PLPath::value(const Scalar& x) const {
  const auto& first = vertices_.front();
  const auto& last = vertices_.back();
  if (x <= first.x) return first.y + left_ * (x - first.x);
  if (x >= last.x) return last.y + right_ * (x - last.x);
  const std::size_t i = segment_index(x);
  return vertices_[i].y + segment_slope(i) * (x - vertices_[i].x);
}

Scalar PLPath::past_max(const Scalar& x) const {
  Scalar best = value(x);
  for (const auto& v : vertices_) {
    if (v.x > x) break;
    best = max(best, v.y);
  }
  return best;
}

Scalar PLPath::total_variation(const Scalar& x) const {
  // Variation accumulated from the first breakpoint, signed.
  auto from_first = [this](const Scalar& t) {
    const auto& first = vertices_.front();
    if (t <= first.x) return left_ * (t - first.x);
    Scalar acc;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[i + 1];
      if (t <= q.x) return acc + abs(segment_slope(i)) * (t - p.x);
      acc += abs(q.y - p.y);
    }
    return acc + right_ * (t - vertices_.back().x);
  };
  return from_first(x) - from_first(Scalar{});
}

std::vector<Vertex> PLPath::local_maxima() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Scalar before = i == 0 ? left_ : segment_slope(i - 1);
    const Scalar after = i + 1 == vertices_.size() ? right_ : segment_slope(i);
    if (before.sign() > 0 && after.sign() < 0) out.push_back(vertices_[i]);
  }
  return out;
}

std::vector<Vertex> PLPath::local_minima() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Scalar before = i == 0 ? left_ : segment_slope(i - 1);
    const Scalar after = i + 1 == vertices_.size() ? right_ : segment_slope(i);
    if (before.sign() < 0 && after.sign() > 0) out.push_back(vertices_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

PLPath to_pl_path(const AlternatingPath& p) {
  if (p.size() == 0) throw InvariantError("to_pl_path: path has no down-interval");
  return PLPath(p.endpoints(), Scalar(1), Scalar(1));
}

std::optional<AlternatingPath> to_alternating(const PLPath& p) {
  const Scalar one(1);
  if (p.left_slope() != one || p.right_slope() != one) return std::nullopt;
  IntervalList down;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Scalar s = p.segment_slope(i);
    if (s == -one) {
      down.push_back({v[i].x, v[i + 1].x});
    } else if (s != one) {
      return std::nullopt;
    }
  }
  return AlternatingPath(std::move(down));
}

}  // namespace udtoda
