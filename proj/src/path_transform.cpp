#include "udtoda/path_transform.hpp"

#include <algorithm>
#include <optional>

namespace udtoda {

namespace {

struct Reflected {
  std::vector<Vertex> vertices;  // 2M - S, before the -2M_0 normalization
  Scalar end_max;
};

// Left-to-right sweep over the vertices of S carrying the running maximum.
// Where a rising segment crosses the current maximum, the crossing point is
// inserted: 2M - S turns from falling to rising there.
Reflected reflect(const std::vector<Vertex>& v, const Scalar& start_max) {
  Reflected r;
  Scalar m = max(start_max, v.front().y);
  r.vertices.reserve(2 * v.size());
  r.vertices.push_back({v.front().x, m * 2 - v.front().y});
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Vertex& p = v[i];
    const Vertex& q = v[i + 1];
    if (q.y > m) {
      if (p.y < m) {
        const Scalar c = p.x + (m - p.y) * (q.x - p.x) / (q.y - p.y);
        r.vertices.push_back({c, m});
      }
      m = q.y;
    }
    r.vertices.push_back({q.x, m * 2 - q.y});
  }
  r.end_max = m;
  return r;
}

// Removes vertices whose two adjacent segments have the same slope. A missing
// tail slope pins the corresponding end vertex.
std::vector<Vertex> drop_collinear(const std::vector<Vertex>& v, const std::optional<Scalar>& left,
                                   const std::optional<Scalar>& right) {
  std::vector<Vertex> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::optional<Scalar> before;
    std::optional<Scalar> after;
    if (i > 0) {
      before = (v[i].y - v[i - 1].y) / (v[i].x - v[i - 1].x);
    } else {
      before = left;
    }
    if (i + 1 < v.size()) {
      after = (v[i + 1].y - v[i].y) / (v[i + 1].x - v[i].x);
    } else {
      after = right;
    }
    if (before && after && *before == *after) continue;
    out.push_back(v[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

AlternatingPath encode(const TodaState& s) {
  IntervalList down;
  down.reserve(s.size());
  Scalar x;
  for (std::size_t n = 0; n < s.size(); ++n) {
    down.push_back({x, x + s.q()[n]});
    if (n + 1 < s.size()) x += s.q()[n] + s.e()[n];
  }
  return AlternatingPath(std::move(down));
}

TodaState decode(const AlternatingPath& p) {
  if (!p.is_canonical()) throw PathShapeError("decode: path is not canonical (a_1 != 0)");
  const auto& iv = p.intervals();
  std::vector<Scalar> q;
  std::vector<Scalar> e;
  for (std::size_t n = 0; n < iv.size(); ++n) {
    q.push_back(iv[n].b - iv[n].a);
    if (n + 1 < iv.size()) e.push_back(iv[n + 1].a - iv[n].b);
  }
  return TodaState(std::move(q), std::move(e));
}

PeriodicPath encode_periodic(const PeriodicTodaState& s) {
  IntervalList down;
  down.reserve(s.size());
  Scalar a;
  for (std::size_t n = 0; n < s.size(); ++n) {
    down.push_back({a, a + s.q()[n]});
    a += s.q()[n] + s.e()[n];
  }
  return PeriodicPath(s.circumference(), std::move(down));
}

PeriodicTodaState decode_periodic(const PeriodicPath& p) {
  if (!p.is_canonical()) throw PathShapeError("decode_periodic: path is not canonical (a_1 != 0)");
  const auto& iv = p.intervals();
  std::vector<Scalar> q;
  std::vector<Scalar> e;
  for (std::size_t n = 0; n < iv.size(); ++n) {
    q.push_back(iv[n].b - iv[n].a);
    const Scalar next = n + 1 < iv.size() ? iv[n + 1].a : iv.front().a + p.period();
    e.push_back(next - iv[n].b);
  }
  return PeriodicTodaState(std::move(q), std::move(e), p.period());
}

PathPoint evaluate(const AlternatingPath& p, const Scalar& x) {
  return {p.value(x), p.past_max(x)};
}
PathPoint evaluate(const PeriodicPath& p, const Scalar& x) { return {p.value(x), p.past_max(x)}; }
PathPoint evaluate(const PLPath& p, const Scalar& x) { return {p.value(x), p.past_max(x)}; }

// ---------------------------------------------------------------------------

PLPath pitman(const PLPath& p) {
  const auto& v = p.vertices();
  // Left tail rises to v_0, so M = S up to there.
  Reflected r = reflect(v, v.front().y);
  const Vertex& last = v.back();
  if (last.y < r.end_max) {
    // Right tail regains the maximum.
    const Scalar c = last.x + (r.end_max - last.y) / p.right_slope();
    r.vertices.push_back({c, r.end_max});
  }
  const Scalar shift = p.past_max(0) * 2;
  for (auto& w : r.vertices) w.y -= shift;
  return PLPath(drop_collinear(r.vertices, p.left_slope(), p.right_slope()), p.left_slope(),
                p.right_slope());
}

AlternatingPath pitman(const AlternatingPath& p) {
  if (p.size() == 0) return p;  // S_x = x is its own past maximum
  auto reflected = to_alternating(pitman(to_pl_path(p)));
  if (!reflected) throw std::logic_error("pitman: reflected path left the +-1 slope class");
  return *reflected;
}

PeriodicPath pitman(const PeriodicPath& p) {
  const auto ends = p.endpoints();
  const std::size_t n = p.size();
  // Start the sweep at the highest local maximum of one period: S equals its
  // past maximum there, since earlier periods sit lower by the drift.
  std::size_t start = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (ends[2 * k].y > ends[2 * start].y) start = k;
  }
  const Scalar& period = p.period();
  std::vector<Vertex> v;
  v.reserve(2 * n + 1);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const std::size_t idx = (2 * start + k) % (2 * n);
    const Vertex& e = ends[idx];
    if (2 * start + k >= 2 * n) {
      v.push_back({e.x + period, e.y + p.drift()});
    } else {
      v.push_back(e);
    }
  }
  v.push_back({v.front().x + period, v.front().y + p.drift()});

  const Reflected r = reflect(v, v.front().y);
  const auto w = drop_collinear(r.vertices, std::nullopt, std::nullopt);
  IntervalList down;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k + 1].y < w[k].y) down.push_back({w[k].x, w[k + 1].x});
  }
  return PeriodicPath(period, std::move(down));
}

AlternatingPath shift_to_first_max(const AlternatingPath& p) {
  const auto& iv = p.intervals();
  const auto it = std::find_if(iv.begin(), iv.end(), [](const Interval& i) { return i.a.sign() >= 0; });
  if (it == iv.end()) throw PathShapeError("shift_to_first_max: no local maximum at x >= 0");
  const Scalar tau = it->a;
  IntervalList down;
  down.reserve(iv.size());
  for (const auto& i : iv) down.push_back({i.a - tau, i.b - tau});
  return AlternatingPath(std::move(down));
}

PeriodicPath shift_to_first_max(const PeriodicPath& p) {
  const Scalar& period = p.period();
  // First copy a_n + kL at or right of 0, for each n.
  std::optional<Scalar> tau;
  for (const auto& i : p.intervals()) {
    const Scalar t = i.a - floor(i.a / period) * period;
    if (!tau || t < *tau) tau = t;
  }
  IntervalList down;
  down.reserve(p.size());
  for (const auto& i : p.intervals()) {
    const Scalar rel = i.a - *tau;
    const Scalar a = rel - floor(rel / period) * period;
    down.push_back({a, a + (i.b - i.a)});
  }
  std::sort(down.begin(), down.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  return PeriodicPath(period, std::move(down));
}

AlternatingPath toda_transform_path(const AlternatingPath& p) {
  return shift_to_first_max(pitman(p));
}

PeriodicPath toda_transform_path(const PeriodicPath& p) { return shift_to_first_max(pitman(p)); }

// ---------------------------------------------------------------------------

std::vector<Scalar> recovery_points(const AlternatingPath& p) {
  const auto& iv = p.intervals();
  std::vector<Scalar> c;
  if (iv.empty()) return c;
  c.reserve(iv.size());
  Scalar height_a = p.value(iv.front().a);  // S_{a_n}
  Scalar past_max = height_a;               // M_{b_n} = max_{m<=n} S_{a_m}
  for (std::size_t n = 0; n < iv.size(); ++n) {
    if (n > 0) {
      height_a = height_a - (iv[n - 1].b - iv[n - 1].a) + (iv[n].a - iv[n - 1].b);
      past_max = max(past_max, height_a);
    }
    const Scalar height_b = height_a - (iv[n].b - iv[n].a);
    const ExtScalar next_max =
        n + 1 < iv.size() ? ExtScalar(iv[n + 1].a) : ExtScalar::infinity();
    c.push_back(min(iv[n].b + past_max - height_b, next_max));
  }
  return c;
}

IntervalList breakpoint_map(const AlternatingPath& p) {
  const auto& iv = p.intervals();
  const auto c = recovery_points(p);
  IntervalList out;
  out.reserve(iv.size());
  if (iv.empty()) return out;
  const Scalar& b1 = iv.front().b;
  for (std::size_t n = 0; n < iv.size(); ++n) out.push_back({iv[n].b - b1, c[n] - b1});
  return out;
}

}  // namespace udtoda
