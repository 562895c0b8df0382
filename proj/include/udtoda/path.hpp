#pragma once

// Path encodings, stored by breakpoints. All three families are anchored at
// S_0 = 0 and are evaluated exactly.
//
//   AlternatingPath  slope -1 on finitely many down-intervals [a_n, b_n],
//                    +1 elsewhere.
//   PeriodicPath     the same on one period of length L, extended so that
//                    increments are L-periodic; requires positive drift.
//   PLPath           general nonzero slopes, finitely many extrema, positive
//                    tail slopes.

#include <optional>
#include <vector>

#include "udtoda/scalar.hpp"
#include "udtoda/state.hpp"

namespace udtoda {

struct Interval {
  Scalar a;
  Scalar b;
  friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalList = std::vector<Interval>;

struct Vertex {
  Scalar x;
  Scalar y;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class AlternatingPath {
 public:
  AlternatingPath() = default;
  /// Requires a_n < b_n < a_{n+1}.
  explicit AlternatingPath(IntervalList down);

  [[nodiscard]] const IntervalList& intervals() const { return down_; }
  [[nodiscard]] std::size_t size() const { return down_.size(); }
  /// First down-interval starts at 0.
  [[nodiscard]] bool is_canonical() const;
  /// (a_n, S_{a_n}) and (b_n, S_{b_n}) for every interval, in order.
  [[nodiscard]] std::vector<Vertex> endpoints() const;

  [[nodiscard]] Scalar value(const Scalar& x) const;
  /// sup_{y <= x} S_y.
  [[nodiscard]] Scalar past_max(const Scalar& x) const;

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;

 private:
  // x - 2 |O intersect (-inf, x]|, i.e. S up to the additive anchor.
  [[nodiscard]] Scalar unanchored(const Scalar& x) const;

  IntervalList down_;
};

class PeriodicPath {
 public:
  /// One representative per period: a_n < b_n < a_{n+1}, b_N < a_1 + L,
  /// N >= 1, and drift L - 2 sum(b_n - a_n) > 0.
  PeriodicPath(Scalar period, IntervalList down);

  [[nodiscard]] const Scalar& period() const { return period_; }
  [[nodiscard]] const IntervalList& intervals() const { return down_; }
  [[nodiscard]] std::size_t size() const { return down_.size(); }
  [[nodiscard]] bool is_canonical() const;
  /// (a_n, S_{a_n}) and (b_n, S_{b_n}) for every interval, in order.
  [[nodiscard]] std::vector<Vertex> endpoints() const;
  /// S_{x+L} - S_x, constant in x.
  [[nodiscard]] const Scalar& drift() const { return drift_; }

  [[nodiscard]] Scalar value(const Scalar& x) const;
  /// Past maximum, taken over the one-period window (x - L, x].
  [[nodiscard]] Scalar past_max(const Scalar& x) const;
  /// Maximum of S over (x - periods * L, x]. With positive drift this does
  /// not depend on periods >= 1.
  [[nodiscard]] Scalar max_over_window(const Scalar& x, std::size_t periods) const;

  friend bool operator==(const PeriodicPath&, const PeriodicPath&) = default;

 private:
  [[nodiscard]] Scalar unanchored(const Scalar& x) const;

  Scalar period_;
  IntervalList down_;
  Scalar drift_;
  Scalar anchor_;  // unanchored(0)
};

/// Continuous piecewise-linear path with finitely many breakpoints.
class PLPath {
 public:
  /// Requires: at least one vertex, strictly increasing x, S_0 = 0, nonzero
  /// slopes, no two consecutive collinear segments (tails included), and
  /// both tail slopes > 0.
  PLPath(std::vector<Vertex> vertices, Scalar left_slope, Scalar right_slope);

  /// Builds the path from breakpoint abscissae and the slopes between them
  /// (slopes.size() == xs.size() - 1), shifted vertically so that S_0 = 0.
  static PLPath from_slopes(const std::vector<Scalar>& xs, const std::vector<Scalar>& slopes,
                            const Scalar& left_slope, const Scalar& right_slope);

  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const Scalar& left_slope() const { return left_; }
  [[nodiscard]] const Scalar& right_slope() const { return right_; }
  /// Slope of segment i, between vertex i and i+1.
  [[nodiscard]] Scalar segment_slope(std::size_t i) const;

  [[nodiscard]] Scalar value(const Scalar& x) const;
  [[nodiscard]] Scalar past_max(const Scalar& x) const;
  /// Integral of |dS| from 0 to x (negative for x < 0).
  [[nodiscard]] Scalar total_variation(const Scalar& x) const;

  /// Vertices where the slope changes sign from + to - (a_n) and from - to +
  /// (b_n), in order.
  [[nodiscard]] std::vector<Vertex> local_maxima() const;
  [[nodiscard]] std::vector<Vertex> local_minima() const;

  friend bool operator==(const PLPath&, const PLPath&) = default;

 private:
  // Slope of S on the open piece just right of x.
  [[nodiscard]] std::size_t segment_index(const Scalar& x) const;

  std::vector<Vertex> vertices_;
  Scalar left_;
  Scalar right_;
};

/// Views an alternating path with N >= 1 intervals as a general PL path.
PLPath to_pl_path(const AlternatingPath& p);

/// Inverse of to_pl_path; returns nullopt if some slope is not +-1.
std::optional<AlternatingPath> to_alternating(const PLPath& p);

}  // namespace udtoda
