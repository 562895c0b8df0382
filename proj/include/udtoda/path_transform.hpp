#pragma once

// Path encodings of Toda configurations and the shifted Pitman transform
//
//   (TS)_x = 2 M_x - S_x - 2 M_0,      M_x = sup_{y <= x} S_y,
//   𝒯S     = θ^τ(TS),                  τ = first local maximum at x >= 0,
//
// which reproduces one step of the lattice dynamics on the encoding.

#include <stdexcept>

#include "udtoda/path.hpp"
#include "udtoda/state.hpp"

namespace udtoda {

/// A path does not have the shape an operation requires (e.g. decoding a
/// non-canonical path, or shifting a path with no local maximum at x >= 0).
class PathShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PathPoint {
  Scalar value;     // S_x
  Scalar past_max;  // M_x
  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

AlternatingPath encode(const TodaState& s);
TodaState decode(const AlternatingPath& p);

PeriodicPath encode_periodic(const PeriodicTodaState& s);
PeriodicTodaState decode_periodic(const PeriodicPath& p);

PathPoint evaluate(const AlternatingPath& p, const Scalar& x);
PathPoint evaluate(const PeriodicPath& p, const Scalar& x);
PathPoint evaluate(const PLPath& p, const Scalar& x);

/// Reflection in the past maximum, normalized so that (TS)_0 = 0. The result
/// is generally not canonical.
AlternatingPath pitman(const AlternatingPath& p);
PeriodicPath pitman(const PeriodicPath& p);
PLPath pitman(const PLPath& p);

/// y -> S_{τ+y} - S_τ with τ the first local maximum at a nonnegative
/// position. Throws PathShapeError if there is none.
AlternatingPath shift_to_first_max(const AlternatingPath& p);
PeriodicPath shift_to_first_max(const PeriodicPath& p);

/// shift_to_first_max(pitman(p)).
AlternatingPath toda_transform_path(const AlternatingPath& p);
PeriodicPath toda_transform_path(const PeriodicPath& p);

/// c_n = min{ b_n + M_{b_n} - S_{b_n}, a_{n+1} } (a_{N+1} = +inf): the point
/// after b_n where S first regains its past maximum, capped at a_{n+1}.
std::vector<Scalar> recovery_points(const AlternatingPath& p);

/// Down-intervals of toda_transform_path(p) in closed form:
/// [b_n - b_1, c_n - b_1].
IntervalList breakpoint_map(const AlternatingPath& p);

}  // namespace udtoda
