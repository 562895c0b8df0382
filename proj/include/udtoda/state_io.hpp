#pragma once

// Text formats: line-oriented `key=value` state files, CSV trajectory rows
// and stacked-trace SVG plots.
//
// State file:
//   # comment
//   type=toda | periodic | bbs | pl
//   Q=2,1          toda, periodic
//   E=3            toda, periodic
//   L=8            periodic (optional, defaults to sum Q + sum E)
//   balls=1,2,4    bbs
//   x=0,1,4,5      pl breakpoints
//   y=0,-2,1,0     pl heights
//   left=1         pl tail slopes
//   right=3
//
// CSV rows: `step,Q=q1|q2|...,E=e1|...,mass=m` (toda, periodic) and
// `step,balls=s1|s2|...,mass=count` (bbs). Rationals are written as p/q.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "udtoda/path.hpp"
#include "udtoda/state.hpp"

namespace udtoda {

class StateParseError : public std::runtime_error {
 public:
  StateParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using AnyState = std::variant<TodaState, PeriodicTodaState, BbsState, PLPath>;

/// Throws StateParseError for syntax problems and InvariantError when the
/// values do not form a valid state.
AnyState parse_state(std::string_view text);
AnyState load_state(const std::filesystem::path& file);

std::string format_state(const TodaState& s);
std::string format_state(const PeriodicTodaState& s);
std::string format_state(const BbsState& s);
std::string format_state(const PLPath& p);

std::string csv_header(const TodaState&);
std::string csv_header(const PeriodicTodaState&);
std::string csv_header(const BbsState&);

std::string csv_row(std::size_t step, const TodaState& s);
std::string csv_row(std::size_t step, const PeriodicTodaState& s);
std::string csv_row(std::size_t step, const BbsState& s);

std::pair<std::size_t, TodaState> parse_toda_row(std::string_view row);
/// L is recovered as sum Q + sum E.
std::pair<std::size_t, PeriodicTodaState> parse_periodic_row(std::string_view row);
std::pair<std::size_t, BbsState> parse_bbs_row(std::string_view row);

/// One polyline per state, time increasing downward. Every trace is drawn
/// over the same horizontal window.
std::string render_svg(const Trajectory<TodaState>& t);
/// Window [0, L] of each canonical periodic encoding.
std::string render_svg(const Trajectory<PeriodicTodaState>& t);
std::string render_svg(const Trajectory<BbsState>& t);

}  // namespace udtoda
