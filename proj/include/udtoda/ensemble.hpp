#pragma once

// Seeded generators for random valid states, used by the property tests, the
// acceptance suite and the CLI's --seed mode.

#include <cstdint>
#include <random>

#include "udtoda/path.hpp"
#include "udtoda/state.hpp"

namespace udtoda::ensemble {

using Rng = std::mt19937_64;

/// p/q with 1 <= p, q <= bound.
Scalar positive_rational(Rng& rng, std::int64_t bound = 1000);

/// N uniform in [1, max_n]; entries from positive_rational.
TodaState toda_state(Rng& rng, std::size_t max_n = 20, std::int64_t bound = 1000);

/// N uniform in [1, max_n]; gaps rescaled when needed so that sum Q < L/2.
PeriodicTodaState periodic_state(Rng& rng, std::size_t max_n = 20, std::int64_t bound = 1000);

/// Up to max_balls distinct sites in [0, window).
BbsState bbs_state(Rng& rng, std::size_t max_balls = 200, std::int64_t window = 1000);

/// Between 1 and max_pairs (max, min) pairs, segment slopes alternating in
/// sign with magnitudes p/q in (0, max_slope], positive tails, first
/// breakpoint anywhere in [-5, 5].
PLPath pl_path(Rng& rng, std::size_t max_pairs = 7, std::int64_t max_slope = 5);

}  // namespace udtoda::ensemble
