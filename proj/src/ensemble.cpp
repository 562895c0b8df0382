#include "udtoda/ensemble.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace udtoda::ensemble {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Rational in (0, limit] with denominator <= 12.
Scalar magnitude(Rng& rng, std::int64_t limit) {
  const std::int64_t den = uniform(rng, 1, 12);
  return Scalar(uniform(rng, 1, limit * den), den);
}

}  // namespace

Scalar positive_rational(Rng& rng, std::int64_t bound) {
  return Scalar(uniform(rng, 1, bound), uniform(rng, 1, bound));
}

TodaState toda_state(Rng& rng, std::size_t max_n, std::int64_t bound) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_n)));
  std::vector<Scalar> q;
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < n; ++i) q.push_back(positive_rational(rng, bound));
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back(positive_rational(rng, bound));
  return TodaState(std::move(q), std::move(e));
}

PeriodicTodaState periodic_state(Rng& rng, std::size_t max_n, std::int64_t bound) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_n)));
  std::vector<Scalar> q;
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < n; ++i) q.push_back(positive_rational(rng, bound));
  for (std::size_t i = 0; i < n; ++i) e.push_back(positive_rational(rng, bound));
  const Scalar mass = std::accumulate(q.begin(), q.end(), Scalar{});
  const Scalar gaps = std::accumulate(e.begin(), e.end(), Scalar{});
  if (!(mass < gaps)) {
    // Scale gaps so that their sum is mass * (1 + k/4), k in [1, 8].
    const Scalar factor = mass / gaps * Scalar(4 + uniform(rng, 1, 8), 4);
    for (auto& x : e) x *= factor;
  }
  return PeriodicTodaState(std::move(q), std::move(e));
}

BbsState bbs_state(Rng& rng, std::size_t max_balls, std::int64_t window) {
  const auto count = static_cast<std::size_t>(
      uniform(rng, 0, std::min<std::int64_t>(static_cast<std::int64_t>(max_balls), window)));
  std::set<std::int64_t> sites;
  while (sites.size() < count) sites.insert(uniform(rng, 0, window - 1));
  return BbsState(std::vector<std::int64_t>(sites.begin(), sites.end()));
}

PLPath pl_path(Rng& rng, std::size_t max_pairs, std::int64_t max_slope) {
  const auto pairs = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_pairs)));
  std::vector<Scalar> xs{Scalar(uniform(rng, -60, 60), 12)};
  std::vector<Scalar> slopes;
  for (std::size_t k = 0; k < 2 * pairs - 1; ++k) {
    xs.push_back(xs.back() + magnitude(rng, 3));
    const Scalar m = magnitude(rng, max_slope);
    slopes.push_back(k % 2 == 0 ? -m : m);
  }
  return PLPath::from_slopes(xs, slopes, magnitude(rng, max_slope), magnitude(rng, max_slope));
}

}  // namespace udtoda::ensemble
