#include "udtoda/bbs.hpp"

#include "udtoda/path_transform.hpp"

namespace udtoda {

BbsState carrier_step(const BbsState& b) {
  const auto& balls = b.balls();
  std::vector<std::int64_t> out;
  out.reserve(balls.size());
  std::int64_t load = 0;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (i > 0 && load > 0) {
      // Empty sites strictly between the previous ball and this one.
      std::int64_t site = balls[i - 1] + 1;
      while (load > 0 && site < balls[i]) {
        out.push_back(site++);
        --load;
      }
    }
    ++load;
  }
  if (!balls.empty()) {
    for (std::int64_t site = balls.back() + 1; load > 0; ++site, --load) out.push_back(site);
  }
  return BbsState(std::move(out));
}

AlternatingPath bbs_encode(const BbsState& b) {
  IntervalList down;
  for (const std::int64_t site : b.balls()) {
    if (!down.empty() && down.back().b == Scalar(site - 1)) {
      down.back().b = Scalar(site);
    } else {
      down.push_back({Scalar(site - 1), Scalar(site)});
    }
  }
  return AlternatingPath(std::move(down));
}

BbsState bbs_decode(const AlternatingPath& p) {
  std::vector<std::int64_t> balls;
  for (const auto& iv : p.intervals()) {
    if (!iv.a.is_integer() || !iv.b.is_integer()) {
      throw PathShapeError("bbs_decode: non-integer breakpoint");
    }
    const auto lo = std::stoll(iv.a.str());
    const auto hi = std::stoll(iv.b.str());
    for (auto site = lo + 1; site <= hi; ++site) balls.push_back(site);
  }
  return BbsState(std::move(balls));
}

BbsState bbs_pitman_step(const BbsState& b) { return bbs_decode(pitman(bbs_encode(b))); }

TodaData extract_toda_data(const PLPath& p) {
  const auto maxima = p.local_maxima();
  const auto minima = p.local_minima();
  if (maxima.empty()) throw PathShapeError("extract_toda_data: path has no local maximum");
  // Positive tails force the pattern max, min, max, ..., min.
  TodaData d{maxima.front().x, {}, {}};
  for (std::size_t n = 0; n < maxima.size(); ++n) {
    d.q.push_back(maxima[n].y - minima[n].y);
    if (n + 1 < maxima.size()) d.e.push_back(maxima[n + 1].y - minima[n].y);
  }
  return d;
}

Scalar total_variation(const PLPath& p, const Scalar& x) { return p.total_variation(x); }

PLPath pitman_pl(const PLPath& p) { return pitman(p); }

}  // namespace udtoda
