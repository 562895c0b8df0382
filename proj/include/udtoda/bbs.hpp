#pragma once

// Box-ball system: the discrete carrier dynamics on Z, their Pitman form on
// the path encoding, and the box-ball system on R for general-slope paths.

#include <vector>

#include "udtoda/path.hpp"
#include "udtoda/state.hpp"

namespace udtoda {

/// One sweep of the carrier from left to right: it picks up every ball it
/// passes and drops one at each empty site while loaded.
BbsState carrier_step(const BbsState& b);

/// Lattice path with S_0 = 0 and S_n - S_{n-1} = 1 - 2 eta_n, as an
/// alternating path with integer breakpoints (a ball at n is the down-step
/// [n-1, n]).
AlternatingPath bbs_encode(const BbsState& b);

/// Reads balls back off the down-steps of an integer alternating path.
BbsState bbs_decode(const AlternatingPath& p);

/// Reflection of the encoding in its past maximum, read back as balls.
BbsState bbs_pitman_step(const BbsState& b);

struct TodaData {
  Scalar first_max;  // a_1
  std::vector<Scalar> q;
  std::vector<Scalar> e;
};

/// a_1 and the height differences Q_n = |S_{b_n} - S_{a_n}|,
/// E_n = |S_{a_{n+1}} - S_{b_n}|. Throws PathShapeError without a local max.
TodaData extract_toda_data(const PLPath& p);

/// ||S||_x, the total variation of S between 0 and x (signed for x < 0).
Scalar total_variation(const PLPath& p, const Scalar& x);

/// Pitman's transform of a general-slope path. The result stays in the same
/// class: a_1(TS) = b_1(S), ||TS|| = ||S||, and the extracted (Q, E) evolve
/// by one step of the finite Toda lattice.
PLPath pitman_pl(const PLPath& p);

}  // namespace udtoda
