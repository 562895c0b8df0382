#pragma once

// Direct min-plus evolution of the ultra-discrete Toda lattice.

#include <vector>

#include "udtoda/scalar.hpp"
#include "udtoda/state.hpp"

namespace udtoda {

/// One time step of the finite lattice:
///   TQ_n = min{ sum_{k<=n} Q_k - sum_{k<n} TQ_k, E_n },  E_N = +inf
///   TE_n = Q_{n+1} + E_n - TQ_n
TodaState toda_step(const TodaState& s);

/// The running quantity W_n = sum_{k<=n} Q_k - sum_{k<n} TQ_k of toda_step,
/// n = 1..N. On the path encoding it equals M_{b_n} - S_{b_n}.
std::vector<Scalar> running_excess(const TodaState& s);

/// One time step of the periodic lattice:
///   TQ_n = min{ Q_n - D_n, E_n },  TE_n = E_n + Q_{n+1} - TQ_n
/// with cyclic indices.
PeriodicTodaState periodic_toda_step(const PeriodicTodaState& s);

/// D_n = min_{0<=k<=N-1} sum_{l=1}^k (E_{n-l} - Q_{n-l}), cyclic indices,
/// computed in O(N). Always <= 0.
std::vector<Scalar> periodic_offsets(const PeriodicTodaState& s);

Scalar total_mass(const TodaState& s);
Scalar total_mass(const PeriodicTodaState& s);

Trajectory<TodaState> run_trajectory(const TodaState& s, std::size_t steps);
Trajectory<PeriodicTodaState> run_trajectory(const PeriodicTodaState& s, std::size_t steps);

}  // namespace udtoda
