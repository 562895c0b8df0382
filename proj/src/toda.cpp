#include "udtoda/toda.hpp"

#include <numeric>

namespace udtoda {

namespace {

// Shared sweep of the finite recurrence. Fills tq (and excess, if given).
void finite_sweep(const TodaState& s, std::vector<Scalar>& tq, std::vector<Scalar>* excess) {
  const auto& q = s.q();
  const auto& e = s.e();
  const std::size_t n = q.size();
  tq.reserve(n);
  Scalar running;  // sum_{k<=i} Q_k - sum_{k<i} TQ_k, maintained incrementally
  for (std::size_t i = 0; i < n; ++i) {
    running += q[i];
    if (i > 0) running -= tq[i - 1];
    if (excess) excess->push_back(running);
    const ExtScalar gap = i + 1 < n ? ExtScalar(e[i]) : ExtScalar::infinity();
    tq.push_back(min(running, gap));
  }
}

}  // namespace

TodaState toda_step(const TodaState& s) {
  std::vector<Scalar> tq;
  finite_sweep(s, tq, nullptr);
  const auto& q = s.q();
  const auto& e = s.e();
  std::vector<Scalar> te;
  te.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) te.push_back(q[i + 1] + e[i] - tq[i]);
  return TodaState(std::move(tq), std::move(te));
}

std::vector<Scalar> running_excess(const TodaState& s) {
  std::vector<Scalar> tq;
  std::vector<Scalar> w;
  finite_sweep(s, tq, &w);
  return w;
}

std::vector<Scalar> periodic_offsets(const PeriodicTodaState& s) {
  // With d_m = E_m - Q_m and P_j = d_1 + ... + d_j (P_0 = 0):
  //   sum_{l=1}^k d_{n-l} = P_{n-1} - P_{n-1-k},
  // and P_{j-N} = P_j - drift. So the window max over k in [0, N-1] is
  //   max( max_{0<=j<=n-1} P_j, max_{n<=j<=N-1} P_j - drift ).
  const auto& q = s.q();
  const auto& e = s.e();
  const std::size_t n = q.size();
  const Scalar drift = s.drift();

  std::vector<Scalar> prefix(n);  // P_0 .. P_{N-1}
  for (std::size_t j = 1; j < n; ++j) prefix[j] = prefix[j - 1] + e[j - 1] - q[j - 1];

  std::vector<Scalar> suffix_max(n + 1);  // max_{j>=i} P_j, i < N
  for (std::size_t i = n; i-- > 0;) {
    suffix_max[i] = i + 1 < n ? max(prefix[i], suffix_max[i + 1]) : prefix[i];
  }

  std::vector<Scalar> d;
  d.reserve(n);
  Scalar head_max = prefix[0];
  for (std::size_t i = 0; i < n; ++i) {  // i = n-1 in 1-based indexing
    head_max = max(head_max, prefix[i]);
    Scalar window = head_max;
    if (i + 1 < n) window = max(window, suffix_max[i + 1] - drift);
    d.push_back(prefix[i] - window);
  }
  return d;
}

PeriodicTodaState periodic_toda_step(const PeriodicTodaState& s) {
  const auto& q = s.q();
  const auto& e = s.e();
  const std::size_t n = q.size();
  const auto d = periodic_offsets(s);

  std::vector<Scalar> tq;
  std::vector<Scalar> te;
  tq.reserve(n);
  te.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    tq.push_back(min(q[i] - d[i], e[i]));
    te.push_back(e[i] + q[(i + 1) % n] - tq.back());
  }
  return PeriodicTodaState(std::move(tq), std::move(te), s.circumference());
}

Scalar total_mass(const TodaState& s) {
  return std::accumulate(s.q().begin(), s.q().end(), Scalar{});
}

Scalar total_mass(const PeriodicTodaState& s) {
  return std::accumulate(s.q().begin(), s.q().end(), Scalar{});
}

Trajectory<TodaState> run_trajectory(const TodaState& s, std::size_t steps) {
  return iterate(s, steps, [](const TodaState& x) { return toda_step(x); });
}

Trajectory<PeriodicTodaState> run_trajectory(const PeriodicTodaState& s, std::size_t steps) {
  return iterate(s, steps, [](const PeriodicTodaState& x) { return periodic_toda_step(x); });
}

}  // namespace udtoda
