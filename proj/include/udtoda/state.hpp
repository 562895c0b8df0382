#pragma once

// Configurations of the finite and periodic ultra-discrete Toda lattice and of
// the box-ball system. Constructors enforce every invariant; a constructed
// value is always valid.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "udtoda/scalar.hpp"

namespace udtoda {

/// A state or path failed one of its invariants. The message names it.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite configuration: N particle-string lengths q and N-1 gap lengths e,
/// all strictly positive.
class TodaState {
 public:
  TodaState(std::vector<Scalar> q, std::vector<Scalar> e);

  [[nodiscard]] const std::vector<Scalar>& q() const { return q_; }
  [[nodiscard]] const std::vector<Scalar>& e() const { return e_; }
  [[nodiscard]] std::size_t size() const { return q_.size(); }

  friend bool operator==(const TodaState&, const TodaState&) = default;

 private:
  std::vector<Scalar> q_;
  std::vector<Scalar> e_;
};

/// Periodic configuration on a circle of circumference L:
/// N strings and N gaps, sum(q) + sum(e) = L, sum(q) < L/2.
class PeriodicTodaState {
 public:
  PeriodicTodaState(std::vector<Scalar> q, std::vector<Scalar> e, Scalar circumference);
  /// Circumference taken as sum(q) + sum(e).
  PeriodicTodaState(std::vector<Scalar> q, std::vector<Scalar> e);

  [[nodiscard]] const std::vector<Scalar>& q() const { return q_; }
  [[nodiscard]] const std::vector<Scalar>& e() const { return e_; }
  [[nodiscard]] const Scalar& circumference() const { return length_; }
  [[nodiscard]] std::size_t size() const { return q_.size(); }
  /// L - 2 sum(q): the increment of the path encoding over one period.
  [[nodiscard]] Scalar drift() const;

  friend bool operator==(const PeriodicTodaState&, const PeriodicTodaState&) = default;

 private:
  std::vector<Scalar> q_;
  std::vector<Scalar> e_;
  Scalar length_;
};

/// Finitely many balls on Z, stored as sorted distinct occupied sites.
class BbsState {
 public:
  BbsState() = default;
  /// Sorts the input; rejects duplicates.
  explicit BbsState(std::vector<std::int64_t> balls);

  [[nodiscard]] const std::vector<std::int64_t>& balls() const { return balls_; }
  [[nodiscard]] std::size_t count() const { return balls_.size(); }
  [[nodiscard]] bool empty() const { return balls_.empty(); }

  friend bool operator==(const BbsState&, const BbsState&) = default;

 private:
  std::vector<std::int64_t> balls_;
};

/// A state followed by its successive images under one step map.
template <class State>
struct Trajectory {
  std::vector<State> states;

  [[nodiscard]] const State& initial() const { return states.front(); }
  [[nodiscard]] std::size_t step_count() const { return states.size() - 1; }
};

template <class State, class Step>
Trajectory<State> iterate(const State& s, std::size_t steps, Step&& step) {
  Trajectory<State> t;
  t.states.reserve(steps + 1);
  t.states.push_back(s);
  for (std::size_t k = 0; k < steps; ++k) t.states.push_back(step(t.states.back()));
  return t;
}

}  // namespace udtoda
