#include "udtoda/state.hpp"

#include <algorithm>
#include <numeric>

namespace udtoda {

namespace {

void require_positive(const std::vector<Scalar>& v, const char* field) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].sign() <= 0) {
      throw InvariantError(std::string(field) + "[" + std::to_string(i + 1) +
                           "] > 0 violated (got " + v[i].str() + ")");
    }
  }
}

Scalar sum(const std::vector<Scalar>& v) {
  return std::accumulate(v.begin(), v.end(), Scalar{});
}

}  // namespace

TodaState::TodaState(std::vector<Scalar> q, std::vector<Scalar> e)
    : q_(std::move(q)), e_(std::move(e)) {
  if (q_.empty()) throw InvariantError("N >= 1 violated: Q is empty");
  if (e_.size() + 1 != q_.size()) {
    throw InvariantError("len(E) = len(Q) - 1 violated (Q has " + std::to_string(q_.size()) +
                         ", E has " + std::to_string(e_.size()) + ")");
  }
  require_positive(q_, "Q");
  require_positive(e_, "E");
}

PeriodicTodaState::PeriodicTodaState(std::vector<Scalar> q, std::vector<Scalar> e,
                                     Scalar circumference)
    : q_(std::move(q)), e_(std::move(e)), length_(std::move(circumference)) {
  if (q_.empty()) throw InvariantError("N >= 1 violated: Q is empty");
  if (e_.size() != q_.size()) {
    throw InvariantError("len(E) = len(Q) violated (Q has " + std::to_string(q_.size()) +
                         ", E has " + std::to_string(e_.size()) + ")");
  }
  require_positive(q_, "Q");
  require_positive(e_, "E");
  const Scalar mass = sum(q_);
  if (mass + sum(e_) != length_) {
    throw InvariantError("sum Q + sum E = L violated (" + (mass + sum(e_)).str() +
                         " != " + length_.str() + ")");
  }
  if (!(mass * 2 < length_)) {
    throw InvariantError("sum Q < L/2 violated (sum Q = " + mass.str() + ", L = " +
                         length_.str() + ")");
  }
}

PeriodicTodaState::PeriodicTodaState(std::vector<Scalar> q, std::vector<Scalar> e)
    : PeriodicTodaState(q, e, sum(q) + sum(e)) {}

Scalar PeriodicTodaState::drift() const { return length_ - sum(q_) * 2; }

BbsState::BbsState(std::vector<std::int64_t> balls) : balls_(std::move(balls)) {
  std::sort(balls_.begin(), balls_.end());
  if (std::adjacent_find(balls_.begin(), balls_.end()) != balls_.end()) {
    throw InvariantError("balls distinct violated (duplicate site)");
  }
}

}  // namespace udtoda
