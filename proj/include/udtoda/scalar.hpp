#pragma once

// Exact rational scalars and the +infinity-extended variant used for
// boundary gap lengths.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace udtoda {

/// Thrown when text cannot be parsed as an exact rational.
class ScalarParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational in canonical reduced form (denominator > 0,
/// gcd(|num|, den) = 1). Every arithmetic operation is exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(mpq_class value);

  /// Accepts `12`, `-3/4`, `0.125`, `-2.5`. Decimals are converted exactly.
  static Scalar parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::string numerator_str() const;
  [[nodiscard]] std::string denominator_str() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_{0};
};

Scalar abs(const Scalar& s);
inline Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// Largest integer <= s.
Scalar floor(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// A Scalar or the sentinel +infinity. Only the operations the min-plus
/// recurrences need are provided.
class ExtScalar {
 public:
  ExtScalar(Scalar value) : value_(std::move(value)) {}  // NOLINT
  static ExtScalar infinity() { return ExtScalar{}; }

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  /// Precondition: finite.
  [[nodiscard]] const Scalar& value() const;
  [[nodiscard]] std::string str() const { return infinite_ ? "inf" : value_.str(); }

  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  friend bool operator==(const ExtScalar& a, const ExtScalar& b);
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b);

 private:
  ExtScalar() : infinite_(true) {}
  Scalar value_;
  bool infinite_ = false;
};

ExtScalar min(const ExtScalar& a, const ExtScalar& b);
/// min of a finite and an extended value is always finite.
Scalar min(const Scalar& a, const ExtScalar& b);

}  // namespace udtoda
