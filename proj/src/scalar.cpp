#include "udtoda/scalar.hpp"

#include <cctype>

namespace udtoda {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_unsigned(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Scalar::Scalar(std::int64_t value) : value_(mpz_class(std::to_string(value), 10)) {}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.empty()) throw ScalarParseError("empty number");

  bool negative = false;
  std::string_view body = t;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class q;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ScalarParseError("malformed fraction '" + std::string(text) + "'");
    }
    mpz_class d = parse_unsigned(den);
    if (d == 0) throw ScalarParseError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(parse_unsigned(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ScalarParseError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = (whole.empty() ? mpz_class(0) : parse_unsigned(whole)) * scale +
                    parse_unsigned(frac);
    q = mpq_class(num, scale);
  } else {
    if (!all_digits(body)) throw ScalarParseError("malformed number '" + std::string(text) + "'");
    q = mpq_class(parse_unsigned(body));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Scalar(std::move(q));
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Scalar::numerator_str() const { return value_.get_num().get_str(); }
std::string Scalar::denominator_str() const { return value_.get_den().get_str(); }
bool Scalar::is_integer() const { return value_.get_den() == 1; }

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar floor(const Scalar& s) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), s.raw().get_num_mpz_t(), s.raw().get_den_mpz_t());
  return Scalar(mpq_class(q));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

const Scalar& ExtScalar::value() const {
  if (infinite_) throw std::logic_error("value() on +inf");
  return value_;
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  if (a.infinite_ || b.infinite_) return ExtScalar::infinity();
  return ExtScalar(a.value_ + b.value_);
}

bool operator==(const ExtScalar& a, const ExtScalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  return a.value_ <=> b.value_;
}

ExtScalar min(const ExtScalar& a, const ExtScalar& b) { return b < a ? b : a; }

Scalar min(const Scalar& a, const ExtScalar& b) {
  if (b.is_infinite()) return a;
  return min(a, b.value());
}

}  // namespace udtoda
