#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "affgebra/error.hpp"

namespace affgebra {

enum class FieldTag { Q, Qi, GF, Surd, SurdComplex };

/// Fields without runtime parameters share this empty context.
struct NoContext {
  bool operator==(const NoContext&) const = default;
};

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  using context_type = NoContext;
  static constexpr FieldTag tag = FieldTag::Q;
  static constexpr bool is_complex = false;

  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  static Rational from_int(long value, NoContext = {}) { return Rational(value); }
  static Rational from_rational(const Rational& q, NoContext = {}) { return q; }
  NoContext context() const { return {}; }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_real() const { return true; }
  int sign() const { return sgn(value_); }

  Rational conj() const { return *this; }
  Rational inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational");
    return Rational(mpq_class(1) / value_);
  }
  double to_double() const { return value_.get_d(); }

  /// "a/b", or "a" when the denominator is one.
  std::string to_string() const { return value_.get_str(); }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(Raw{}, x.value_ + y.value_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(Raw{}, x.value_ - y.value_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(Raw{}, x.value_ * y.value_); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
    return Rational(Raw{}, x.value_ / y.value_);
  }
  Rational operator-() const { return Rational(Raw{}, -value_); }
  Rational& operator+=(const Rational& y) { value_ += y.value_; return *this; }
  Rational& operator-=(const Rational& y) { value_ -= y.value_; return *this; }
  Rational& operator*=(const Rational& y) { value_ *= y.value_; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Raw {};
  // gmp arithmetic results are already canonical.
  template <class Expr>
  Rational(Raw, Expr&& expr) : value_(std::forward<Expr>(expr)) {}

  mpq_class value_;
};

}  // namespace affgebra
