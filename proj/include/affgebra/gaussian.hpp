#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "affgebra/rational.hpp"
#include "affgebra/scalar_text.hpp"

namespace affgebra {

/// Element re + im·i of ℚ(i).
class GaussianRational {
 public:
  using context_type = NoContext;
  using real_type = Rational;
  static constexpr FieldTag tag = FieldTag::Qi;
  static constexpr bool is_complex = true;

  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

  static GaussianRational from_int(long value, NoContext = {}) { return GaussianRational(value); }
  static GaussianRational from_rational(const Rational& q, NoContext = {}) { return GaussianRational(q); }
  static GaussianRational imag_unit(NoContext = {}) { return {Rational(0), Rational(1)}; }
  NoContext context() const { return {}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero Gaussian rational");
    Rational norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
  }

  std::string to_string() const {
    std::vector<std::string> parts;
    if (!re_.is_zero()) parts.push_back(re_.to_string());
    if (!im_.is_zero()) parts.push_back(text::coefficient_prefix(im_, false) + "i");
    return text::join_terms(parts);
  }

  static GaussianRational parse(std::string_view s, NoContext = {}) {
    GaussianRational out;
    for (const auto& term : text::parse_terms(s)) {
      if (term.radicand != 1) fail(ErrorCode::ParseError, "sqrt not allowed in Qi scalar '" + std::string(s) + "'");
      if (term.imaginary) out.im_ += term.coefficient;
      else out.re_ += term.coefficient;
    }
    return out;
  }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) { return x * y.inverse(); }
  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& y) {
    re_ += y.re_;
    im_ += y.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& y) {
    re_ -= y.re_;
    im_ -= y.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace affgebra
