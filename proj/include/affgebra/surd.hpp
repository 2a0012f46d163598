#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affgebra/gaussian.hpp"
#include "affgebra/rational.hpp"
#include "affgebra/scalar_text.hpp"

namespace affgebra {

struct SquarefreeSplit {
  std::uint64_t square_root;  // s
  std::uint64_t squarefree;   // f
  bool operator==(const SquarefreeSplit&) const = default;
};

/// k = s²·f with f squarefree, by trial division.
inline SquarefreeSplit squarefree_decompose(std::uint64_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "squarefree decomposition of 0");
  std::uint64_t s = 1;
  std::uint64_t f = 1;
  for (std::uint64_t q = 2; q * q <= k; ++q) {
    int mult = 0;
    while (k % q == 0) {
      k /= q;
      ++mult;
    }
    for (int j = 0; j < mult / 2; ++j) s *= q;
    if (mult % 2 == 1) f *= q;
  }
  f *= k;
  return {s, f};
}

inline bool is_squarefree(std::uint64_t d) { return d > 0 && squarefree_decompose(d).square_root == 1; }

/// √d·√e = s·√f.
inline SquarefreeSplit surd_basis_product(std::uint64_t d, std::uint64_t e) {
  return squarefree_decompose(d * e);
}

/// Σ q_d·√d over squarefree d; d = 1 holds the rational part.
class SurdReal {
 public:
  using context_type = NoContext;
  using Entry = std::pair<std::uint64_t, Rational>;
  static constexpr FieldTag tag = FieldTag::Surd;
  static constexpr bool is_complex = false;

  SurdReal() = default;
  SurdReal(long value) : SurdReal(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  SurdReal(const Rational& q) {  // NOLINT(google-explicit-constructor)
    if (!q.is_zero()) terms_.emplace_back(1, q);
  }

  static SurdReal from_int(long value, NoContext = {}) { return SurdReal(value); }
  static SurdReal from_rational(const Rational& q, NoContext = {}) { return SurdReal(q); }
  NoContext context() const { return {}; }

  /// q·√k for any positive k; reduced to squarefree form.
  static SurdReal term(const Rational& q, std::uint64_t k) {
    auto [s, f] = squarefree_decompose(k);
    SurdReal out;
    Rational coef = q * Rational(static_cast<long>(s));
    if (!coef.is_zero()) out.terms_.emplace_back(f, coef);
    return out;
  }

  /// √q for a non-negative rational q: √(a/b) = √(ab)/b.
  static SurdReal sqrt(const Rational& q) {
    if (q.sign() < 0) fail(ErrorCode::InvalidArgument, "sqrt of negative rational");
    if (q.is_zero()) return {};
    mpz_class ab = q.numerator() * q.denominator();
    if (!ab.fits_ulong_p()) fail(ErrorCode::InvalidArgument, "radicand too large");
    return term(Rational(mpq_class(1, q.denominator())), ab.get_ui());
  }

  const std::vector<Entry>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const { return true; }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational coefficient(std::uint64_t d) const {
    for (const auto& [key, q] : terms_)
      if (key == d) return q;
    return Rational(0);
  }

  SurdReal conj() const { return *this; }

  /// Defined only for single-term divisors: (q√d)⁻¹ = (1/(q·d))·√d.
  SurdReal inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero surd");
    if (terms_.size() != 1) fail(ErrorCode::NonInvertibleSurd, "multi-term surd " + to_string());
    const auto& [d, q] = terms_.front();
    SurdReal out;
    out.terms_.emplace_back(d, (q * Rational(static_cast<long>(d))).inverse());
    return out;
  }

  double to_double() const {
    double acc = 0.0;
    for (const auto& [d, q] : terms_) acc += q.to_double() * std::sqrt(static_cast<double>(d));
    return acc;
  }

  std::string to_string() const { return format("", ""); }

  /// Terms joined with `suffix` appended to each one; `unit` replaces a bare coefficient of ±1.
  std::string format(const std::string& suffix, const std::string& unit) const {
    std::vector<std::string> parts;
    for (const auto& [d, q] : terms_) {
      if (d == 1) {
        if (suffix.empty()) parts.push_back(q.to_string());
        else parts.push_back(text::coefficient_prefix(q, false) + unit);
      } else {
        parts.push_back(text::coefficient_prefix(q, true) + "sqrt(" + std::to_string(d) + ")" + suffix);
      }
    }
    return text::join_terms(parts);
  }

  static SurdReal parse(std::string_view s, NoContext = {}) {
    SurdReal out;
    for (const auto& t : text::parse_terms(s)) {
      if (t.imaginary) fail(ErrorCode::ParseError, "imaginary term in real surd '" + std::string(s) + "'");
      out += term(t.coefficient, t.radicand);
    }
    return out;
  }

  friend SurdReal operator+(const SurdReal& x, const SurdReal& y) { return merge(x, y, false); }
  friend SurdReal operator-(const SurdReal& x, const SurdReal& y) { return merge(x, y, true); }
  friend SurdReal operator*(const SurdReal& x, const SurdReal& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::map<std::uint64_t, Rational> acc;
    for (const auto& [d, q] : x.terms_) {
      for (const auto& [e, r] : y.terms_) {
        auto [s, f] = surd_basis_product(d, e);
        acc[f] += q * r * Rational(static_cast<long>(s));
      }
    }
    SurdReal out;
    for (auto& [f, q] : acc)
      if (!q.is_zero()) out.terms_.emplace_back(f, std::move(q));
    return out;
  }
  friend SurdReal operator/(const SurdReal& x, const SurdReal& y) { return x * y.inverse(); }
  SurdReal operator-() const {
    SurdReal out = *this;
    for (auto& entry : out.terms_) entry.second = -entry.second;
    return out;
  }
  SurdReal& operator+=(const SurdReal& y) { return *this = *this + y; }
  SurdReal& operator-=(const SurdReal& y) { return *this = *this - y; }
  SurdReal& operator*=(const SurdReal& y) { return *this = *this * y; }
  friend bool operator==(const SurdReal&, const SurdReal&) = default;

 private:
  static SurdReal merge(const SurdReal& x, const SurdReal& y, bool subtract) {
    SurdReal out;
    out.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == x.terms_.end() || j->first < i->first) {
        out.terms_.emplace_back(j->first, subtract ? -j->second : j->second);
        ++j;
      } else {
        Rational q = subtract ? i->second - j->second : i->second + j->second;
        if (!q.is_zero()) out.terms_.emplace_back(i->first, std::move(q));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Entry> terms_;  // sorted by radicand, no zero coefficients
};

/// re + im·i with surd real and imaginary parts.
class SurdComplex {
 public:
  using context_type = NoContext;
  using real_type = SurdReal;
  static constexpr FieldTag tag = FieldTag::SurdComplex;
  static constexpr bool is_complex = true;

  SurdComplex() = default;
  SurdComplex(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  SurdComplex(SurdReal re, SurdReal im = {}) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  SurdComplex(const GaussianRational& z) : re_(z.re()), im_(z.im()) {}  // NOLINT

  static SurdComplex from_int(long value, NoContext = {}) { return SurdComplex(value); }
  static SurdComplex from_rational(const Rational& q, NoContext = {}) { return SurdComplex(SurdReal(q)); }
  static SurdComplex imag_unit(NoContext = {}) { return {SurdReal{}, SurdReal(1)}; }
  NoContext context() const { return {}; }

  const SurdReal& re() const { return re_; }
  const SurdReal& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  SurdComplex conj() const { return {re_, -im_}; }
  /// Needs re² + im² to be a single-term surd.
  SurdComplex inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero complex surd");
    SurdReal norm_inv = (re_ * re_ + im_ * im_).inverse();
    return {re_ * norm_inv, -(im_ * norm_inv)};
  }

  std::string to_string() const {
    std::vector<std::string> parts;
    if (!re_.is_zero()) parts.push_back(re_.to_string());
    if (!im_.is_zero()) parts.push_back(im_.format("i", "i"));
    return text::join_terms(parts);
  }

  static SurdComplex parse(std::string_view s, NoContext = {}) {
    SurdComplex out;
    for (const auto& t : text::parse_terms(s)) {
      SurdReal part = SurdReal::term(t.coefficient, t.radicand);
      if (t.imaginary) out.im_ += part;
      else out.re_ += part;
    }
    return out;
  }

  friend SurdComplex operator+(const SurdComplex& x, const SurdComplex& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
  friend SurdComplex operator-(const SurdComplex& x, const SurdComplex& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
  friend SurdComplex operator*(const SurdComplex& x, const SurdComplex& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend SurdComplex operator/(const SurdComplex& x, const SurdComplex& y) { return x * y.inverse(); }
  SurdComplex operator-() const { return {-re_, -im_}; }
  SurdComplex& operator+=(const SurdComplex& y) { return *this = *this + y; }
  SurdComplex& operator-=(const SurdComplex& y) { return *this = *this - y; }
  SurdComplex& operator*=(const SurdComplex& y) { return *this = *this * y; }
  friend bool operator==(const SurdComplex&, const SurdComplex&) = default;

 private:
  SurdReal re_;
  SurdReal im_;
};

}  // namespace affgebra
