#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "affgebra/rational.hpp"
#include "affgebra/scalar_text.hpp"

namespace affgebra {

struct PrimeContext {
  std::uint64_t p = 2;
  bool operator==(const PrimeContext&) const = default;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Residue modulo a prime p < 2^32. The modulus travels with the value.
class PrimeFieldElement {
 public:
  using context_type = PrimeContext;
  static constexpr FieldTag tag = FieldTag::GF;
  static constexpr bool is_complex = false;

  PrimeFieldElement() = default;
  PrimeFieldElement(long value, PrimeContext ctx) : p_(ctx.p) {
    check_modulus(ctx.p);
    long m = static_cast<long>(p_);
    residue_ = static_cast<std::uint64_t>(((value % m) + m) % m);
  }

  static void check_modulus(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ULL << 32))
      fail(ErrorCode::UnsupportedField, "GF modulus must be a prime below 2^32, got " + std::to_string(p));
  }

  static PrimeFieldElement from_int(long value, PrimeContext ctx) { return {value, ctx}; }
  static PrimeFieldElement from_rational(const Rational& q, PrimeContext ctx) {
    mpz_class m(static_cast<unsigned long>(ctx.p));
    mpz_class num = q.numerator() % m;
    mpz_class den = q.denominator() % m;
    if (den == 0)
      fail(ErrorCode::NonInvertibleScalar,
           q.to_string() + " has no image in GF(" + std::to_string(ctx.p) + ")");
    PrimeFieldElement n(num.get_si(), ctx);
    PrimeFieldElement d(den.get_si(), ctx);
    return n * d.inverse();
  }
  PrimeContext context() const { return {p_}; }

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return residue_ == 0; }
  bool is_real() const { return true; }

  PrimeFieldElement conj() const { return *this; }
  PrimeFieldElement inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(p_) + ")");
    // Fermat: x^(p-2)
    return pow(p_ - 2);
  }
  PrimeFieldElement pow(std::uint64_t e) const {
    PrimeFieldElement result = make(1, p_);
    PrimeFieldElement base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  std::string to_string() const { return std::to_string(residue_); }

  static PrimeFieldElement parse(std::string_view s, PrimeContext ctx) {
    PrimeFieldElement out(0, ctx);
    for (const auto& term : text::parse_terms(s)) {
      if (term.radicand != 1 || term.imaginary)
        fail(ErrorCode::ParseError, "GF scalar must be an integer or rational, got '" + std::string(s) + "'");
      out = out + from_rational(term.coefficient, ctx);
    }
    return out;
  }

  friend PrimeFieldElement operator+(const PrimeFieldElement& x, const PrimeFieldElement& y) {
    check_same(x, y);
    return make((x.residue_ + y.residue_) % x.p_, x.p_);
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& x, const PrimeFieldElement& y) {
    check_same(x, y);
    return make((x.residue_ + x.p_ - y.residue_) % x.p_, x.p_);
  }
  friend PrimeFieldElement operator*(const PrimeFieldElement& x, const PrimeFieldElement& y) {
    check_same(x, y);
    return make((x.residue_ * y.residue_) % x.p_, x.p_);
  }
  friend PrimeFieldElement operator/(const PrimeFieldElement& x, const PrimeFieldElement& y) {
    return x * y.inverse();
  }
  PrimeFieldElement operator-() const { return make((p_ - residue_) % p_, p_); }
  PrimeFieldElement& operator+=(const PrimeFieldElement& y) { return *this = *this + y; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& y) { return *this = *this - y; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& y) { return *this = *this * y; }
  friend bool operator==(const PrimeFieldElement& x, const PrimeFieldElement& y) {
    check_same(x, y);
    return x.residue_ == y.residue_;
  }

 private:
  static PrimeFieldElement make(std::uint64_t residue, std::uint64_t p) {
    PrimeFieldElement out;
    out.residue_ = residue;
    out.p_ = p;
    return out;
  }
  static void check_same(const PrimeFieldElement& x, const PrimeFieldElement& y) {
    if (x.p_ != y.p_)
      fail(ErrorCode::FieldMismatch,
           "GF(" + std::to_string(x.p_) + ") vs GF(" + std::to_string(y.p_) + ")");
  }

  std::uint64_t residue_ = 0;
  std::uint64_t p_ = 2;
};

}  // namespace affgebra
