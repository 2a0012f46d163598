#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include "affgebra/error.hpp"
#include "affgebra/gaussian.hpp"
#include "affgebra/prime_field.hpp"
#include "affgebra/rational.hpp"
#include "affgebra/surd.hpp"

namespace affgebra {

template <class S>
concept ExactScalar = std::regular<S> && requires(const S& x, const S& y, long v, const Rational& q,
                                                  const typename S::context_type& ctx) {
  { S::tag } -> std::convertible_to<FieldTag>;
  { S::is_complex } -> std::convertible_to<bool>;
  { S::from_int(v, ctx) } -> std::same_as<S>;
  { S::from_rational(q, ctx) } -> std::same_as<S>;
  { x.context() } -> std::same_as<typename S::context_type>;
  { x + y } -> std::same_as<S>;
  { x - y } -> std::same_as<S>;
  { x * y } -> std::same_as<S>;
  { -x } -> std::same_as<S>;
  { x.inverse() } -> std::same_as<S>;
  { x.conj() } -> std::same_as<S>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.is_real() } -> std::convertible_to<bool>;
  { x.to_string() } -> std::convertible_to<std::string>;
};

template <class S>
using Context = typename S::context_type;

inline std::string_view field_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::Q: return "Q";
    case FieldTag::Qi: return "Qi";
    case FieldTag::GF: return "GF";
    case FieldTag::Surd: return "surd";
    case FieldTag::SurdComplex: return "surd_c";
  }
  return "?";
}

inline FieldTag parse_field_tag(std::string_view name) {
  if (name == "Q") return FieldTag::Q;
  if (name == "Qi") return FieldTag::Qi;
  if (name == "GF") return FieldTag::GF;
  if (name == "surd") return FieldTag::Surd;
  if (name == "surd_c") return FieldTag::SurdComplex;
  fail(ErrorCode::UnsupportedField, "unknown field '" + std::string(name) + "'");
}

/// Runtime description of a field: tag plus modulus for GF.
struct FieldDesc {
  FieldTag tag = FieldTag::Q;
  std::uint64_t p = 0;

  bool operator==(const FieldDesc&) const = default;

  std::string to_string() const {
    if (tag == FieldTag::GF) return "GF(" + std::to_string(p) + ")";
    return std::string(field_name(tag));
  }
};

template <ExactScalar S>
FieldDesc describe(const Context<S>& ctx) {
  if constexpr (std::is_same_v<S, PrimeFieldElement>) return {FieldTag::GF, ctx.p};
  else return {S::tag, 0};
}

template <ExactScalar S>
S scalar(long value, const Context<S>& ctx) {
  return S::from_int(value, ctx);
}

template <ExactScalar S>
S parse_scalar(std::string_view s, const Context<S>& ctx) {
  if constexpr (std::is_same_v<S, Rational>) {
    Rational out(0);
    for (const auto& term : text::parse_terms(s)) {
      if (term.radicand != 1 || term.imaginary)
        fail(ErrorCode::ParseError, "rational scalar expected, got '" + std::string(s) + "'");
      out += term.coefficient;
    }
    return out;
  } else {
    return S::parse(s, ctx);
  }
}

/// Calls `fn(std::type_identity<S>{}, ctx)` with the scalar type selected by `desc`.
template <class Fn>
decltype(auto) dispatch_field(const FieldDesc& desc, Fn&& fn) {
  switch (desc.tag) {
    case FieldTag::Q: return fn(std::type_identity<Rational>{}, NoContext{});
    case FieldTag::Qi: return fn(std::type_identity<GaussianRational>{}, NoContext{});
    case FieldTag::GF:
      PrimeFieldElement::check_modulus(desc.p);
      return fn(std::type_identity<PrimeFieldElement>{}, PrimeContext{desc.p});
    case FieldTag::Surd: return fn(std::type_identity<SurdReal>{}, NoContext{});
    case FieldTag::SurdComplex: return fn(std::type_identity<SurdComplex>{}, NoContext{});
  }
  fail(ErrorCode::UnsupportedField, "unknown field tag");
}

/// Surd extension of a field: ℚ → SurdReal, ℚ(i) → SurdComplex; surd fields map to themselves.
template <class S>
struct SurdExtension {};
template <>
struct SurdExtension<Rational> { using type = SurdReal; };
template <>
struct SurdExtension<GaussianRational> { using type = SurdComplex; };
template <>
struct SurdExtension<SurdReal> { using type = SurdReal; };
template <>
struct SurdExtension<SurdComplex> { using type = SurdComplex; };

template <class S>
using SurdOf = typename SurdExtension<S>::type;

template <class S>
concept SurdExtensible = requires { typename SurdExtension<S>::type; };

template <class S>
SurdOf<S> to_surd(const S& x) {
  return SurdOf<S>(x);
}

}  // namespace affgebra
