#pragma once

// Vector-free affine spaces and Lie affgebras.
//
// An affine space is an abelian heap ⟨a,b,c⟩ together with a scalar action
// α ▷_a b. Everything else here (retract groups, retract vector spaces, the
// Lie algebra retract, the translation automorphism) is expressed through
// those two operations and a bracket, so it runs unchanged on any carrier.

#include <concepts>
#include <string>
#include <utility>

#include "affgebra/error.hpp"
#include "affgebra/field.hpp"
#include "affgebra/matrix.hpp"

namespace affgebra {

template <class C>
concept AffineCarrier = requires(const C& space, const typename C::point_type& a,
                                 const typename C::scalar_type& alpha, long v) {
  typename C::point_type;
  typename C::scalar_type;
  { space.heap(a, a, a) } -> std::same_as<typename C::point_type>;
  { space.action(alpha, a, a) } -> std::same_as<typename C::point_type>;
  { space.bracket(a, a) } -> std::same_as<typename C::point_type>;
  { space.equal(a, a) } -> std::convertible_to<bool>;
  { space.scalar(v) } -> std::same_as<typename C::scalar_type>;
};

/// Carriers with an associative bi-affine multiplication.
template <class C>
concept MultiplicativeCarrier = AffineCarrier<C> && requires(const C& space, const typename C::point_type& a) {
  { space.multiply(a, a) } -> std::same_as<typename C::point_type>;
};

template <ExactScalar S>
struct BracketKind {
  enum class Type { Zeta, AffineCommutator };

  Type type = Type::AffineCommutator;
  S zeta{};

  static BracketKind commutator() { return {Type::AffineCommutator, S{}}; }
  static BracketKind zeta_bracket(S value) { return {Type::Zeta, std::move(value)}; }

  bool is_zeta() const { return type == Type::Zeta; }
  bool is_commutator() const { return type == Type::AffineCommutator; }

  /// "commutator" or "zeta:<ζ>", the CLI spelling.
  std::string to_string() const { return is_zeta() ? "zeta:" + zeta.to_string() : "commutator"; }
};

// Affine operations on matrices ---------------------------------------------

template <ExactScalar S>
Matrix<S> heap(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c) {
  return a - b + c;
}

/// α ▷_base b = α·b − α·base + base
template <ExactScalar S>
Matrix<S> action(const S& alpha, const Matrix<S>& base, const Matrix<S>& b) {
  base.check_compatible(b);
  if (!(alpha.context() == base.context())) fail(ErrorCode::FieldMismatch, "scalar from a different field");
  return alpha * b - alpha * base + base;
}

template <ExactScalar S>
Matrix<S> bracket(const BracketKind<S>& kind, const Matrix<S>& a, const Matrix<S>& b) {
  if (kind.is_zeta()) return action(kind.zeta, a, b);
  return a * b - b * a + b;
}

/// The matrix model of a Lie affgebra inside gl(m, F) with a fixed bracket.
template <ExactScalar S>
class MatrixAffineSpace {
 public:
  using point_type = Matrix<S>;
  using scalar_type = S;

  explicit MatrixAffineSpace(BracketKind<S> kind, Context<S> ctx = {}) : kind_(std::move(kind)), ctx_(ctx) {}

  const BracketKind<S>& kind() const { return kind_; }
  const Context<S>& context() const { return ctx_; }

  Matrix<S> heap(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c) const { return affgebra::heap(a, b, c); }
  Matrix<S> action(const S& alpha, const Matrix<S>& base, const Matrix<S>& b) const {
    return affgebra::action(alpha, base, b);
  }
  Matrix<S> bracket(const Matrix<S>& a, const Matrix<S>& b) const { return affgebra::bracket(kind_, a, b); }
  Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) const { return a * b; }
  bool equal(const Matrix<S>& a, const Matrix<S>& b) const { return a == b; }
  S scalar(long v) const { return S::from_int(v, ctx_); }

 private:
  BracketKind<S> kind_;
  Context<S> ctx_;
};

// Operations derived from heap, action and bracket --------------------------

/// ⟨a,b,c,d,e⟩; bracketing is irrelevant in an abelian heap.
template <AffineCarrier C, class P = typename C::point_type>
P heap5(const C& space, const P& a, const P& b, const P& c, const P& d, const P& e) {
  return space.heap(space.heap(a, b, c), d, e);
}

/// a + b in the retract group G(A;o).
template <AffineCarrier C, class P = typename C::point_type>
P retract_add(const C& space, const P& o, const P& a, const P& b) {
  return space.heap(a, o, b);
}

/// −a in G(A;o).
template <AffineCarrier C, class P = typename C::point_type>
P retract_neg(const C& space, const P& o, const P& a) {
  return space.heap(o, a, o);
}

/// a − b in G(A;o).
template <AffineCarrier C, class P = typename C::point_type>
P retract_sub(const C& space, const P& o, const P& a, const P& b) {
  return space.heap(a, b, o);
}

/// α·a in the vector space V(A;o).
template <AffineCarrier C, class P = typename C::point_type>
P retract_scale(const C& space, const P& o, const typename C::scalar_type& alpha, const P& a) {
  return space.action(alpha, o, a);
}

/// Translation automorphism G(A;o) → G(A;ō), a ↦ ⟨a,o,ō⟩.
template <AffineCarrier C, class P = typename C::point_type>
P translate(const C& space, const P& o, const P& obar, const P& a) {
  return space.heap(a, o, obar);
}

/// Lie algebra retract bracket [a,b]_o = ⟨[a,b],[a,o],[o,o],[o,b],o⟩.
template <AffineCarrier C, class P = typename C::point_type>
P lie_retract_bracket(const C& space, const P& o, const P& a, const P& b) {
  return heap5(space, space.bracket(a, b), space.bracket(a, o), space.bracket(o, o), space.bracket(o, b), o);
}

/// a∙b = ⟨ab, ao, o², ob, o⟩, the associative product on V(A;o).
template <MultiplicativeCarrier C, class P = typename C::point_type>
P assoc_retract_product(const C& space, const P& o, const P& a, const P& b) {
  return heap5(space, space.multiply(a, b), space.multiply(a, o), space.multiply(o, o), space.multiply(o, b), o);
}

template <ExactScalar S>
Matrix<S> lie_retract_bracket(const BracketKind<S>& kind, const Matrix<S>& o, const Matrix<S>& a, const Matrix<S>& b) {
  return lie_retract_bracket(MatrixAffineSpace<S>(kind, o.context()), o, a, b);
}

template <ExactScalar S>
Matrix<S> assoc_retract_product(const Matrix<S>& o, const Matrix<S>& a, const Matrix<S>& b) {
  return assoc_retract_product(MatrixAffineSpace<S>(BracketKind<S>::commutator(), o.context()), o, a, b);
}

/// [a,b]_v = [a,b] − b. The bracket must be idempotent; a and b serve as witnesses.
template <ExactScalar S>
Matrix<S> vector_bracket(const BracketKind<S>& kind, const Matrix<S>& a, const Matrix<S>& b) {
  for (const Matrix<S>* w : {&a, &b})
    if (!(bracket(kind, *w, *w) == *w)) fail(ErrorCode::NotIdempotent, "[w,w] != w for w = " + w->to_string());
  return bracket(kind, a, b) - b;
}

}  // namespace affgebra
