#pragma once

// Closed-form similarity transformations that carry each matrix class onto a
// block form  base_block + (classical algebra in the top-left n×n block).

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "affgebra/affine.hpp"
#include "affgebra/error.hpp"
#include "affgebra/field.hpp"
#include "affgebra/linear_system.hpp"
#include "affgebra/matrix.hpp"
#include "affgebra/matrix_classes.hpp"
#include "affgebra/random.hpp"

namespace affgebra {

/// Row 0 is all ones; row i ≥ 1 has -1 in column n-i and 1 in the last column.
template <ExactScalar S>
Matrix<S> build_P(std::size_t n, const Context<S>& ctx = {}) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  Matrix<S> out(n + 1, ctx);
  const S one = S::from_int(1, ctx);
  for (std::size_t c = 0; c <= n; ++c) out(0, c) = one;
  for (std::size_t i = 1; i <= n; ++i) {
    out(i, n - i) = -one;
    out(i, n) = one;
  }
  return out;
}

/// (1/(n+1))·M with M row i < n equal to ones except -n in column n-i, and a last row of ones.
template <ExactScalar S>
Matrix<S> build_P_inverse(std::size_t n, const Context<S>& ctx = {}) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  const S scale = invert_integer<S>(static_cast<long>(n + 1), ctx);
  const S minus_n = S::from_int(-static_cast<long>(n), ctx);
  Matrix<S> out = Matrix<S>::filled(n + 1, scale);
  for (std::size_t i = 0; i < n; ++i) out(i, n - i) = scale * minus_n;
  return out;
}

/// Orthogonal matrix from Gram-Schmidt on the columns of P, last column first.
/// Column j < n is supported on rows 0..n-j; its last nonzero entry is
/// -sqrt((n-j)/(n+1-j)) and the ones above it are 1/sqrt((n+1-j)(n-j)).
inline Matrix<SurdReal> build_U(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  Matrix<SurdReal> out(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const auto upper = static_cast<long>(n + 1 - j);  // n+2-j in 1-based column numbering
    const auto lower = static_cast<long>(n - j);
    const SurdReal head = SurdReal::sqrt(Rational(1, upper * lower));
    for (std::size_t r = 0; r < n - j; ++r) out(r, j) = head;
    out(n - j, j) = -SurdReal::sqrt(Rational(lower, upper));
  }
  const SurdReal last = SurdReal::sqrt(Rational(1, static_cast<long>(n + 1)));
  for (std::size_t r = 0; r <= n; ++r) out(r, n) = last;
  return out;
}

template <ExactScalar S>
struct TransformMatrices {
  Matrix<S> P;
  Matrix<S> P_inv;
  Matrix<SurdReal> U;
};

template <ExactScalar S>
TransformMatrices<S> build_transforms(std::size_t n, const Context<S>& ctx = {}) {
  return {build_P<S>(n, ctx), build_P_inverse<S>(n, ctx), build_U(n)};
}

/// ga_c → ga_{c'}, a ↦ a + (c' - c)I.
template <ExactScalar S>
Matrix<S> shift_map(const S& c, const S& c_prime, const Matrix<S>& m) {
  if (m.size() < 2) fail(ErrorCode::SizeMismatch, "ga_c needs matrices of size at least 2");
  auto source = MatrixClassSpec<S>::ga_c(c, m.size() - 1);
  if (auto why = class_violation(source, m)) fail(ErrorCode::ClassViolation, source.name() + ": " + *why);
  return m + (c_prime - c) * Matrix<S>::identity(m.size(), m.context());
}

// Block targets --------------------------------------------------------------

enum class BlockKind { GL, SL, O, U, SU };

inline std::string block_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::GL: return "gl";
    case BlockKind::SL: return "sl";
    case BlockKind::O: return "o";
    case BlockKind::U: return "u";
    case BlockKind::SU: return "su";
  }
  return "?";
}

/// base_block + (classical algebra in the top-left n×n block, zero elsewhere).
template <ExactScalar S>
struct BlockTarget {
  std::size_t n = 1;
  BlockKind kind = BlockKind::GL;
  Matrix<S> base_block;

  template <ExactScalar T>
  BlockTarget<T> lift() const {
    return {n, kind, map_entries<T>(base_block, [](const S& x) { return T(x); })};
  }

  std::string description() const { return base_block.to_string() + " + (" + block_name(kind) + "(" + std::to_string(n) + ") 0; 0 0)"; }
};

template <ExactScalar S>
BlockTarget<S> block_target(const MatrixClassSpec<S>& spec) {
  const std::size_t size = spec.size();
  BlockTarget<S> out{spec.n, BlockKind::GL, Matrix<S>(size, spec.ctx)};
  const S sum = spec.normalisation();
  if (spec.kind == ClassKind::ONA) {
    out.kind = BlockKind::O;
    out.base_block = Matrix<S>::identity(size, spec.ctx);
    return out;
  }
  const bool hermitian = is_hermitian_kind(spec.kind);
  if (spec.requires_zero_trace()) {
    out.kind = hermitian ? BlockKind::SU : BlockKind::SL;
    S off = -(sum * invert_integer<S>(static_cast<long>(spec.n), spec.ctx));
    for (std::size_t k = 0; k < spec.n; ++k) out.base_block(k, k) = off;
  } else {
    out.kind = hermitian ? BlockKind::U : BlockKind::GL;
  }
  out.base_block(spec.n, spec.n) = sum;
  return out;
}

/// First violated condition of block-target membership, or nullopt.
template <ExactScalar T>
std::optional<std::string> block_violation(const BlockTarget<T>& target, const Matrix<T>& m) {
  const std::size_t n = target.n;
  if (m.size() != n + 1) fail(ErrorCode::SizeMismatch, "block target expects size " + std::to_string(n + 1));
  const Matrix<T> d = m - target.base_block;
  for (std::size_t k = 0; k <= n; ++k) {
    if (!d(n, k).is_zero()) return "last row differs from base block at column " + std::to_string(k);
    if (!d(k, n).is_zero()) return "last column differs from base block at row " + std::to_string(k);
  }
  if (target.kind == BlockKind::SL || target.kind == BlockKind::SU) {
    if (!trace(d).is_zero()) return "block is not traceless";
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      if (target.kind == BlockKind::O && !(d(k, l) == -d(l, k)))
        return "block is not antisymmetric at (" + std::to_string(k) + "," + std::to_string(l) + ")";
      if ((target.kind == BlockKind::U || target.kind == BlockKind::SU) && !(d(k, l) == -d(l, k).conj()))
        return "block is not anti-hermitian at (" + std::to_string(k) + "," + std::to_string(l) + ")";
    }
  }
  return std::nullopt;
}

/// The classical Lie algebra in the top-left block, as a solved linear space.
template <ExactScalar S>
AffineSubspace<S> solve_block_algebra(const BlockTarget<S>& target) {
  const std::size_t m = target.n + 1;
  const std::size_t n = target.n;
  const bool hermitian = target.kind == BlockKind::U || target.kind == BlockKind::SU;
  const bool traceless = target.kind == BlockKind::SL || target.kind == BlockKind::SU;
  const Context<S> ctx = target.base_block.context();
  if (hermitian) {
    if constexpr (S::is_complex && S::tag == FieldTag::Qi) {
      LinearSystem<Rational> sys;
      sys.num_vars = 2 * m * m;
      const Rational one(1);
      for (int part = 0; part < 2; ++part) {
        for (std::size_t k = 0; k < m; ++k) {
          sys.add({{entry_var(m, n, k, part), one}}, Rational(0), "last row");
          if (k < n) sys.add({{entry_var(m, k, n, part), one}}, Rational(0), "last column");
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k; l < n; ++l) {
          sys.add({{entry_var(m, k, l, 0), one}, {entry_var(m, l, k, 0), one}}, Rational(0), "anti-hermitian");
          if (k != l)
            sys.add({{entry_var(m, k, l, 1), one}, {entry_var(m, l, k, 1), Rational(-1)}}, Rational(0), "anti-hermitian");
        }
      }
      if (traceless) {
        for (int part = 0; part < 2; ++part) {
          std::vector<std::pair<std::size_t, Rational>> terms;
          for (std::size_t k = 0; k < n; ++k) terms.emplace_back(entry_var(m, k, k, part), one);
          sys.add(std::move(terms), Rational(0), "trace");
        }
      }
      return solve_affine_system_realified<S>(sys, m);
    } else {
      fail(ErrorCode::UnsupportedField, "anti-hermitian blocks are sampled over Qi only");
    }
  } else {
    if constexpr (S::tag == FieldTag::Surd || S::tag == FieldTag::SurdComplex) {
      fail(ErrorCode::UnsupportedField, "block algebras are sampled over Q, Qi or GF");
    } else {
      LinearSystem<S> sys;
      sys.num_vars = m * m;
      sys.ctx = ctx;
      const S one = S::from_int(1, ctx);
      const S zero = S::from_int(0, ctx);
      for (std::size_t k = 0; k < m; ++k) {
        sys.add({{entry_var(m, n, k), one}}, zero, "last row");
        if (k < n) sys.add({{entry_var(m, k, n), one}}, zero, "last column");
      }
      if (traceless) {
        std::vector<std::pair<std::size_t, S>> terms;
        for (std::size_t k = 0; k < n; ++k) terms.emplace_back(entry_var(m, k, k), one);
        sys.add(std::move(terms), zero, "trace");
      }
      if (target.kind == BlockKind::O) {
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = k; l < n; ++l) sys.add({{entry_var(m, k, l), one}, {entry_var(m, l, k), one}}, zero, "antisymmetry");
      }
      return solve_affine_system(sys, m);
    }
  }
}

/// Random element of the block algebra (base block not added).
template <ExactScalar S>
Matrix<S> sample_block_algebra(const AffineSubspace<S>& algebra, SampleRng& rng, const SampleBounds& bounds) {
  Matrix<S> out = algebra.particular;
  for (const auto& dir : algebra.directions) {
    S coef = random_scalar<S>(rng, out.context(), bounds, algebra.realified);
    out.add_scaled(coef, dir);
  }
  return out;
}

// Conjugation ----------------------------------------------------------------

enum class Via { P, U };

inline std::string via_name(Via via) { return via == Via::P ? "P" : "U"; }
inline Via parse_via(std::string_view s) {
  if (s == "P") return Via::P;
  if (s == "U") return Via::U;
  fail(ErrorCode::InvalidArgument, "--via must be P or U");
}

/// Class-to-block isomorphism f(a) = M⁻¹·a·M with M = P (over S) or M = U (over the surd extension).
template <ExactScalar S, ExactScalar T>
class Conjugator {
 public:
  Conjugator(Matrix<T> forward_left, Matrix<T> forward_right) : left_(std::move(forward_left)), right_(std::move(forward_right)) {}

  static T lift(const S& x) {
    if constexpr (std::is_same_v<S, T>) return x;
    else return T(x);
  }
  static Matrix<T> lift(const Matrix<S>& m) {
    if constexpr (std::is_same_v<S, T>) return m;
    else return map_entries<T>(m, [](const S& x) { return T(x); });
  }

  /// class → block: M⁻¹·a·M
  Matrix<T> forward(const Matrix<S>& a) const { return left_ * lift(a) * right_; }
  Matrix<T> forward_lifted(const Matrix<T>& a) const { return left_ * a * right_; }
  /// block → class: M·x·M⁻¹
  Matrix<T> backward(const Matrix<T>& x) const { return right_ * x * left_; }

  const Matrix<T>& left() const { return left_; }
  const Matrix<T>& right() const { return right_; }

 private:
  Matrix<T> left_;   // M⁻¹
  Matrix<T> right_;  // M
};

template <ExactScalar S>
Conjugator<S, S> conjugator_P(const MatrixClassSpec<S>& spec) {
  if (requires_unitary(spec.kind))
    fail(ErrorCode::InvalidArgument, "conjugation by P does not preserve " + class_name(spec.kind) + "; use U");
  return {build_P_inverse<S>(spec.n, spec.ctx), build_P<S>(spec.n, spec.ctx)};
}

template <ExactScalar S>
  requires SurdExtensible<S>
Conjugator<S, SurdOf<S>> conjugator_U(const MatrixClassSpec<S>& spec) {
  using T = SurdOf<S>;
  Matrix<SurdReal> u = build_U(spec.n);
  auto as_target = [](const SurdReal& x) { return T(x); };
  Matrix<T> ut = map_entries<T>(transpose(u), as_target);
  Matrix<T> um = map_entries<T>(u, as_target);
  return {std::move(ut), std::move(um)};
}

/// f(a) = P⁻¹·a·P, checked to land in the block target.
template <ExactScalar S>
Matrix<S> conjugate_to_blocks_P(const MatrixClassSpec<S>& spec, const Matrix<S>& m) {
  if (auto why = class_violation(spec, m)) fail(ErrorCode::ClassViolation, spec.name() + ": " + *why);
  auto image = conjugator_P(spec).forward(m);
  if (auto why = block_violation(block_target(spec), image)) fail(ErrorCode::ClassViolation, "image not in block target: " + *why);
  return image;
}

/// g(a) = U†·a·U over the surd extension, checked to land in the block target.
template <ExactScalar S>
  requires SurdExtensible<S>
Matrix<SurdOf<S>> conjugate_to_blocks_U(const MatrixClassSpec<S>& spec, const Matrix<S>& m) {
  if (auto why = class_violation(spec, m)) fail(ErrorCode::ClassViolation, spec.name() + ": " + *why);
  auto image = conjugator_U(spec).forward(m);
  auto target = block_target(spec).template lift<SurdOf<S>>();
  if (auto why = block_violation(target, image)) fail(ErrorCode::ClassViolation, "image not in block target: " + *why);
  return image;
}

/// The same class over a larger field T.
template <ExactScalar T, ExactScalar S>
MatrixClassSpec<T> lift_spec(const MatrixClassSpec<S>& spec) {
  if constexpr (std::is_same_v<T, S>) return spec;
  if (spec.kind == ClassKind::GA_C) return MatrixClassSpec<T>::ga_c(T(spec.c), spec.n, spec.traceless);
  return MatrixClassSpec<T>(spec.kind, spec.n);
}

}  // namespace affgebra
