#pragma once

// The normalised affine matrix classes of size (n+1)×(n+1):
//
//   ga_c  all row and column sums equal c
//   gna   ga_1
//   sna   gna with zero trace
//   ona   gna over a real field, unit diagonal, a_kl = -a_lk off the diagonal
//   una   row/column sums i, anti-hermitian
//   suna  una with zero trace

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "affgebra/error.hpp"
#include "affgebra/field.hpp"
#include "affgebra/json_io.hpp"
#include "affgebra/linear_system.hpp"
#include "affgebra/matrix.hpp"
#include "affgebra/random.hpp"

namespace affgebra {

enum class ClassKind { GA_C, GNA, SNA, ONA, UNA, SUNA };

inline std::string class_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::GA_C: return "ga_c";
    case ClassKind::GNA: return "gna";
    case ClassKind::SNA: return "sna";
    case ClassKind::ONA: return "ona";
    case ClassKind::UNA: return "una";
    case ClassKind::SUNA: return "suna";
  }
  return "?";
}

inline ClassKind parse_class_kind(std::string_view name) {
  if (name == "ga_c") return ClassKind::GA_C;
  if (name == "gna") return ClassKind::GNA;
  if (name == "sna") return ClassKind::SNA;
  if (name == "ona") return ClassKind::ONA;
  if (name == "una") return ClassKind::UNA;
  if (name == "suna") return ClassKind::SUNA;
  fail(ErrorCode::InvalidArgument, "unknown matrix class '" + std::string(name) + "'");
}

inline bool is_hermitian_kind(ClassKind kind) { return kind == ClassKind::UNA || kind == ClassKind::SUNA; }

/// Classes whose defining conditions are not preserved by conjugation with P.
inline bool requires_unitary(ClassKind kind) { return kind == ClassKind::ONA || is_hermitian_kind(kind); }

template <ExactScalar S>
S invert_integer(long k, const Context<S>& ctx) {
  S value = S::from_int(k, ctx);
  if (value.is_zero())
    fail(ErrorCode::NonInvertibleScalar,
         std::to_string(k) + " is not invertible in " + describe<S>(ctx).to_string());
  return value.inverse();
}

template <ExactScalar S>
struct MatrixClassSpec {
  ClassKind kind = ClassKind::GNA;
  std::size_t n = 1;
  Context<S> ctx{};
  S c = S::from_int(1, ctx);  // row/column sum, GA_C only
  bool traceless = false;     // GA_C only: the traceless part (sa_c)

  MatrixClassSpec() = default;
  MatrixClassSpec(ClassKind kind_, std::size_t n_, Context<S> ctx_ = {}) : kind(kind_), n(n_), ctx(ctx_) {
    c = S::from_int(1, ctx);
    validate();
  }
  static MatrixClassSpec ga_c(S c_value, std::size_t n_, bool traceless_ = false) {
    MatrixClassSpec spec;
    spec.kind = ClassKind::GA_C;
    spec.n = n_;
    spec.ctx = c_value.context();
    spec.c = std::move(c_value);
    spec.traceless = traceless_;
    spec.validate();
    return spec;
  }

  std::size_t size() const { return n + 1; }
  FieldDesc field() const { return describe<S>(ctx); }

  void validate() const {
    if (n == 0) fail(ErrorCode::InvalidArgument, "class size n must be positive");
    constexpr FieldTag tag = S::tag;
    if (kind == ClassKind::ONA && tag != FieldTag::Q && tag != FieldTag::Surd)
      fail(ErrorCode::UnsupportedField, "ona needs a real field (Q or surd), got " + field().to_string());
    if (is_hermitian_kind(kind) && tag != FieldTag::Qi && tag != FieldTag::SurdComplex)
      fail(ErrorCode::UnsupportedField, class_name(kind) + " needs a complex field (Qi or surd_c), got " + field().to_string());
    if (traceless && kind != ClassKind::GA_C) fail(ErrorCode::InvalidArgument, "traceless flag applies to ga_c only");
  }

  /// Row and column sum of every member.
  S normalisation() const {
    if (kind == ClassKind::GA_C) return c;
    if constexpr (S::is_complex) {
      if (is_hermitian_kind(kind)) return S::imag_unit(ctx);
    }
    return S::from_int(1, ctx);
  }

  bool requires_zero_trace() const {
    return kind == ClassKind::SNA || kind == ClassKind::SUNA || (kind == ClassKind::GA_C && traceless);
  }

  /// UNA/SUNA are real affine spaces: actions and ζ must be real.
  bool real_scalars_only() const { return is_hermitian_kind(kind); }

  std::string name() const {
    std::string base = kind == ClassKind::GA_C ? (traceless ? "sa_" : "ga_") + c.to_string() : class_name(kind);
    if (kind == ClassKind::ONA || is_hermitian_kind(kind)) return base + "(" + std::to_string(n) + ")";
    return base + "(" + std::to_string(n) + "," + field().to_string() + ")";
  }

  Json to_json() const {
    Json out = Json::object();
    out["kind"] = class_name(kind);
    out["n"] = n;
    Json f = field_json<S>(ctx);
    for (auto& [key, value] : f.items()) out[key] = value;
    if (kind == ClassKind::GA_C) out["c"] = c.to_string();
    if (traceless) out["traceless"] = true;
    return out;
  }

  static MatrixClassSpec from_json(const Json& j, const Context<S>& ctx) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n"))
      fail(ErrorCode::ParseError, "class spec needs \"kind\" and \"n\"");
    ClassKind kind = parse_class_kind(j["kind"].get<std::string>());
    auto n = j["n"].get<std::size_t>();
    if (kind == ClassKind::GA_C) {
      S c = j.contains("c") ? parse_scalar<S>(j["c"].get<std::string>(), ctx) : S::from_int(1, ctx);
      return ga_c(std::move(c), n, j.value("traceless", false));
    }
    return MatrixClassSpec(kind, n, ctx);
  }
};

/// The first defining equation violated by `m`, or nullopt when m is a member.
template <ExactScalar S>
std::optional<std::string> class_violation(const MatrixClassSpec<S>& spec, const Matrix<S>& m) {
  const std::size_t size = spec.size();
  if (m.size() != size)
    fail(ErrorCode::SizeMismatch, spec.name() + " needs " + std::to_string(size) + "x" + std::to_string(size) +
                                      " matrices, got " + std::to_string(m.size()));
  if (!(m.context() == spec.ctx)) fail(ErrorCode::FieldMismatch, "matrix field differs from " + spec.name());
  const S target = spec.normalisation();
  for (std::size_t l = 0; l < size; ++l) {
    if (!(row_sum(m, l) == target)) return "row " + std::to_string(l) + " sums to " + row_sum(m, l).to_string() + ", not " + target.to_string();
    if (!(column_sum(m, l) == target)) return "column " + std::to_string(l) + " sums to " + column_sum(m, l).to_string() + ", not " + target.to_string();
  }
  if (spec.requires_zero_trace() && !trace(m).is_zero()) return "trace is " + trace(m).to_string() + ", not 0";
  if (spec.kind == ClassKind::ONA) {
    for (std::size_t k = 0; k < size; ++k) {
      if (!(m(k, k) == m.one())) return "diagonal entry " + std::to_string(k) + " is not 1";
      for (std::size_t l = k + 1; l < size; ++l)
        if (!(m(k, l) == -m(l, k))) return "entries (" + std::to_string(k) + "," + std::to_string(l) + ") not antisymmetric";
    }
  }
  if (is_hermitian_kind(spec.kind)) {
    for (std::size_t k = 0; k < size; ++k)
      for (std::size_t l = k; l < size; ++l)
        if (!(m(k, l) == -m(l, k).conj())) return "entries (" + std::to_string(k) + "," + std::to_string(l) + ") not anti-hermitian";
  }
  return std::nullopt;
}

template <ExactScalar S>
bool contains(const MatrixClassSpec<S>& spec, const Matrix<S>& m) {
  return !class_violation(spec, m).has_value();
}

/// A matrix certified to lie in its class.
template <ExactScalar S>
class ClassElement {
 public:
  ClassElement(MatrixClassSpec<S> spec, Matrix<S> value) : spec_(std::move(spec)), value_(std::move(value)) {
    if (auto why = class_violation(spec_, value_)) fail(ErrorCode::ClassViolation, spec_.name() + ": " + *why);
  }
  const MatrixClassSpec<S>& spec() const { return spec_; }
  const Matrix<S>& value() const { return value_; }

 private:
  MatrixClassSpec<S> spec_;
  Matrix<S> value_;
};

/// Canonical member: (c/(n+1))J for ga_c/gna/una, (s/n)(J - I) for sna/suna, I for ona.
template <ExactScalar S>
ClassElement<S> base_point(const MatrixClassSpec<S>& spec) {
  const std::size_t size = spec.size();
  const auto n = static_cast<long>(spec.n);
  const S sum = spec.normalisation();
  Matrix<S> out(size, spec.ctx);
  if (spec.kind == ClassKind::ONA) {
    out = Matrix<S>::identity(size, spec.ctx);
  } else if (spec.requires_zero_trace()) {
    S off = sum * invert_integer<S>(n, spec.ctx);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c)
        if (r != c) out(r, c) = off;
  } else {
    out = Matrix<S>::filled(size, sum * invert_integer<S>(n + 1, spec.ctx));
  }
  return ClassElement<S>(spec, std::move(out));
}

/// Defining equations as a linear system; hermitian classes are realified.
template <ExactScalar S>
struct ClassConstraints {
  bool realified = false;
  LinearSystem<S> system;
  LinearSystem<Rational> real_system;
};

template <ExactScalar S>
ClassConstraints<S> constraint_system(const MatrixClassSpec<S>& spec) {
  if constexpr (S::tag == FieldTag::Surd || S::tag == FieldTag::SurdComplex) {
    fail(ErrorCode::UnsupportedField, "constraint solving over surd fields is not supported (" + spec.name() + ")");
  } else {
    const std::size_t m = spec.size();
    ClassConstraints<S> out;
    if (is_hermitian_kind(spec.kind)) {
      if constexpr (S::is_complex) {
        out.realified = true;
        auto& sys = out.real_system;
        sys.num_vars = 2 * m * m;
        const S target = spec.normalisation();
        const Rational one(1);
        for (int part = 0; part < 2; ++part) {
          const Rational rhs = part == 0 ? target.re() : target.im();
          for (std::size_t l = 0; l < m; ++l) {
            std::vector<std::pair<std::size_t, Rational>> row_terms;
            std::vector<std::pair<std::size_t, Rational>> col_terms;
            for (std::size_t k = 0; k < m; ++k) {
              row_terms.emplace_back(entry_var(m, l, k, part), one);
              col_terms.emplace_back(entry_var(m, k, l, part), one);
            }
            sys.add(std::move(row_terms), rhs, "row sum");
            sys.add(std::move(col_terms), rhs, "column sum");
          }
        }
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t l = k; l < m; ++l) {
            // a_kl = -conj(a_lk): re parts cancel, imaginary parts agree.
            sys.add({{entry_var(m, k, l, 0), one}, {entry_var(m, l, k, 0), one}}, Rational(0), "anti-hermitian");
            if (k != l)
              sys.add({{entry_var(m, k, l, 1), one}, {entry_var(m, l, k, 1), Rational(-1)}}, Rational(0), "anti-hermitian");
          }
        }
        if (spec.requires_zero_trace()) {
          for (int part = 0; part < 2; ++part) {
            std::vector<std::pair<std::size_t, Rational>> terms;
            for (std::size_t k = 0; k < m; ++k) terms.emplace_back(entry_var(m, k, k, part), one);
            sys.add(std::move(terms), Rational(0), "trace");
          }
        }
      }
      return out;
    }

    auto& sys = out.system;
    sys.num_vars = m * m;
    sys.ctx = spec.ctx;
    const S one = S::from_int(1, spec.ctx);
    const S zero = S::from_int(0, spec.ctx);
    const S target = spec.normalisation();
    for (std::size_t l = 0; l < m; ++l) {
      std::vector<std::pair<std::size_t, S>> row_terms;
      std::vector<std::pair<std::size_t, S>> col_terms;
      for (std::size_t k = 0; k < m; ++k) {
        row_terms.emplace_back(entry_var(m, l, k), one);
        col_terms.emplace_back(entry_var(m, k, l), one);
      }
      sys.add(std::move(row_terms), target, "row sum");
      sys.add(std::move(col_terms), target, "column sum");
    }
    if (spec.requires_zero_trace()) {
      std::vector<std::pair<std::size_t, S>> terms;
      for (std::size_t k = 0; k < m; ++k) terms.emplace_back(entry_var(m, k, k), one);
      sys.add(std::move(terms), zero, "trace");
    }
    if (spec.kind == ClassKind::ONA) {
      for (std::size_t k = 0; k < m; ++k) {
        sys.add({{entry_var(m, k, k), one}}, one, "unit diagonal");
        for (std::size_t l = k + 1; l < m; ++l)
          sys.add({{entry_var(m, k, l), one}, {entry_var(m, l, k), one}}, zero, "antisymmetry");
      }
    }
    return out;
  }
}

template <ExactScalar S>
AffineSubspace<S> solve_class(const MatrixClassSpec<S>& spec) {
  auto constraints = constraint_system(spec);
  if constexpr (S::is_complex && S::tag == FieldTag::Qi) {
    if (constraints.realified) return solve_affine_system_realified<S>(constraints.real_system, spec.size());
  }
  return solve_affine_system(constraints.system, spec.size());
}

/// Solved parameterisation of a class, reused across samples.
template <ExactScalar S>
class ClassModel {
 public:
  explicit ClassModel(MatrixClassSpec<S> spec, SampleBounds bounds = {})
      : spec_(std::move(spec)), base_(base_point(spec_)), space_(solve_class(spec_)), bounds_(bounds) {}

  const MatrixClassSpec<S>& spec() const { return spec_; }
  const Matrix<S>& base() const { return base_.value(); }
  const AffineSubspace<S>& subspace() const { return space_; }
  const SampleBounds& bounds() const { return bounds_; }
  std::size_t dimension() const { return space_.dimension(); }

  /// Particular solution plus a random exact combination of the directions.
  Matrix<S> sample(SampleRng& rng) const {
    Matrix<S> out = space_.particular;
    for (const auto& dir : space_.directions) {
      S coef = random_scalar<S>(rng, spec_.ctx, bounds_, space_.realified);
      out.add_scaled(coef, dir);
    }
    return out;
  }

  Matrix<S> sample(std::uint64_t seed, std::uint64_t index) const {
    SampleRng rng(seed, index);
    return sample(rng);
  }

  /// A scalar suitable for the class's affine action.
  S sample_scalar(SampleRng& rng) const { return random_scalar<S>(rng, spec_.ctx, bounds_, spec_.real_scalars_only()); }

 private:
  MatrixClassSpec<S> spec_;
  ClassElement<S> base_;
  AffineSubspace<S> space_;
  SampleBounds bounds_;
};

template <ExactScalar S>
ClassElement<S> sample(const MatrixClassSpec<S>& spec, std::uint64_t seed, std::uint64_t index) {
  ClassModel<S> model(spec);
  return ClassElement<S>(spec, model.sample(seed, index));
}

template <ExactScalar S>
std::size_t dimension(const MatrixClassSpec<S>& spec) {
  base_point(spec);
  return solve_class(spec).dimension();
}

}  // namespace affgebra
