#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "affgebra/error.hpp"
#include "affgebra/field.hpp"

namespace affgebra {

/// Dense square matrix over one exact field, stored row-major.
template <ExactScalar S>
class Matrix {
 public:
  using scalar_type = S;
  using context_type = Context<S>;

  Matrix(std::size_t size, context_type ctx = {}) : size_(size), ctx_(ctx) {
    if (size == 0) fail(ErrorCode::InvalidArgument, "matrix size must be positive");
    entries_.assign(size * size, S::from_int(0, ctx));
  }

  static Matrix identity(std::size_t size, context_type ctx = {}) {
    Matrix out(size, ctx);
    for (std::size_t k = 0; k < size; ++k) out(k, k) = S::from_int(1, ctx);
    return out;
  }
  static Matrix filled(std::size_t size, const S& value) {
    Matrix out(size, value.context());
    for (auto& x : out.entries_) x = value;
    return out;
  }
  static Matrix diagonal(const std::vector<S>& diag) {
    if (diag.empty()) fail(ErrorCode::InvalidArgument, "empty diagonal");
    Matrix out(diag.size(), diag.front().context());
    for (std::size_t k = 0; k < diag.size(); ++k) out(k, k) = diag[k];
    return out;
  }
  static Matrix from_rows(const std::vector<std::vector<S>>& rows, context_type ctx = {}) {
    Matrix out(rows.size(), ctx);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) fail(ErrorCode::SizeMismatch, "matrix rows must be square");
      for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
    }
    return out;
  }

  std::size_t size() const { return size_; }
  const context_type& context() const { return ctx_; }
  std::span<const S> entries() const { return entries_; }

  S& operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }

  S zero() const { return S::from_int(0, ctx_); }
  S one() const { return S::from_int(1, ctx_); }

  void check_compatible(const Matrix& other) const {
    if (size_ != other.size_)
      fail(ErrorCode::SizeMismatch, std::to_string(size_) + "x" + std::to_string(size_) + " vs " +
                                        std::to_string(other.size_) + "x" + std::to_string(other.size_));
    if (!(ctx_ == other.ctx_)) fail(ErrorCode::FieldMismatch, "matrices over different fields");
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    return out += b;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    return out -= b;
  }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.entries_) x = -x;
    return out;
  }
  friend Matrix operator*(const S& alpha, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.entries_) x = alpha * x;
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    const std::size_t n = a.size_;
    Matrix out(n, a.ctx_);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        const S& lhs = a(r, k);
        if (lhs.is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (b(k, c).is_zero()) continue;
          out(r, c) += lhs * b(k, c);
        }
      }
    }
    return out;
  }
  Matrix& operator+=(const Matrix& b) {
    check_compatible(b);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!b.entries_[k].is_zero()) entries_[k] += b.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    check_compatible(b);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!b.entries_[k].is_zero()) entries_[k] -= b.entries_[k];
    return *this;
  }
  /// *this += alpha·b without materialising alpha·b; zero entries of b are skipped.
  Matrix& add_scaled(const S& alpha, const Matrix& b) {
    check_compatible(b);
    if (alpha.is_zero()) return *this;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!b.entries_[k].is_zero()) entries_[k] += alpha * b.entries_[k];
    return *this;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.size_ == b.size_ && a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < size_; ++r) {
      out += r == 0 ? "[" : ", [";
      for (std::size_t c = 0; c < size_; ++c) {
        if (c > 0) out += ", ";
        out += (*this)(r, c).to_string();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t size_;
  context_type ctx_;
  std::vector<S> entries_;
};

template <ExactScalar S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> out(a.size(), a.context());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(c, r) = a(r, c);
  return out;
}

/// Conjugate transpose.
template <ExactScalar S>
Matrix<S> dagger(const Matrix<S>& a) {
  Matrix<S> out(a.size(), a.context());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(c, r) = a(r, c).conj();
  return out;
}

template <ExactScalar S>
S trace(const Matrix<S>& a) {
  S acc = a.zero();
  for (std::size_t k = 0; k < a.size(); ++k) acc += a(k, k);
  return acc;
}

template <ExactScalar S>
S row_sum(const Matrix<S>& a, std::size_t r) {
  S acc = a.zero();
  for (std::size_t c = 0; c < a.size(); ++c) acc += a(r, c);
  return acc;
}

template <ExactScalar S>
S column_sum(const Matrix<S>& a, std::size_t c) {
  S acc = a.zero();
  for (std::size_t r = 0; r < a.size(); ++r) acc += a(r, c);
  return acc;
}

/// Exact Gauss-Jordan inverse; the first nonzero entry in each column is the pivot.
template <ExactScalar S>
Matrix<S> inverse(const Matrix<S>& a) {
  const std::size_t n = a.size();
  Matrix<S> work = a;
  Matrix<S> inv = Matrix<S>::identity(n, a.context());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    S scale = work(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) = scale * work(col, c);
      inv(col, c) = scale * inv(col, c);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      S factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

/// Entry-wise image of a matrix under a field embedding.
template <ExactScalar T, ExactScalar S, class Fn>
Matrix<T> map_entries(const Matrix<S>& a, Fn&& fn, Context<T> ctx) {
  Matrix<T> out(a.size(), ctx);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = fn(a(r, c));
  return out;
}

/// Same field keeps the source context (GF modulus); otherwise T's default.
template <ExactScalar T, ExactScalar S, class Fn>
Matrix<T> map_entries(const Matrix<S>& a, Fn&& fn) {
  if constexpr (std::is_same_v<T, S>) return map_entries<T>(a, std::forward<Fn>(fn), a.context());
  else return map_entries<T>(a, std::forward<Fn>(fn), Context<T>{});
}

template <ExactScalar S>
  requires SurdExtensible<S>
Matrix<SurdOf<S>> to_surd(const Matrix<S>& a) {
  return map_entries<SurdOf<S>>(a, [](const S& x) { return to_surd(x); });
}

}  // namespace affgebra
