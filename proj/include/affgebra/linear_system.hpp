#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "affgebra/error.hpp"
#include "affgebra/field.hpp"
#include "affgebra/matrix.hpp"

namespace affgebra {

/// Σ coefficient·x[var] = rhs.
template <ExactScalar K>
struct LinearConstraint {
  std::vector<std::pair<std::size_t, K>> terms;
  K rhs;
  std::string label;
};

template <ExactScalar K>
struct LinearSystem {
  std::size_t num_vars = 0;
  Context<K> ctx{};
  std::vector<LinearConstraint<K>> constraints;

  void add(std::vector<std::pair<std::size_t, K>> terms, K rhs, std::string label = {}) {
    constraints.push_back({std::move(terms), std::move(rhs), std::move(label)});
  }
};

template <ExactScalar K>
struct SolutionSpace {
  std::vector<K> particular;
  std::vector<std::vector<K>> directions;
  std::size_t rank = 0;
};

/// Reduced row echelon elimination. Free variables are zero in the particular
/// solution and each free variable contributes one direction.
template <ExactScalar K>
SolutionSpace<K> solve_linear_system(const LinearSystem<K>& system) {
  const std::size_t n = system.num_vars;
  const K zero = K::from_int(0, system.ctx);
  std::vector<std::vector<K>> rows;
  rows.reserve(system.constraints.size());
  for (const auto& constraint : system.constraints) {
    std::vector<K> row(n + 1, zero);
    for (const auto& [var, coef] : constraint.terms) {
      if (var >= n) fail(ErrorCode::InvalidArgument, "constraint variable out of range");
      row[var] += coef;
    }
    row[n] = constraint.rhs;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    K scale = rows[rank][col].inverse();
    for (std::size_t c = col; c <= n; ++c) rows[rank][c] = scale * rows[rank][c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      K factor = rows[r][col];
      for (std::size_t c = col; c <= n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (!rows[r][n].is_zero()) {
      const auto& label = system.constraints.empty() ? std::string() : system.constraints[0].label;
      fail(ErrorCode::Infeasible, "inconsistent linear constraints" + (label.empty() ? "" : " (" + label + ", ...)"));
    }

  SolutionSpace<K> out;
  out.rank = rank;
  out.particular.assign(n, zero);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < rank; ++r) {
    out.particular[pivot_cols[r]] = rows[r][n];
    is_pivot[pivot_cols[r]] = true;
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> dir(n, zero);
    dir[free] = K::from_int(1, system.ctx);
    for (std::size_t r = 0; r < rank; ++r) dir[pivot_cols[r]] = -rows[r][free];
    out.directions.push_back(std::move(dir));
  }
  return out;
}

/// A particular point plus an independent spanning set of the direction space.
template <ExactScalar S>
struct AffineSubspace {
  Matrix<S> particular;
  std::vector<Matrix<S>> directions;
  bool realified = false;
  std::size_t rank = 0;

  std::size_t dimension() const { return directions.size(); }
};

/// Variable index of entry (r, c) in a matrix of size m; realified systems use
/// two variables (real, imaginary) per entry.
inline std::size_t entry_var(std::size_t m, std::size_t r, std::size_t c) { return r * m + c; }
inline std::size_t entry_var(std::size_t m, std::size_t r, std::size_t c, int part) {
  return 2 * (r * m + c) + static_cast<std::size_t>(part);
}

template <ExactScalar S>
Matrix<S> matrix_from_vector(const std::vector<S>& v, std::size_t m, const Context<S>& ctx) {
  Matrix<S> out(m, ctx);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out(r, c) = v[entry_var(m, r, c)];
  return out;
}

/// Reassembles complex matrices from realified (re, im) variable vectors.
template <ExactScalar S>
  requires(S::is_complex)
Matrix<S> matrix_from_real_vector(const std::vector<Rational>& v, std::size_t m) {
  Matrix<S> out(m, {});
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      out(r, c) = S(typename S::real_type(v[entry_var(m, r, c, 0)]), typename S::real_type(v[entry_var(m, r, c, 1)]));
  return out;
}

/// Solves a system on the entries of an m×m matrix over S.
template <ExactScalar S>
AffineSubspace<S> solve_affine_system(const LinearSystem<S>& system, std::size_t m) {
  if (system.num_vars != m * m) fail(ErrorCode::SizeMismatch, "system does not match matrix size");
  auto space = solve_linear_system(system);
  AffineSubspace<S> out{matrix_from_vector(space.particular, m, system.ctx), {}, false, space.rank};
  for (const auto& dir : space.directions) out.directions.push_back(matrix_from_vector(dir, m, system.ctx));
  return out;
}

/// Solves a realified system (2m² rational unknowns) for complex matrices over S.
template <ExactScalar S>
  requires(S::is_complex)
AffineSubspace<S> solve_affine_system_realified(const LinearSystem<Rational>& system, std::size_t m) {
  if (system.num_vars != 2 * m * m) fail(ErrorCode::SizeMismatch, "realified system does not match matrix size");
  auto space = solve_linear_system(system);
  AffineSubspace<S> out{matrix_from_real_vector<S>(space.particular, m), {}, true, space.rank};
  for (const auto& dir : space.directions) out.directions.push_back(matrix_from_real_vector<S>(dir, m));
  return out;
}

}  // namespace affgebra
