#pragma once

#include <string>
#include <vector>

#include "affgebra/affgebra.hpp"

namespace testing_support {

using namespace affgebra;

/// Matrix from rows of scalar strings, parsed in the target field.
template <ExactScalar S>
Matrix<S> mat(const std::vector<std::vector<std::string>>& rows, Context<S> ctx = {}) {
  Matrix<S> out(rows.size(), ctx);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = parse_scalar<S>(rows[r][c], ctx);
  return out;
}

inline Matrix<Rational> qmat(const std::vector<std::vector<long>>& rows) {
  Matrix<Rational> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = Rational(rows[r][c]);
  return out;
}

using IntMatrix = std::vector<std::vector<long long>>;

/// Plain integer product, used as an oracle independent of Matrix<S>.
inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Matrix<Rational> from_int(const IntMatrix& m) {
  Matrix<Rational> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = Rational(static_cast<long>(m[r][c]));
  return out;
}

}  // namespace testing_support
