#include <catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"

using namespace affgebra;
using testing_support::mat;
using testing_support::qmat;

namespace {

template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an affgebra::Error");
  return ErrorCode::InvalidArgument;
}

/// Classical Gram-Schmidt in doubles over the columns of P, taken in the
/// order n, n-1, ..., 1 after the constant column; columns are stored so the
/// result lines up with build_U.
std::vector<std::vector<double>> numeric_U(std::size_t n) {
  const std::size_t m = n + 1;
  const Matrix<Rational> p = build_P<Rational>(n);
  std::vector<std::vector<double>> cols(m, std::vector<double>(m));  // cols[j][r]
  std::vector<std::size_t> order{n};
  for (std::size_t k = n; k >= 1; --k) order.push_back(k - 1);
  std::vector<std::vector<double>> done;
  for (std::size_t j : order) {
    std::vector<double> v(m);
    for (std::size_t r = 0; r < m; ++r) v[r] = p(r, j).to_double();
    for (const auto& q : done) {
      double dot = 0;
      for (std::size_t r = 0; r < m; ++r) dot += q[r] * v[r];
      for (std::size_t r = 0; r < m; ++r) v[r] -= dot * q[r];
    }
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    done.push_back(v);
    cols[j] = v;
  }
  return cols;
}

}  // namespace

TEST_CASE("P and its inverse at n = 2", "[transforms]") {
  REQUIRE(build_P<Rational>(2) == qmat({{1, 1, 1}, {0, -1, 1}, {-1, 0, 1}}));
  REQUIRE(build_P_inverse<Rational>(2) ==
          mat<Rational>({{"1/3", "1/3", "-2/3"}, {"1/3", "-2/3", "1/3"}, {"1/3", "1/3", "1/3"}}));
  const auto t = build_transforms<Rational>(2);
  REQUIRE(t.P * t.P_inv == Matrix<Rational>::identity(3));
}

TEST_CASE("P is invertible exactly when n+1 is a unit", "[transforms][property]") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto p = build_P<Rational>(n);
    const auto pinv = build_P_inverse<Rational>(n);
    REQUIRE(p * pinv == Matrix<Rational>::identity(n + 1));
    REQUIRE(pinv * p == Matrix<Rational>::identity(n + 1));
    REQUIRE(inverse(p) == pinv);
  }
  const PrimeContext gf7{7};
  for (std::size_t n = 1; n <= 8; ++n) {
    INFO("GF(7) n=" << n);
    if (n == 6) {
      REQUIRE(error_of([&] { (void)build_P_inverse<PrimeFieldElement>(n, gf7); }) == ErrorCode::NonInvertibleScalar);
      REQUIRE(error_of([&] { (void)inverse(build_P<PrimeFieldElement>(n, gf7)); }) == ErrorCode::SingularMatrix);
      continue;
    }
    REQUIRE(build_P<PrimeFieldElement>(n, gf7) * build_P_inverse<PrimeFieldElement>(n, gf7) ==
            Matrix<PrimeFieldElement>::identity(n + 1, gf7));
  }
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{5, 4}, {3, 2}, {2, 1}}) {
    const PrimeContext ctx{p};
    REQUIRE(error_of([&] { (void)inverse(build_P<PrimeFieldElement>(n, ctx)); }) == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("structure of P", "[transforms]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = build_P<Rational>(n);
    const auto pinv = build_P_inverse<Rational>(n);
    for (std::size_t r = 0; r <= n; ++r) REQUIRE(p(r, n) == Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
      REQUIRE(column_sum(p, k).is_zero());
      REQUIRE(row_sum(pinv, k).is_zero());
    }
    // Conjugating the corner diag(0,...,0,c) back gives (c/(n+1))J.
    const Rational c(5, 2);
    Matrix<Rational> corner(n + 1);
    corner(n, n) = c;
    REQUIRE(p * corner * pinv == Matrix<Rational>::filled(n + 1, c / Rational(static_cast<long>(n + 1))));
  }
}

TEST_CASE("U is orthogonal in exact surd arithmetic", "[transforms]") {
  REQUIRE(build_U(1) == mat<SurdReal>({{"1/2*sqrt(2)", "1/2*sqrt(2)"}, {"-1/2*sqrt(2)", "1/2*sqrt(2)"}}));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto u = build_U(n);
    REQUIRE(transpose(u) * u == Matrix<SurdReal>::identity(n + 1));
    REQUIRE(u * transpose(u) == Matrix<SurdReal>::identity(n + 1));
    const auto oracle = numeric_U(n);
    for (std::size_t r = 0; r <= n; ++r)
      for (std::size_t c = 0; c <= n; ++c) REQUIRE(std::abs(u(r, c).to_double() - oracle[c][r]) < 1e-12);
  }
}

TEST_CASE("shift map between ga_c families", "[transforms][property]") {
  const Rational c(2), c2(-1, 3);
  const auto source = MatrixClassSpec<Rational>::ga_c(c, 2);
  const auto target = MatrixClassSpec<Rational>::ga_c(c2, 2);
  const ClassModel<Rational> model(source);
  const auto kind = BracketKind<Rational>::commutator();
  for (std::uint64_t i = 0; i < 30; ++i) {
    SampleRng rng(21, i);
    const auto a = model.sample(rng), b = model.sample(rng), d = model.sample(rng);
    const Rational alpha = model.sample_scalar(rng);
    auto f = [&](const Matrix<Rational>& m) { return shift_map(c, c2, m); };
    REQUIRE(contains(target, f(a)));
    REQUIRE(shift_map(c2, c, f(a)) == a);
    REQUIRE(f(heap(a, b, d)) == heap(f(a), f(b), f(d)));
    REQUIRE(f(action(alpha, a, b)) == action(alpha, f(a), f(b)));
    REQUIRE(f(bracket(kind, a, b)) == bracket(kind, f(a), f(b)));
  }
  REQUIRE(error_of([] { (void)shift_map(Rational(2), Rational(1), Matrix<Rational>::identity(3)); }) ==
          ErrorCode::ClassViolation);
}

TEST_CASE("block targets", "[transforms]") {
  const auto gna = block_target(MatrixClassSpec<Rational>(ClassKind::GNA, 2));
  REQUIRE(gna.kind == BlockKind::GL);
  REQUIRE(gna.base_block == mat<Rational>({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}));
  const auto sna = block_target(MatrixClassSpec<Rational>(ClassKind::SNA, 2));
  REQUIRE(sna.kind == BlockKind::SL);
  REQUIRE(sna.base_block == mat<Rational>({{"-1/2", "0", "0"}, {"0", "-1/2", "0"}, {"0", "0", "1"}}));
  REQUIRE(block_target(MatrixClassSpec<Rational>(ClassKind::ONA, 3)).base_block == Matrix<Rational>::identity(4));
  REQUIRE(block_target(MatrixClassSpec<GaussianRational>(ClassKind::SUNA, 2)).kind == BlockKind::SU);

  // The base block commutes with every block-algebra element.
  auto commutes = []<class S>(const MatrixClassSpec<S>& spec) {
    const auto target = block_target(spec);
    const auto algebra = solve_block_algebra(target);
    for (std::uint64_t i = 0; i < 20; ++i) {
      SampleRng rng(4, i);
      const auto x = sample_block_algebra(algebra, rng, SampleBounds{});
      REQUIRE(x * target.base_block == target.base_block * x);
      REQUIRE_FALSE(block_violation(target, target.base_block + x).has_value());
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    commutes(MatrixClassSpec<Rational>(ClassKind::GNA, n));
    commutes(MatrixClassSpec<Rational>(ClassKind::SNA, n));
    commutes(MatrixClassSpec<Rational>(ClassKind::ONA, n));
    commutes(MatrixClassSpec<GaussianRational>(ClassKind::UNA, n));
    commutes(MatrixClassSpec<GaussianRational>(ClassKind::SUNA, n));
  }
}

TEST_CASE("conjugation lands in the block target and inverts", "[transforms][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const MatrixClassSpec<Rational> sna(ClassKind::SNA, n);
    const ClassModel<Rational> model(sna);
    const auto conj = conjugator_P(sna);
    for (std::uint64_t i = 0; i < 10; ++i) {
      const auto a = model.sample(8, i);
      const auto image = conjugate_to_blocks_P(sna, a);
      REQUIRE(conj.backward(image) == a);
    }

    const MatrixClassSpec<GaussianRational> una(ClassKind::UNA, n);
    const ClassModel<GaussianRational> umodel(una);
    const auto uconj = conjugator_U(una);
    for (std::uint64_t i = 0; i < 5; ++i) {
      const auto a = umodel.sample(8, i);
      const auto image = conjugate_to_blocks_U(una, a);
      REQUIRE(uconj.backward(image) == uconj.lift(a));
    }
  }
  REQUIRE(error_of([] { (void)conjugator_P(MatrixClassSpec<Rational>(ClassKind::ONA, 2)); }) == ErrorCode::InvalidArgument);
  REQUIRE(error_of([] { (void)conjugate_to_blocks_P(MatrixClassSpec<Rational>(ClassKind::GNA, 2), Rational(2) * Matrix<Rational>::identity(3)); }) ==
          ErrorCode::ClassViolation);
}
