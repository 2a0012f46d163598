#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace affgebra;
using testing_support::from_int;
using testing_support::int_mul;
using testing_support::IntMatrix;
using testing_support::qmat;

namespace {

IntMatrix int_add(const IntMatrix& a, const IntMatrix& b, long long sign = 1) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += sign * b[i][j];
  return out;
}

const IntMatrix kCycle{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
const IntMatrix kSwap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};

/// The affine line over a field: points and scalars are the same numbers.
/// Not a matrix model, so it exercises the carrier-generic code paths.
template <ExactScalar S>
struct AffineLine {
  using point_type = S;
  using scalar_type = S;
  Context<S> ctx{};
  S zeta = S::from_int(2, ctx);

  S heap(const S& a, const S& b, const S& c) const { return a - b + c; }
  S action(const S& alpha, const S& base, const S& b) const { return alpha * b - alpha * base + base; }
  S bracket(const S& a, const S& b) const { return action(zeta, a, b); }
  S multiply(const S& a, const S& b) const { return a * b; }
  bool equal(const S& a, const S& b) const { return a == b; }
  S scalar(long v) const { return S::from_int(v, ctx); }
};

/// A bracket that is not bi-affine: [a,b] = a²·b.
struct BrokenLine : AffineLine<Rational> {
  Rational bracket(const Rational& a, const Rational& b) const { return a * a * b; }
};

template <class C>
std::optional<Mismatch> run_identity(const C& space, CheckId id, std::uint64_t seed, std::uint64_t trial) {
  using S = typename C::scalar_type;
  SampleRng rng(seed, trial, static_cast<std::uint64_t>(id));
  Witness<typename C::point_type, S> w;
  for (auto name : check_info(id).points) w.points.emplace_back(std::string(name), random_scalar<S>(rng, space.ctx, {}, false));
  for (auto name : check_info(id).scalars) w.scalars.emplace_back(std::string(name), random_scalar<S>(rng, space.ctx, {}, false));
  return evaluate_identity(id, space, w, [](const S& x) { return Json(x.to_string()); });
}

template <class C>
void check_generic_catalogue(const C& space, std::uint64_t seed) {
  for (const auto& info : check_catalogue()) {
    if (info.matrix_only || !check_applies(info.id, true)) continue;
    for (std::uint64_t t = 0; t < 50; ++t) {
      auto mismatch = run_identity(space, info.id, seed, t);
      INFO(info.name << " trial " << t << (mismatch ? ": " + mismatch->clause : ""));
      REQUIRE_FALSE(mismatch.has_value());
    }
  }
}

}  // namespace

TEST_CASE("affine commutator of the cycle and swap permutations", "[affine]") {
  const auto a = from_int(kCycle);
  const auto b = from_int(kSwap);
  const auto kind = BracketKind<Rational>::commutator();
  // Oracle: ab − ba + b in plain integer arithmetic.
  const IntMatrix oracle = int_add(int_add(int_mul(kCycle, kSwap), int_mul(kSwap, kCycle), -1), kSwap);
  REQUIRE(bracket(kind, a, b) == from_int(oracle));
  REQUIRE(bracket(kind, a, b) == qmat({{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}));
  REQUIRE(vector_bracket(kind, a, b) == qmat({{1, 0, -1}, {0, -1, 1}, {-1, 1, 0}}));
}

TEST_CASE("heap and action formulas", "[affine]") {
  const auto a = from_int(kCycle);
  const auto b = from_int(kSwap);
  const auto c = Matrix<Rational>::identity(3);
  REQUIRE(heap(a, b, c) == a - b + c);
  REQUIRE(heap(a, b, b) == a);
  const Rational alpha(3, 2);
  REQUIRE(action(alpha, a, b) == alpha * b - alpha * a + a);
  REQUIRE(action(Rational(0), a, b) == a);
  REQUIRE(action(Rational(1), a, b) == b);
  const auto zeta = BracketKind<Rational>::zeta_bracket(Rational(5));
  REQUIRE(bracket(zeta, a, b) == action(Rational(5), a, b));
  REQUIRE(zeta.to_string() == "zeta:5");
}

TEST_CASE("retract operations at a base point", "[affine]") {
  const auto o = qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto a = from_int(kCycle);
  const auto b = from_int(kSwap);
  const MatrixAffineSpace<Rational> space(BracketKind<Rational>::commutator());
  REQUIRE(retract_add(space, o, a, b) == a + b - o);
  REQUIRE(retract_neg(space, o, a) == o + o - a);
  REQUIRE(retract_sub(space, o, a, b) == a - b + o);
  REQUIRE(retract_scale(space, o, Rational(2), a) == Rational(2) * (a - o) + o);
  REQUIRE(translate(space, o, b, a) == a - o + b);
  REQUIRE(translate(space, o, b, o) == b);

  // Both retract products reduce to the plain commutator/product of differences, shifted by o.
  const auto x = a - o;
  const auto y = b - o;
  REQUIRE(lie_retract_bracket(space, o, a, b) == o + (x * y - y * x));
  REQUIRE(assoc_retract_product(o, a, b) == o + x * y);
  REQUIRE(lie_retract_bracket(BracketKind<Rational>::commutator(), o, o, o) == o);
  REQUIRE(lie_retract_bracket(BracketKind<Rational>::zeta_bracket(Rational(7)), o, a, b) == o);
}

TEST_CASE("vector bracket and idempotence", "[affine]") {
  const auto zeta = BracketKind<Rational>::zeta_bracket(Rational(2));
  const auto a = from_int(kCycle);
  // ζ ▷_a a = a, so zeta brackets are idempotent as well.
  REQUIRE(vector_bracket(zeta, a, from_int(kSwap)) == bracket(zeta, a, from_int(kSwap)) - from_int(kSwap));

  // Every supported kind is idempotent; a broken carrier shows the identity can fail.
  const BrokenLine broken{};
  Witness<Rational, Rational> w;
  w.points.emplace_back("a", Rational(3));
  auto mismatch = evaluate_identity(CheckId::Idempotent, broken, w, [](const Rational& q) { return Json(q.to_string()); });
  REQUIRE(mismatch.has_value());
  REQUIRE(mismatch->clause == "[a,a] = a");
}

TEST_CASE("generic identities on a non-matrix carrier", "[affine][property]") {
  check_generic_catalogue(AffineLine<Rational>{}, 101);
  check_generic_catalogue(AffineLine<GaussianRational>{{}, GaussianRational(Rational(1), Rational(-1))}, 102);
  const PrimeContext gf11{11};
  check_generic_catalogue(AffineLine<PrimeFieldElement>{gf11, PrimeFieldElement(4, gf11)}, 103);
}

TEST_CASE("a bracket that is not bi-affine is caught", "[affine]") {
  const BrokenLine broken{};
  bool caught = false;
  for (std::uint64_t t = 0; t < 20 && !caught; ++t) caught = run_identity(broken, CheckId::BracketLeftAffine, 7, t).has_value();
  REQUIRE(caught);
}

TEST_CASE("matrix-only checks refuse generic carriers", "[affine]") {
  const AffineLine<Rational> line{};
  Witness<Rational, Rational> w;
  try {
    (void)evaluate_identity(CheckId::Closure, line, w, [](const Rational& q) { return Json(q.to_string()); });
    FAIL("closure evaluated on a line");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::NotApplicable);
  }
}
