#pragma once

#include <cstdint>
#include <random>
#include <type_traits>

#include "affgebra/field.hpp"

namespace affgebra {

/// Coefficient bounds for exact sampling: numerator in [-num, num], denominator in [1, den].
struct SampleBounds {
  long numerator = 9;
  long denominator = 9;
};

/// Deterministic stream keyed by (seed, index, stream). mt19937_64 and
/// seed_seq are fully specified, and draws avoid the implementation-defined
/// std distributions, so output is identical across standard libraries.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U)};
    engine_.seed(seq);
  }

  /// Uniform in [lo, hi]; the modulo bias is negligible for the small ranges used here.
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  Rational rational(const SampleBounds& bounds) {
    long num = uniform(-bounds.numerator, bounds.numerator);
    long den = uniform(1, bounds.denominator);
    return Rational(num, den);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Random scalar of S; complex fields draw real and imaginary parts
/// independently unless `real_only` is set.
template <ExactScalar S>
S random_scalar(SampleRng& rng, const Context<S>& ctx, const SampleBounds& bounds, bool real_only = false) {
  if constexpr (std::is_same_v<S, PrimeFieldElement>) {
    return S::from_int(rng.uniform(0, static_cast<long>(ctx.p) - 1), ctx);
  } else if constexpr (S::is_complex) {
    Rational re = rng.rational(bounds);
    Rational im = real_only ? Rational(0) : rng.rational(bounds);
    return S(typename S::real_type(re), typename S::real_type(im));
  } else {
    return S::from_rational(rng.rational(bounds), ctx);
  }
}

}  // namespace affgebra
