#pragma once

// Random generators shared by the unit tests and the acceptance runner.

#include <cstdlib>
#include <random>
#include <string>

#include "qweyl/presentation.hpp"

namespace qweyl::testing {

inline std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("QWEYL_SEED");
  return s != nullptr ? std::strtoull(s, nullptr, 10) : fallback;
}

/// Random normal monomial with total exponent |k|_1 + |m|_1 <= max_degree.
inline NormalMonomial random_monomial(std::mt19937_64& rng, const PresentationId& p, int max_degree) {
  const int n = p.n();
  NormalMonomial mono = NormalMonomial::one(n);
  int budget = std::uniform_int_distribution<int>(0, max_degree)(rng);
  std::uniform_int_distribution<int> axis(0, n - 1);
  std::uniform_int_distribution<int> which(0, p.localized ? 3 : 1);
  for (int t = 0; t < budget; ++t) {
    auto i = static_cast<std::size_t>(axis(rng));
    switch (which(rng)) {
      case 0: ++mono.k[i]; break;
      case 1: p.localized ? --mono.k[i] : ++mono.m[i]; break;
      case 2: ++mono.m[i]; break;
      default: --mono.m[i]; break;
    }
  }
  return mono;
}

inline Scalar random_small_scalar(std::mt19937_64& rng) {
  long c = 0;
  while (c == 0) c = std::uniform_int_distribution<long>(-3, 3)(rng);
  return Scalar(c);
}

/// Rational function in the q's, lambda's and one generic symbol, with a
/// denominator about half of the time.
inline Scalar random_scalar(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> ex(-2, 2);
  std::uniform_int_distribution<int> axis(1, n);
  auto atom = [&]() {
    int kind = std::uniform_int_distribution<int>(0, n > 1 ? 2 : 1)(rng);
    if (kind == 0) return Scalar::q(axis(rng));
    if (kind == 1) return Scalar::generic(1);
    int i = axis(rng);
    int j = axis(rng);
    while (j == i) j = axis(rng);
    return Scalar::var(Var::lambda(std::min(i, j), std::max(i, j)));
  };
  auto poly = [&]() {
    Scalar s;
    int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int t = 0; t < terms; ++t) {
      int c = coef(rng);
      s += Scalar(c == 0 ? 1 : c) * atom().pow(ex(rng));
    }
    return s;
  };
  Scalar s = poly();
  while (s.is_zero()) s = poly();
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    Scalar d = poly();
    if (!d.is_zero()) s = s / d;
  }
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) s = s / Scalar(std::uniform_int_distribution<long>(2, 5)(rng));
  return s;
}

/// Sum of up to `terms` random monomials with small integer coefficients.
inline NormalElement random_element(std::mt19937_64& rng, const PresentationId& p, int max_degree,
                                    int terms = 3) {
  NormalElement e(p);
  int count = std::uniform_int_distribution<int>(1, terms)(rng);
  for (int t = 0; t < count; ++t) e.add_term(random_monomial(rng, p, max_degree), random_small_scalar(rng));
  return e;
}

inline NormalElement random_nonzero_element(std::mt19937_64& rng, const PresentationId& p, int max_degree,
                                            int terms = 3) {
  for (;;) {
    NormalElement e = random_element(rng, p, max_degree, terms);
    if (!e.is_zero()) return e;
  }
}

}  // namespace qweyl::testing
