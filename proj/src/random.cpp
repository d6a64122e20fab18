#include "ncg/random.hpp"

#include <cstdlib>
#include <string>

namespace ncg {

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("NCG_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    return 0;
  }
}

int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  return make_rational(random_int(rng, -num_bound, num_bound), random_int(rng, 1, den_bound));
}

Rational random_nonzero_rational(Rng& rng, int num_bound, int den_bound) {
  for (;;) {
    Rational r = random_rational(rng, num_bound, den_bound);
    if (sgn(r) != 0) return r;
  }
}

GR random_gaussian(Rng& rng) {
  // Keep a healthy share of real and zero values in the mix.
  switch (random_int(rng, 0, 5)) {
    case 0:
      return GR(0);
    case 1:
      return GR(random_rational(rng));
    default:
      return GR(random_rational(rng), random_rational(rng));
  }
}

GR random_nonzero_gaussian(Rng& rng) {
  for (;;) {
    GR x = random_gaussian(rng);
    if (!x.is_zero()) return x;
  }
}

KElement random_kelement(Rng& rng, int n) {
  KElement x(n);
  x.lambda = random_gaussian(rng);
  x.mu = random_gaussian(rng);
  for (auto& c : x.alpha) c = random_gaussian(rng);
  return x;
}

KElement random_ideal_element(Rng& rng, int n) {
  KElement x(n);
  for (auto& c : x.alpha) c = random_gaussian(rng);
  return x;
}

KElement random_hermitian_ideal_element(Rng& rng, int n) {
  KElement x(n);
  for (auto& c : x.alpha) c = GR(random_rational(rng));
  return x;
}

Derivation random_derivation(Rng& rng, int n) {
  Derivation d(n);
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    d.a[i] = random_gaussian(rng);
    for (auto& c : d.b[i]) c = random_gaussian(rng);
  }
  return d;
}

LaurentScalar random_laurent(Rng& rng, int max_terms, int exponent_bound) {
  LaurentScalar out;
  const int terms = random_int(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t)
    out += LaurentScalar::monomial(random_gaussian(rng), random_int(rng, -exponent_bound, exponent_bound));
  return out;
}

}  // namespace ncg
