#pragma once

// Seeded samplers of small exact values for property checks. All randomness
// in the library and the CLI flows through an explicitly passed Rng.

#include <cstdint>
#include <random>

#include "ncg/derivation.hpp"
#include "ncg/kronecker.hpp"
#include "ncg/scalar.hpp"

namespace ncg {

using Rng = std::mt19937_64;

// NCG_SEED from the environment, 0 when unset or unparsable.
std::uint64_t seed_from_env();

int random_int(Rng& rng, int lo, int hi);
Rational random_rational(Rng& rng, int num_bound = 6, int den_bound = 5);
Rational random_nonzero_rational(Rng& rng, int num_bound = 6, int den_bound = 5);
GR random_gaussian(Rng& rng);
GR random_nonzero_gaussian(Rng& rng);
KElement random_kelement(Rng& rng, int n);
// lambda = mu = 0
KElement random_ideal_element(Rng& rng, int n);
// sum r_i a_i with r_i real
KElement random_hermitian_ideal_element(Rng& rng, int n);
Derivation random_derivation(Rng& rng, int n);
LaurentScalar random_laurent(Rng& rng, int max_terms = 2, int exponent_bound = 2);

}  // namespace ncg
