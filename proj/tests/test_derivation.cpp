#include <doctest.h>

#include "ncg/derivation.hpp"
#include "ncg/error.hpp"
#include "ncg/random.hpp"

using namespace ncg;

namespace {

GR delta(int i, int j) { return i == j ? GR(1) : GR(0); }

// Checks d(x) = [w, x] on the basis of K_N.
bool is_commutator_with(const Derivation& d, const KElement& w) {
  for (const auto& x : k_basis(d.n))
    if (!(der_apply(d, x) == k_commutator(w, x))) return false;
  return true;
}

}  // namespace

TEST_SUITE("derivation") {

TEST_CASE("basis derivations act as defined") {
  const int n = 3;
  const KElement e = KElement::e(n);
  for (int k = 1; k <= n; ++k) {
    CHECK(der_apply(Derivation::d(n, k), e) == GR::i() * KElement::arrow(n, k));
    for (int l = 1; l <= n; ++l) {
      CHECK(der_apply(Derivation::d(n, k), KElement::arrow(n, l)).is_zero());
      CHECK(der_apply(Derivation::d_up(n, k, l), e).is_zero());
      for (int j = 1; j <= n; ++j)
        CHECK(der_apply(Derivation::d_up(n, k, l), KElement::arrow(n, j)) == delta(j, l) * KElement::arrow(n, k));
    }
  }
  CHECK(der_apply(Derivation::d(n, 2), KElement::one(n)).is_zero());
}

TEST_CASE("Leibniz rule on random data") {
  Rng rng(seed_from_env());
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 50; ++t) {
      const Derivation d = random_derivation(rng, n);
      const KElement x = random_kelement(rng, n), y = random_kelement(rng, n);
      CHECK(der_apply(d, x * y) == der_apply(d, x) * y + x * der_apply(d, y));
    }
}

TEST_CASE("dimensions") {
  for (int n = 1; n <= 5; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    CHECK(der_rank(der_full_basis(n).basis) == nn + nn * nn);
    CHECK(der_full_basis(n).dim() == nn + nn * nn);
    CHECK(der_rank(der_inner(n).basis) == nn + 1);
    CHECK(der_rank(der_tilde(n).basis) == nn);
  }
}

TEST_CASE("bracket table") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(der_bracket(Derivation::d(n, i), Derivation::d(n, j)).is_zero());
        for (int k = 1; k <= n; ++k) {
          CHECK(der_bracket(Derivation::d_up(n, i, j), Derivation::d(n, k)) == delta(k, j) * Derivation::d(n, i));
          for (int l = 1; l <= n; ++l)
            CHECK(der_bracket(Derivation::d_up(n, i, j), Derivation::d_up(n, k, l)) ==
                  delta(k, j) * Derivation::d_up(n, i, l) - delta(i, l) * Derivation::d_up(n, k, j));
        }
        CHECK(der_bracket(Derivation::dhat(n), Derivation::d(n, i)) == Derivation::d(n, i));
      }
}

TEST_CASE("bracket is the commutator of the actions") {
  Rng rng(seed_from_env() + 1);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 30; ++t) {
      const Derivation p = random_derivation(rng, n), q = random_derivation(rng, n);
      const KElement x = random_kelement(rng, n);
      CHECK(der_apply(der_bracket(p, q), x) == der_apply(p, der_apply(q, x)) - der_apply(q, der_apply(p, x)));
    }
}

TEST_CASE("star") {
  Rng rng(seed_from_env() + 2);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : der_full_basis(n).basis) CHECK(der_is_hermitian(d));
    CHECK(der_is_hermitian(Derivation::dhat(n)));
    for (int t = 0; t < 30; ++t) {
      const Derivation d = random_derivation(rng, n);
      const KElement x = random_kelement(rng, n);
      CHECK(der_apply(der_star(d), x) == k_star(der_apply(d, k_star(x))));
      CHECK(der_star(der_star(d)) == d);
    }
  }
  CHECK_FALSE(der_is_hermitian(GR::i() * Derivation::d(2, 1)));
}

TEST_CASE("inner derivations") {
  Rng rng(seed_from_env() + 3);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : der_inner(n).basis) {
      const auto w = der_is_inner(d);
      REQUIRE(w.has_value());
      CHECK(is_commutator_with(d, *w));
    }
    for (int t = 0; t < 30; ++t) {
      const KElement w = random_kelement(rng, n);
      Derivation d(n);
      // [w, .] from its values on the generators
      for (int k = 0; k < n; ++k) d.a[static_cast<std::size_t>(k)] = k_commutator(w, KElement::e(n)).alpha[static_cast<std::size_t>(k)];
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          d.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = k_commutator(w, KElement::arrow(n, i + 1)).alpha[static_cast<std::size_t>(k)];
      CHECK(is_commutator_with(d, w));
      CHECK(der_inner(n).contains(d));
      const auto found = der_is_inner(d);
      REQUIRE(found.has_value());
      CHECK(is_commutator_with(d, *found));
    }
    if (n > 1) CHECK_FALSE(der_is_inner(Derivation::d_up(n, 1, 2)).has_value());
    // d_1^1 is dhat when there is a single arrow
    CHECK(der_is_inner(Derivation::d_up(n, 1, 1)).has_value() == (n == 1));
  }
}

TEST_CASE("named subalgebras") {
  for (int n = 1; n <= 4; ++n)
    for (const char* name : {"der", "inner", "tilde"}) {
      const LieSubalgebra g = lie_by_name(name, n);
      CHECK(g.name == name);
      CHECK(g.basis_independent());
      CHECK(g.bracket_closed());
      CHECK(g.star_closed());
      CHECK(g.basis_hermitian());
      CHECK(g.labels.size() == g.dim());
      for (std::size_t b = 0; b < g.dim(); ++b) {
        const auto c = g.coordinates(g.basis[b]);
        REQUIRE(c.has_value());
        CHECK(g.combine(*c) == g.basis[b]);
      }
    }
  CHECK(der_inner(2).labels == std::vector<std::string>{"dhat", "d_1", "d_2"});
  CHECK(der_tilde(2).labels == std::vector<std::string>{"dt_1", "dt_2"});
  CHECK(der_full_basis(2).labels == std::vector<std::string>{"d_1", "d_2", "d_1^1", "d_1^2", "d_2^1", "d_2^2"});
  CHECK_FALSE(der_tilde(2).contains(Derivation::d(2, 1)));
  CHECK_THROWS_AS(lie_by_name("foo", 2), UsageError);
  CHECK_THROWS_AS(lie_by_name("der", 0), UsageError);
}

TEST_CASE("hermitian basis spans the same algebra") {
  const Derivation x = Derivation::d(2, 2) + Derivation::d_up(2, 1, 1);
  const LieSubalgebra g{"skew", 2, {Derivation::d(2, 1) + GR::i() * x, GR::i() * Derivation::d(2, 1)}, {"p", "q"}};
  CHECK_FALSE(g.basis_hermitian());
  const LieSubalgebra h = hermitian_basis(g);
  CHECK(h.basis_hermitian());
  CHECK(h.basis_independent());
  CHECK(h.dim() == g.dim());
  for (const auto& d : g.basis) CHECK(h.contains(d));
}

}  // TEST_SUITE
