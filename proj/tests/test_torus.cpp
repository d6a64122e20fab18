#include <doctest.h>

#include "ncg/error.hpp"
#include "ncg/torus.hpp"

using namespace ncg;

namespace {

const TorusElement U = TorusElement::U();
const TorusElement V = TorusElement::V();
const TorusElement Q{LaurentScalar::q()};

TorusElement mono(const GR& c, std::int64_t k, std::int64_t l) { return TorusElement::monomial(LaurentScalar(c), k, l); }

// c U^k V^l and its inverse; (U^k V^l)(U^-k V^-l) = q^{-kl}.
std::pair<TorusElement, TorusElement> monomial_pair(const GR& c, std::int64_t k, std::int64_t l) {
  return {mono(c, k, l), TorusElement::monomial(LaurentScalar(c.inverse()) * LaurentScalar::q(k * l), -k, -l)};
}

// Words in U^{+-1}, V^{+-1} multiplied letter by letter: an oracle for the
// normal-form product that only uses VU = qUV on single letters.
TorusElement word_power(const TorusElement& x, std::int64_t k) {
  TorusElement out(1);
  const TorusElement step = k >= 0 ? x : (x == U ? TorusElement::U(-1) : TorusElement::V(-1));
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) out = out * step;
  return out;
}

TorusTensor zero_tensor() { return TorusTensor{}; }

}  // namespace

TEST_SUITE("torus") {

TEST_CASE("commutation relation") {
  CHECK(V * U == Q * U * V);
  CHECK(U * TorusElement::U(-1) == TorusElement(1));
  CHECK(TorusElement::V(-1) * V == TorusElement(1));
  // V^l U^k = q^{kl} U^k V^l by repeated single swaps
  for (int k = -2; k <= 2; ++k)
    for (int l = -2; l <= 2; ++l) {
      const TorusElement lhs = word_power(V, l) * word_power(U, k);
      CHECK(lhs == TorusElement::monomial(LaurentScalar::q(k * l), k, l));
    }
}

TEST_CASE("ring laws on random elements") {
  Rng rng(seed_from_env());
  for (int t = 0; t < 200; ++t) {
    const TorusElement x = random_torus_element(rng), y = random_torus_element(rng), z = random_torus_element(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(TorusElement(1) * x == x);
  }
}

TEST_CASE("star") {
  CHECK(t_star(U) == TorusElement::U(-1));
  CHECK(t_star(U * V) == Q * TorusElement::U(-1) * TorusElement::V(-1));
  CHECK(t_star(U * V) == TorusElement::V(-1) * TorusElement::U(-1));
  CHECK(t_star(Q) == TorusElement(LaurentScalar::q(-1)));
  Rng rng(seed_from_env() + 1);
  for (int t = 0; t < 100; ++t) {
    const TorusElement x = random_torus_element(rng), y = random_torus_element(rng);
    CHECK(t_star(t_star(x)) == x);
    CHECK(t_star(x * y) == t_star(y) * t_star(x));
    CHECK(t_star(x + y) == t_star(x) + t_star(y));
  }
}

TEST_CASE("derivations") {
  CHECK(t_derive(1, U) == TorusElement(GR::i()) * U);
  CHECK(t_derive(2, U).is_zero());
  CHECK(t_derive(2, word_power(U, 3)).is_zero());
  CHECK(t_derive(2, V) == TorusElement(GR::i()) * V);
  CHECK_THROWS_AS(t_derive(3, U), Error);
  Rng rng(seed_from_env() + 2);
  for (int t = 0; t < 100; ++t) {
    const TorusElement x = random_torus_element(rng), y = random_torus_element(rng);
    for (int a = 1; a <= 2; ++a) {
      CHECK(t_derive(a, x * y) == t_derive(a, x) * y + x * t_derive(a, y));
      CHECK(t_derive(a, t_star(x)) == t_star(t_derive(a, x)));
    }
    CHECK(t_derive(1, t_derive(2, x)) == t_derive(2, t_derive(1, x)));
  }
}

TEST_CASE("center is trivial on finite supports") {
  Rng rng(seed_from_env() + 3);
  for (int t = 0; t < 100; ++t) {
    const TorusElement x = random_torus_element(rng);
    const bool central = t_commutator(x, U).is_zero() && t_commutator(x, V).is_zero();
    CHECK(central == x.is_scalar());
  }
  CHECK(t_commutator(TorusElement(LaurentScalar::q(3)), U).is_zero());
}

TEST_CASE("differential") {
  for (int k = -3; k <= 3; ++k)
    CHECK(t_d(word_power(U, k)) == TorusOneForm{mono(GR(Rational(0), Rational(k)), k, 0), TorusElement()});
  for (int k = -2; k <= 2; ++k)
    for (int l = -2; l <= 2; ++l) {
      TorusOneForm f;
      f.w = mono(GR(1), k, l);
      CHECK(t_d1(f) == mono(GR(Rational(0), Rational(-l)), k, l));
    }
  Rng rng(seed_from_env() + 4);
  for (int t = 0; t < 100; ++t) {
    const TorusElement x = random_torus_element(rng);
    CHECK(t_d1(t_d(x)).is_zero());
    const auto back = t_exact_preimage(t_d(x));
    REQUIRE(back.has_value());
    CHECK(t_d(*back) == t_d(x));
    CHECK((x - *back).is_scalar());
  }
  // w and n are closed but not exact
  CHECK(t_d1(t_basis_form(1)).is_zero());
  CHECK(t_d1(t_basis_form(2)).is_zero());
  CHECK_FALSE(t_exact_preimage(t_basis_form(1)).has_value());
  CHECK_FALSE(t_exact_preimage(t_basis_form(2)).has_value());
  CHECK_FALSE(t_exact_preimage(TorusOneForm{TorusElement(3), TorusElement(-2)}).has_value());
  // U w is not closed, so it has no preimage either
  CHECK_FALSE(t_exact_preimage(TorusOneForm{TorusElement(), U}).has_value());
  // w n is not d of anything, other top forms are
  CHECK_FALSE(t_d1_preimage(TorusElement(1)).has_value());
  for (int t = 0; t < 50; ++t) {
    TorusElement c = random_torus_element(rng);
    c -= TorusElement(c.coefficient(0, 0));
    const auto f = t_d1_preimage(c);
    REQUIRE(f.has_value());
    CHECK(t_d1(*f) == c);
  }
}

TEST_CASE("one-form basis is free and central") {
  Rng rng(seed_from_env() + 5);
  for (int t = 0; t < 50; ++t) {
    const TorusElement a = random_torus_element(rng), b = random_torus_element(rng), x = random_torus_element(rng);
    const TorusOneForm f{a, b};
    CHECK(t_eval(f, 1) == a);
    CHECK(t_eval(f, 2) == b);
    CHECK((f.is_zero()) == (a.is_zero() && b.is_zero()));
    for (int c = 1; c <= 2; ++c) CHECK(t_act_left(x, t_basis_form(c)) == t_act_right(t_basis_form(c), x));
  }
  // (dU) V = q^{-1} V (dU), with dU = i U w
  const TorusOneForm dU = t_d(U);
  CHECK(t_act_right(dU, V) == t_act_left(TorusElement(LaurentScalar::q(-1)) * V, dU));
}

TEST_CASE("cohomology on windows") {
  for (int k = 1; k <= 4; ++k) {
    const TorusCohomology c = t_cohomology(k);
    CHECK(c.h0 == 1);
    CHECK(c.h1 == 2);
    CHECK(c.h2 == 1);
  }
  CHECK_THROWS_AS(t_cohomology(0), UsageError);
}

TEST_CASE("closed one-forms on a window satisfy k b = l a") {
  Rng rng(seed_from_env() + 6);
  for (int t = 0; t < 50; ++t) {
    const TorusOneForm f = t % 2 == 0 ? t_d(random_torus_element(rng)) + TorusOneForm{TorusElement(t), TorusElement(1)}
                                      : TorusOneForm{random_torus_element(rng), random_torus_element(rng)};
    bool recurrence = true;
    std::map<TorusElement::Key, int> keys;
    for (const auto& [key, c] : f.w.terms()) keys[key] = 0;
    for (const auto& [key, c] : f.e.terms()) keys[key] = 0;
    for (const auto& [key, unused] : keys)
      recurrence = recurrence && LaurentScalar(GR(static_cast<int>(key.first))) * f.e.coefficient(key.first, key.second) ==
                                     LaurentScalar(GR(static_cast<int>(key.second))) * f.w.coefficient(key.first, key.second);
    CHECK(t_d1(f).is_zero() == recurrence);
  }
}

TEST_CASE("connections and torsion") {
  TorusConnection zero;
  CHECK(t_conn_apply(zero, 1, TorusOneForm{U, TorusElement()}) == TorusOneForm{TorusElement(GR::i()) * U, TorusElement()});
  TorusConnection c;
  c.G(1, 1, 2) = TorusElement(1);
  CHECK_FALSE(t_is_torsion_free(c));
  CHECK_FALSE(t_is_torsion_free_by_definition(c));
  Rng rng(seed_from_env() + 7);
  for (int t = 0; t < 30; ++t) {
    TorusConnection s;
    for (int b = 1; b <= 2; ++b) {
      s.G(b, 1, 1) = random_torus_element(rng);
      s.G(b, 2, 2) = random_torus_element(rng);
      s.G(b, 1, 2) = random_torus_element(rng);
      s.G(b, 2, 1) = s.G(b, 1, 2);
    }
    CHECK(t_is_torsion_free(s));
    CHECK(t_is_torsion_free_by_definition(s));
    const TorusElement f = random_torus_element(rng);
    const TorusOneForm m{random_torus_element(rng), random_torus_element(rng)};
    for (int a = 1; a <= 2; ++a)
      CHECK(t_conn_apply(s, a, t_act_left(f, m)) == t_act_left(f, t_conn_apply(s, a, m)) + t_act_left(t_derive(a, f), m));
  }
}

TEST_CASE("hermitian data") {
  const auto [h, hinv] = monomial_pair(GR(3), 1, 2);
  CHECK(h * hinv == TorusElement(1));
  CHECK_NOTHROW(t_offdiagonal_data(h, hinv));
  CHECK_THROWS_AS(t_offdiagonal_data(h, hinv + TorusElement(1)), NotInvertible);
  CHECK_THROWS_AS(t_diagonal_data(U, TorusElement::U(-1), TorusElement(1), TorusElement(1)), AxiomViolation);
  // 2 + U + U^-1 is hermitian but has no finitely supported inverse
  const TorusElement h1 = TorusElement(2) + U + TorusElement::U(-1);
  CHECK_THROWS_AS(t_build_diagonal_lc(h1, TorusElement(make_rational(1, 2)), TorusElement(1), TorusElement(1)), NotInvertible);
  const TorusHermitianData data = t_offdiagonal_data(h, hinv);
  CHECK(data.f(1, 2) + TorusElement(GR::i()) * data.g(1, 2) == data.down[0][1]);
  CHECK(t_star(data.f(1, 2)) == data.f(1, 2));
  CHECK(t_star(data.g(1, 2)) == data.g(1, 2));
}

TEST_CASE("diagonal metrics") {
  const TorusConnection one = t_build_diagonal_lc(TorusElement(1), TorusElement(1), TorusElement(1), TorusElement(1));
  CHECK(one == TorusConnection{});
  const TorusElement c{GR(make_rational(5, 2))}, cinv{GR(make_rational(2, 5))}, d{GR(3)}, dinv{GR(make_rational(1, 3))};
  const TorusConnection con = t_build_diagonal_lc(c, cinv, d, dinv);
  CHECK(con == TorusConnection{});
  CHECK(t_is_torsion_free(con));
  CHECK(t_is_compatible(con, t_diagonal_data(c, cinv, d, dinv)).compatible);
}

TEST_CASE("zero connection against a nonconstant metric") {
  const auto [h, hinv] = monomial_pair(GR(1), 1, 0);
  const TorusHermitianData data = t_offdiagonal_data(h, hinv);
  const TorusCompatibility r = t_is_compatible(TorusConnection{}, data);
  CHECK_FALSE(r.compatible);
  REQUIRE_FALSE(r.residuals.empty());
  CHECK(r.residuals.front().value == to_string(t_derive(1, data.up[0][1])));
}

TEST_CASE("off-diagonal metrics") {
  for (const auto& [c, k, l] : std::vector<std::tuple<GR, int, int>>{{GR(1), 0, 0}, {GR::i(), 0, 0}, {GR(2), 1, 0}, {GR(make_rational(-1, 3)), 0, 2}, {GR(5), -2, 3}}) {
    const auto [h, hinv] = monomial_pair(c, k, l);
    const TorusConnection con = t_build_offdiagonal_lc(h, hinv);
    const TorusHermitianData data = t_offdiagonal_data(h, hinv);
    CAPTURE(to_string(h));
    CHECK(t_is_torsion_free(con));
    CHECK(t_is_torsion_free_by_definition(con));
    CHECK(t_is_compatible(con, data).compatible);
    CHECK(t_compatible_by_definition(con, data.up).compatible);
    if (k == 0 && l == 0) CHECK(con == TorusConnection{});
    // the T tensor of the example reproduces the final table
    const TorusTensor t = t_offdiagonal_t(h, hinv);
    CHECK(t_torsion_free_t_residuals(data, t).empty());
    CHECK(t_build_t_family(data, t) == con);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int cc = 0; cc < 2; ++cc) CHECK(t_star(t[a][b][cc]) == t[b][a][cc]);
  }
}

TEST_CASE("constant off-diagonal metric") {
  const TorusHermitianData data = t_constant_offdiagonal_data(make_rational(3, 2));
  const TorusConnection c = t_build_constant_offdiagonal(make_rational(4, 5), -7);
  CHECK(t_conn_apply(c, 1, t_basis_form(2)) == TorusOneForm{TorusElement(GR(make_rational(4, 5))), TorusElement()});
  CHECK(t_conn_apply(c, 2, t_basis_form(1)) == TorusOneForm{TorusElement(), TorusElement(GR(-7))});
  CHECK(t_is_torsion_free(c));
  CHECK(t_is_compatible(c, data).compatible);
  const auto flags = t_bimodule_and_star_checks(c);
  CHECK(flags.bimodule);
  CHECK(flags.star);
  CHECK_THROWS_AS(t_constant_offdiagonal_data(0), NotInvertible);
  // a complex gamma breaks compatibility
  TorusConnection bad = c;
  bad.G(2, 1, 1) = TorusElement(GR::i());
  CHECK_FALSE(t_is_compatible(bad, data).compatible);
}

TEST_CASE("g-form example") {
  for (const auto& [k, l, z] : std::vector<std::tuple<int, int, GR>>{{1, 0, GR(1)}, {0, 1, GR(2)}, {2, 3, GR(1) + GR::i()}, {0, 0, GR(1)}, {-1, 2, GR(Rational(0), Rational(3))}}) {
    const TorusGFormExample ex = t_build_gform_example(k, l, z);
    CHECK(t_g_compatible(ex.connection, ex.g).compatible);
    CHECK(t_is_torsion_free(ex.connection));
    const auto flags = t_bimodule_and_star_checks(ex.connection);
    CHECK(flags.bimodule);
    CHECK(flags.star == (k == 0 && l == 0));
    if (k == 0 && l == 0) CHECK(ex.connection == TorusConnection{});
  }
  CHECK_THROWS_AS(t_build_gform_example(1, 1, GR(0)), DivisionByZero);
  TorusConnection c;
  c.G(1, 1, 1) = U;
  CHECK_FALSE(t_bimodule_and_star_checks(c).bimodule);
}

TEST_CASE("parametrized metric connections") {
  Rng rng(seed_from_env() + 8);
  const auto [h, hinv] = monomial_pair(GR(2), 1, -1);
  const TorusHermitianData data = t_offdiagonal_data(h, hinv);
  for (int t = 0; t < 20; ++t) {
    CHECK(t_is_compatible(t_build_s_family(data, random_hermitian_tensor(rng)), data).compatible);
    const TorusTensor tt = random_hermitian_tensor(rng);
    const TorusConnection c = t_build_t_family(data, tt);
    CHECK(t_is_compatible(c, data).compatible);
    CHECK(t_is_torsion_free(c) == t_torsion_free_t_residuals(data, tt).empty());
  }
  // S = 0 and T = 0 on a constant metric give the zero connection
  const TorusHermitianData flat = t_constant_offdiagonal_data(2);
  CHECK(t_build_s_family(flat, zero_tensor()) == TorusConnection{});
  CHECK(t_build_t_family(flat, zero_tensor()) == TorusConnection{});
  TorusTensor bad;
  bad[0][1][0] = U;
  CHECK_THROWS_AS(t_build_s_family(data, bad), AxiomViolation);
  CHECK_THROWS_AS(t_build_t_family(data, bad), AxiomViolation);
}

}  // TEST_SUITE
