#include <doctest.h>

#include "ncg/connection.hpp"
#include "ncg/error.hpp"

using namespace ncg;

namespace {

Matrix<GR> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix<GR> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_gaussian(rng);
  return m;
}

Matrix<GR> real_part(const Matrix<GR>& m) {
  Matrix<GR> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GR(m(r, c).re());
  return out;
}

// Random connection; for tilde the matrices are pushed through the reduced
// coordinates so that they respect the relation.
Connection random_connection(Rng& rng, const LieSubalgebra& g) {
  const Omega1Basis basis = omega1_basis(g);
  std::vector<Matrix<GR>> x;
  for (std::size_t b = 0; b < g.dim(); ++b) x.push_back(random_matrix(rng, basis.dim(), basis.dim()));
  return connection_from_reduced(g, basis, x);
}

OneForm random_one_form(Rng& rng, int n) {
  std::vector<GR> c;
  for (int i = 0; i <= n; ++i) c.push_back(random_gaussian(rng));
  return OneForm(n, c);
}

}  // namespace

TEST_SUITE("connection") {

TEST_CASE("Leibniz rules on one-forms") {
  Rng rng(seed_from_env());
  for (int n = 1; n <= 3; ++n)
    for (const char* name : {"der", "inner", "tilde"}) {
      const LieSubalgebra g = lie_by_name(name, n);
      const Connection c = random_connection(rng, g);
      for (int t = 0; t < 10; ++t) {
        const KElement a = random_kelement(rng, n);
        const OneForm w = random_one_form(rng, n);
        for (const auto& d : g.basis) {
          // d(a) lies in the arrow ideal, which kills one-forms
          CHECK(form_is_zero(g, act_left(der_apply(d, a), w)));
          CHECK(forms_equal(g, conn_apply(c, d, act_left(a, w)), act_left(a, conn_apply(c, d, w)) + act_left(der_apply(d, a), w)));
          CHECK(forms_equal(g, conn_apply(c, d, act_right(w, a)), act_right(conn_apply(c, d, w), a) + act_right(w, der_apply(d, a))));
        }
      }
    }
}

TEST_CASE("linearity in the derivation") {
  Rng rng(seed_from_env() + 1);
  const LieSubalgebra g = der_full_basis(2);
  const Connection c = random_connection(rng, g);
  for (int t = 0; t < 20; ++t) {
    const GR z = random_gaussian(rng);
    const Derivation p = g.basis[static_cast<std::size_t>(random_int(rng, 0, 5))];
    const Derivation q = g.basis[static_cast<std::size_t>(random_int(rng, 0, 5))];
    const OneForm w = random_one_form(rng, 2);
    CHECK(forms_equal(g, conn_apply(c, p + z * q, w), conn_apply(c, p, w) + z * conn_apply(c, q, w)));
  }
  CHECK_THROWS_AS(conn_apply(Connection::zero(der_tilde(2)), Derivation::d(2, 1), OneForm::dalpha(2, 1)), NotInSubalgebra);
}

TEST_CASE("exterior derivative squares to zero") {
  Rng rng(seed_from_env() + 2);
  for (int n = 1; n <= 3; ++n)
    for (const char* name : {"der", "inner", "tilde"}) {
      const LieSubalgebra g = lie_by_name(name, n);
      for (int t = 0; t < 10; ++t) {
        const KElement a = random_kelement(rng, n);
        for (const auto& p : g.basis)
          for (const auto& q : g.basis) CHECK(exterior_d(differential(a), p, q).is_zero());
      }
    }
}

TEST_CASE("torsion matches its defining formula") {
  Rng rng(seed_from_env() + 3);
  const LieSubalgebra g = der_inner(2);
  const Connection c = random_connection(rng, g);
  for (int t = 0; t < 10; ++t) {
    const OneForm w = random_one_form(rng, 2);
    for (const auto& p : g.basis)
      for (const auto& q : g.basis) {
        const KElement dw = der_apply(p, eval(w, q, g)) - der_apply(q, eval(w, p, g)) - eval(w, der_bracket(p, q), g);
        CHECK(torsion(c, w, p, q) == eval(conn_apply(c, p, w), q, g) - eval(conn_apply(c, q, w), p, g) - dw);
      }
  }
}

TEST_CASE("closed-form torsion-free families") {
  Rng rng(seed_from_env() + 4);
  for (int n = 1; n <= 4; ++n) {
    const auto size = static_cast<std::size_t>(n);
    for (int t = 0; t < 5; ++t) {
      CHECK(is_torsion_free(inner_closed_form(der_inner(n), random_matrix(rng, size + 1, size + 1))));
      CHECK(is_torsion_free(tilde_closed_form(der_tilde(n), random_matrix(rng, size, size))));
    }
  }
  // the zero connection on Der is torsion-free, a random one is not
  CHECK(is_torsion_free(Connection::zero(der_full_basis(2))));
  CHECK_FALSE(is_torsion_free(random_connection(rng, der_full_basis(2))));
  CHECK_THROWS_AS(inner_closed_form(der_full_basis(2), Matrix<GR>(3, 3)), Error);
}

TEST_CASE("well-definedness on the tilde calculus") {
  Matrix<GR> m(3, 3);
  m(1, 1) = GR(1);
  CHECK_THROWS_AS(Connection(der_tilde(2), {m, m}), IllDefined);
  CHECK_THROWS_AS(Connection(der_tilde(2), {m}), DimensionMismatch);
  CHECK_THROWS_AS(Connection(der_full_basis(1), {Matrix<GR>(3, 3), Matrix<GR>(3, 3)}), DimensionMismatch);
  CHECK_NOTHROW(Connection(der_full_basis(2), std::vector<Matrix<GR>>(6, m)));
}

TEST_CASE("reduced coordinates round trip") {
  Rng rng(seed_from_env() + 5);
  for (int n = 1; n <= 3; ++n)
    for (const char* name : {"der", "inner", "tilde"}) {
      const LieSubalgebra g = lie_by_name(name, n);
      const Omega1Basis basis = omega1_basis(g);
      const Connection c = random_connection(rng, g);
      const Connection back = connection_from_reduced(g, basis, reduced_gamma(c, basis));
      for (const auto& d : g.basis)
        for (int I = 0; I <= n; ++I) CHECK(forms_equal(g, conn_apply(c, d, OneForm::dalpha(n, I)), conn_apply(back, d, OneForm::dalpha(n, I))));
    }
}

TEST_CASE("curvature by definition and by matrices") {
  Rng rng(seed_from_env() + 6);
  for (int n = 1; n <= 3; ++n)
    for (const char* name : {"der", "inner", "tilde"}) {
      const LieSubalgebra g = lie_by_name(name, n);
      const Connection c = random_connection(rng, g);
      for (const auto& p : g.basis)
        for (const auto& q : g.basis) {
          const OneForm w = random_one_form(rng, n);
          CHECK(forms_equal(g, curvature(c, p, q, w), curvature_by_matrices(c, p, q, w)));
        }
      CHECK(form_is_zero(g, curvature(Connection::zero(g), g.basis[0], g.basis.back(), OneForm::dalpha(n, 0))));
    }
}

TEST_CASE("star connections") {
  Rng rng(seed_from_env() + 7);
  for (int n = 1; n <= 3; ++n)
    for (const char* name : {"der", "inner", "tilde"}) {
      const LieSubalgebra g = lie_by_name(name, n);
      const Omega1Basis basis = omega1_basis(g);
      for (int t = 0; t < 5; ++t) {
        std::vector<Matrix<GR>> x;
        for (std::size_t b = 0; b < g.dim(); ++b) x.push_back(random_matrix(rng, basis.dim(), basis.dim()));
        const Connection complex = connection_from_reduced(g, basis, x);
        CHECK(is_star_connection(complex) == reduced_is_real(complex));
        for (auto& m : x) m = real_part(m);
        const Connection real = connection_from_reduced(g, basis, x);
        CHECK(is_star_connection(real));
        CHECK(reduced_is_real(real));
      }
    }
  CHECK(is_star_connection(inner_closed_form(der_inner(2), GR(make_rational(1, 2)) * Matrix<GR>::identity(3))));
  CHECK_FALSE(is_star_connection(inner_closed_form(der_inner(2), GR::i() * Matrix<GR>::identity(3))));
}

TEST_CASE("canonical connection of inner derivations") {
  Rng rng(seed_from_env() + 8);
  for (int n = 1; n <= 3; ++n) {
    const LieSubalgebra g = der_inner(n);
    const Connection c = canonical_inner_connection(g);
    for (const auto& d : g.basis) {
      const KElement w = *der_is_inner(d);
      const OneForm m = random_one_form(rng, n);
      CHECK(forms_equal(g, conn_apply(c, d, m), act_left(w, m) - act_right(m, w)));
    }
  }
  CHECK_THROWS_AS(canonical_inner_connection(der_full_basis(2)), Error);
}

}  // TEST_SUITE
