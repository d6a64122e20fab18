#include "ncg/connection.hpp"

#include "ncg/error.hpp"

namespace ncg {

namespace {

std::vector<GR> require_coordinates(const LieSubalgebra& g, const Derivation& d) {
  auto coords = g.coordinates(d);
  if (!coords) throw NotInSubalgebra("derivation " + to_string(d) + " is not in " + g.name);
  return *coords;
}

// Row vector times matrix.
OneForm row_times(const OneForm& w, const Matrix<GR>& m) {
  OneForm out(w.n);
  for (std::size_t I = 0; I < w.coeffs.size(); ++I) {
    if (w.coeffs[I].is_zero()) continue;
    for (std::size_t J = 0; J < out.coeffs.size(); ++J) out.coeffs[J] += w.coeffs[I] * m(I, J);
  }
  return out;
}

Matrix<GR> gamma_of(const Connection& c, const std::vector<GR>& coords) {
  const std::size_t size = static_cast<std::size_t>(c.algebra().n) + 1;
  Matrix<GR> out(size, size);
  for (std::size_t b = 0; b < coords.size(); ++b)
    if (!coords[b].is_zero()) out = out + coords[b] * c.gamma(b);
  return out;
}

std::string da_name(std::size_t I) { return "da_" + std::to_string(I); }

}  // namespace

Connection::Connection(LieSubalgebra g, std::vector<Matrix<GR>> gamma) : g_(std::move(g)), gamma_(std::move(gamma)) {
  if (gamma_.size() != g_.dim()) throw DimensionMismatch(static_cast<int>(g_.dim()), static_cast<int>(gamma_.size()));
  const std::size_t size = static_cast<std::size_t>(g_.n) + 1;
  for (const auto& m : gamma_)
    if (m.rows() != size || m.cols() != size) throw DimensionMismatch(static_cast<int>(size), static_cast<int>(m.rows()));
  const auto relations = omega1_summary(g_).relations;
  for (std::size_t b = 0; b < gamma_.size(); ++b)
    for (const auto& rel : relations) {
      OneForm image = row_times(OneForm(g_.n, rel), gamma_[b]);
      if (!form_is_zero(g_, image))
        throw IllDefined("connection is not well defined: gamma(" + g_.labels[b] + ") does not preserve the relations");
    }
}

Connection Connection::zero(const LieSubalgebra& g) {
  const std::size_t size = static_cast<std::size_t>(g.n) + 1;
  return Connection(g, std::vector<Matrix<GR>>(g.dim(), Matrix<GR>(size, size)));
}

OneForm conn_apply(const Connection& c, const Derivation& d, const OneForm& w) {
  return row_times(w, gamma_of(c, require_coordinates(c.algebra(), d)));
}

KElement exterior_d(const OneForm& w, const Derivation& d1, const Derivation& d2) {
  return der_apply(d1, eval_raw(w, d2)) - der_apply(d2, eval_raw(w, d1)) - eval_raw(w, der_bracket(d1, d2));
}

KElement torsion(const Connection& c, const OneForm& w, const Derivation& d1, const Derivation& d2) {
  const auto& g = c.algebra();
  return eval(conn_apply(c, d1, w), d2, g) - eval(conn_apply(c, d2, w), d1, g) - exterior_d(w, d1, d2);
}

OneForm curvature(const Connection& c, const Derivation& d1, const Derivation& d2, const OneForm& w) {
  return conn_apply(c, d1, conn_apply(c, d2, w)) - conn_apply(c, d2, conn_apply(c, d1, w)) -
         conn_apply(c, der_bracket(d1, d2), w);
}

OneForm curvature_by_matrices(const Connection& c, const Derivation& d1, const Derivation& d2, const OneForm& w) {
  const auto& g = c.algebra();
  const Matrix<GR> g1 = gamma_of(c, require_coordinates(g, d1));
  const Matrix<GR> g2 = gamma_of(c, require_coordinates(g, d2));
  const Matrix<GR> g12 = gamma_of(c, require_coordinates(g, der_bracket(d1, d2)));
  return row_times(w, g2 * g1 - g1 * g2 - g12);
}

std::vector<Residual> star_residuals(const Connection& c) {
  const auto& g = c.algebra();
  std::vector<Residual> out;
  for (std::size_t b = 0; b < g.dim(); ++b) {
    const Derivation ds = der_star(g.basis[b]);
    for (int I = 0; I <= g.n; ++I) {
      const OneForm m = OneForm::dalpha(g.n, I);
      const OneForm lhs = form_star(conn_apply(c, g.basis[b], m));
      const OneForm rhs = conn_apply(c, ds, form_star(m));
      if (!forms_equal(g, lhs, rhs))
        out.push_back({"star[" + g.labels[b] + "](" + da_name(static_cast<std::size_t>(I)) + ")", to_string(lhs - rhs)});
    }
  }
  return out;
}

bool is_star_connection(const Connection& c) { return star_residuals(c).empty(); }

std::vector<Residual> torsion_residuals(const Connection& c) {
  const auto& g = c.algebra();
  std::vector<Residual> out;
  for (std::size_t p = 0; p < g.dim(); ++p)
    for (std::size_t q = p + 1; q < g.dim(); ++q)
      for (int I = 0; I <= g.n; ++I) {
        KElement t = torsion(c, OneForm::dalpha(g.n, I), g.basis[p], g.basis[q]);
        if (!t.is_zero())
          out.push_back({"torsion[" + g.labels[p] + "," + g.labels[q] + "](" + da_name(static_cast<std::size_t>(I)) + ")",
                         to_string(t)});
      }
  return out;
}

bool is_torsion_free(const Connection& c) { return torsion_residuals(c).empty(); }

std::vector<Matrix<GR>> reduced_gamma(const Connection& c, const Omega1Basis& basis) {
  std::vector<Matrix<GR>> out;
  const std::size_t n = basis.dim();
  for (std::size_t b = 0; b < c.gamma().size(); ++b) {
    Matrix<GR> x(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      OneForm image = row_times(basis.basis_form(a), c.gamma(b));
      auto coords = basis.coordinates(image);
      for (std::size_t k = 0; k < n; ++k) x(a, k) = coords[k];
    }
    out.push_back(std::move(x));
  }
  return out;
}

Connection connection_from_reduced(const LieSubalgebra& g, const Omega1Basis& basis, const std::vector<Matrix<GR>>& x) {
  const std::size_t size = static_cast<std::size_t>(g.n) + 1;
  std::vector<Matrix<GR>> gamma;
  for (const auto& xb : x) {
    Matrix<GR> lifted = basis.express * xb;  // (N+1) x n
    Matrix<GR> full(size, size);
    for (std::size_t I = 0; I < size; ++I)
      for (std::size_t k = 0; k < basis.dim(); ++k) full(I, static_cast<std::size_t>(basis.indices[k])) = lifted(I, k);
    gamma.push_back(std::move(full));
  }
  return Connection(g, std::move(gamma));
}

bool reduced_is_real(const Connection& c) {
  const Omega1Basis basis = omega1_basis(c.algebra());
  for (const auto& x : reduced_gamma(c, basis))
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t k = 0; k < x.cols(); ++k)
        if (!x(r, k).is_real()) return false;
  return true;
}

Connection canonical_inner_connection(const LieSubalgebra& g) {
  // [w, m] = (lambda_w + mu_w) m - lambda_w m = mu_w m
  const std::size_t size = static_cast<std::size_t>(g.n) + 1;
  std::vector<Matrix<GR>> gamma;
  for (std::size_t b = 0; b < g.dim(); ++b) {
    auto w = der_is_inner(g.basis[b]);
    if (!w) throw Error("canonical inner connection needs inner derivations; " + g.labels[b] + " is outer");
    gamma.push_back(w->mu * Matrix<GR>::identity(size));
  }
  return Connection(g, std::move(gamma));
}

Connection inner_closed_form(const LieSubalgebra& g, const Matrix<GR>& gamma_hat) {
  if (g.basis != der_inner(g.n).basis) throw Error("inner_closed_form expects the inner basis dhat, d_1..d_N");
  const std::size_t size = static_cast<std::size_t>(g.n) + 1;
  if (gamma_hat.rows() != size || gamma_hat.cols() != size)
    throw DimensionMismatch(static_cast<int>(size), static_cast<int>(gamma_hat.rows()));
  std::vector<Matrix<GR>> gamma{gamma_hat};
  for (std::size_t k = 1; k < size; ++k) {
    Matrix<GR> m(size, size);
    for (std::size_t I = 0; I < size; ++I) m(I, k) = -gamma_hat(I, 0);
    gamma.push_back(std::move(m));
  }
  return Connection(g, std::move(gamma));
}

Connection tilde_closed_form(const LieSubalgebra& g, const Matrix<GR>& gij) {
  if (g.basis != der_tilde(g.n).basis) throw Error("tilde_closed_form expects the basis dt_1..dt_N");
  const std::size_t n = static_cast<std::size_t>(g.n);
  if (gij.rows() != n || gij.cols() != n) throw DimensionMismatch(static_cast<int>(n), static_cast<int>(gij.rows()));
  std::vector<Matrix<GR>> gamma;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<GR> m(n + 1, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      m(j + 1, i + 1) = gij(i, j);
      m(0, i + 1) -= gij(i, j);
    }
    gamma.push_back(std::move(m));
  }
  return Connection(g, std::move(gamma));
}

std::string to_string(const Matrix<GR>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += "]";
  }
  return out + "]";
}

}  // namespace ncg
