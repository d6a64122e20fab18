#pragma once

// Connections on Omega^1 over K_N.
//
// gamma[b] is an (N+1)x(N+1) matrix for the b-th basis derivation of g:
//   nabla_{d_b} da_I = gamma[b](I, J) da_J
// extended linearly in the derivation. Coefficients act through their scalar
// part only and d(a) lies in the arrow ideal, which annihilates one-forms, so
// every such datum is a bimodule connection.

#include <string>
#include <vector>

#include "ncg/calculus.hpp"
#include "ncg/derivation.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

struct Residual {
  std::string name;
  std::string value;
};

class Connection {
 public:
  // Throws IllDefined when some gamma[b] does not preserve the relations
  // among the da_I.
  Connection(LieSubalgebra g, std::vector<Matrix<GR>> gamma);
  static Connection zero(const LieSubalgebra& g);

  const LieSubalgebra& algebra() const { return g_; }
  const std::vector<Matrix<GR>>& gamma() const { return gamma_; }
  const Matrix<GR>& gamma(std::size_t b) const { return gamma_[b]; }

 private:
  LieSubalgebra g_;
  std::vector<Matrix<GR>> gamma_;
};

// nabla_d w; throws NotInSubalgebra when d is outside g.
OneForm conn_apply(const Connection& c, const Derivation& d, const OneForm& w);
// T_w(d1, d2) = (nabla_d1 w)(d2) - (nabla_d2 w)(d1) - dw(d1, d2) with
// dw(d1, d2) = d1(w(d2)) - d2(w(d1)) - w([d1, d2]).
KElement torsion(const Connection& c, const OneForm& w, const Derivation& d1, const Derivation& d2);
KElement exterior_d(const OneForm& w, const Derivation& d1, const Derivation& d2);
// R(d1, d2) w = nabla_d1 nabla_d2 w - nabla_d2 nabla_d1 w - nabla_[d1,d2] w
OneForm curvature(const Connection& c, const Derivation& d1, const Derivation& d2, const OneForm& w);
// Matrix route: lambda (gamma2 gamma1 - gamma1 gamma2 - gamma([d1, d2])).
OneForm curvature_by_matrices(const Connection& c, const Derivation& d1, const Derivation& d2, const OneForm& w);

// (nabla_d m)* = nabla_{d*} m* checked on every basis derivation and every
// da_I, comparing evaluations.
bool is_star_connection(const Connection& c);
std::vector<Residual> star_residuals(const Connection& c);
// Nonzero torsion values over all basis pairs and all da_I.
std::vector<Residual> torsion_residuals(const Connection& c);
bool is_torsion_free(const Connection& c);

// Matrices of nabla on a basis of Omega^1: nabla_{d_b} dx_a = X[b](a, c) dx_c.
std::vector<Matrix<GR>> reduced_gamma(const Connection& c, const Omega1Basis& basis);
Connection connection_from_reduced(const LieSubalgebra& g, const Omega1Basis& basis, const std::vector<Matrix<GR>>& x);
// The criterion used on a hermitian basis: all reduced matrices are real.
bool reduced_is_real(const Connection& c);

// nabla_{[w, .]} m = [w, m]; requires every basis derivation of g to be inner.
Connection canonical_inner_connection(const LieSubalgebra& g);
// Torsion-free family for g = inner: nabla_dhat da_I = G(I, J) da_J and
// nabla_{d_k} da_I = -G(I, 0) da_k. g must be der_inner(n).
Connection inner_closed_form(const LieSubalgebra& g, const Matrix<GR>& gamma_hat);
// Torsion-free family for g = tilde: nabla_{dt_i} da_j = G(i, j) da_i
// (i, j = 1..N stored 0-based), with da_0 following from the relation.
Connection tilde_closed_form(const LieSubalgebra& g, const Matrix<GR>& gij);

std::string to_string(const Matrix<GR>& m);

}  // namespace ncg
