#pragma once

// Hermitian and star-bimodule forms on Omega^1 over K_N, given by their
// component matrix on a basis dx_1..dx_n of Omega^1:
//   left hermitian   h(w, v) = w^a h_ab conj(v^b)
//   star bimodule    g(w, v) = w^a g_ab v^b
//   right hermitian  h(w, v) = conj(w^a) h_ab v^b
// Components lie in the arrow ideal and satisfy h_ba = (h_ab)*.

#include <string>
#include <vector>

#include "ncg/calculus.hpp"
#include "ncg/connection.hpp"
#include "ncg/random.hpp"

namespace ncg {

enum class FormKind { LeftHermitian, StarBimodule, RightHermitian };

std::string to_string(FormKind kind);

struct HermitianForm {
  FormKind kind = FormKind::LeftHermitian;
  Omega1Basis basis;
  std::vector<std::vector<KElement>> h;

  std::size_t dim() const { return h.size(); }
};

// Builds a form over omega1_basis(g); throws AxiomViolation when an entry
// leaves the ideal or hermitian symmetry fails.
HermitianForm make_form(const LieSubalgebra& g, FormKind kind, std::vector<std::vector<KElement>> h);
void validate_form(const HermitianForm& f);
HermitianForm zero_form(const LieSubalgebra& g, FormKind kind = FormKind::LeftHermitian);

KElement h_eval(const HermitianForm& f, const OneForm& w, const OneForm& v);

enum class Conversion { LeftToBimodule, BimoduleToLeft, BimoduleToRight, LeftToRight };

// h_L(m1, m2) = g(m1, m2*), h_R(m1, m2) = h_L(m1*, m2*). Throws AxiomViolation
// when the input is not of the kind the conversion starts from or fails its
// own axioms.
HermitianForm form_convert(Conversion kind, const HermitianForm& f);

struct CompatibilityReport {
  bool compatible = true;
  std::vector<Residual> residuals;
};

// Residuals on every basis derivation and every pair of basis forms:
//   left   d h(w, v) - h(nabla_d w, v) - h(w, nabla_{d*} v)
//   right  d h(w, v) - h(nabla_{d*} w, v) - h(w, nabla_d v)
//   bimod  d g(w, v) - g(nabla_d w, v) - g(w, nabla_d v)
CompatibilityReport is_compatible(const Connection& c, const HermitianForm& f);

struct DegeneracyReport {
  bool degenerate = false;
  // h_ab x dx_c = 0 for every basis element x of K_N.
  bool annihilates = false;
  int trials = 0;
  // Candidate inverses whose identity residual was nonzero.
  int nonzero_residuals = 0;
};

// Tests sum_b sum_c h_ab h^bc dx_c = dx_a against `trials` random candidate
// inverses h^bc.
DegeneracyReport degenerate_check(const LieSubalgebra& g, const HermitianForm& f, int trials, Rng& rng);

// g = inner: h_00 = rho_0 h0, h_0k = -i rho_k h0, h_k0 = i rho_k h0, h_kl = 0
// with h0 = sum r_i a_i hermitian and rho real.
HermitianForm rho_family(const LieSubalgebra& g, const std::vector<Rational>& rho, const KElement& h0);
// g = tilde: h_ij = delta_ij lambda_i a_i over the basis da_1..da_N.
HermitianForm diagonal_lambda_form(const LieSubalgebra& g, const std::vector<Rational>& lambdas);
// Random form satisfying the axioms.
HermitianForm random_form(const LieSubalgebra& g, FormKind kind, Rng& rng);

}  // namespace ncg
