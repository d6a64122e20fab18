#pragma once

// The restricted calculus over K_N for a Lie algebra g of derivations.
//
// One-forms are stored over the spanning set
//   da_0 = i de, da_1, ..., da_N
// so coeffs has N+1 entries. The spanning set is not always independent (it
// is not for tilde), so equality of one-forms means equality of evaluations
// on a basis of g.

#include <optional>
#include <vector>

#include "ncg/derivation.hpp"
#include "ncg/kronecker.hpp"
#include "ncg/linalg.hpp"
#include "ncg/random.hpp"

namespace ncg {

struct OneForm {
  int n = 1;
  std::vector<GR> coeffs;

  OneForm() : OneForm(1) {}
  explicit OneForm(int arrows);
  OneForm(int arrows, std::vector<GR> c);

  // da_I for I = 0..N
  static OneForm dalpha(int n, int index);

  bool coeffs_zero() const;

  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const GR& c, OneForm w);
  // Coefficient equality; see forms_equal for equality in the calculus.
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

// da = -i mu da_0 + a^k da_k
OneForm differential(const KElement& a);
// w(d) for any derivation d (no membership check).
KElement eval_raw(const OneForm& w, const Derivation& d);
// w(d); throws NotInSubalgebra when d is outside g.
KElement eval(const OneForm& w, const Derivation& d, const LieSubalgebra& g);
// Both actions only see the scalar part: a w = (lambda + mu) w, w a = lambda w.
OneForm act_left(const KElement& a, const OneForm& w);
OneForm act_right(const OneForm& w, const KElement& a);
// The da_I are hermitian, so star conjugates coefficients.
OneForm form_star(const OneForm& w);

// Evaluations of w on the basis of g, flattened into arrow coordinates.
std::vector<GR> form_signature(const LieSubalgebra& g, const OneForm& w);
bool forms_equal(const LieSubalgebra& g, const OneForm& w, const OneForm& v);
bool form_is_zero(const LieSubalgebra& g, const OneForm& w);

// A basis dx_1..dx_n of Omega^1 chosen among the da_I, greedily over the
// order da_1..da_N, da_0 and then listed by ascending index.
struct Omega1Basis {
  int n = 1;
  std::vector<int> indices;
  // express(I, a): da_I = sum_a express(I, a) dx_a
  Matrix<GR> express;

  std::size_t dim() const { return indices.size(); }
  std::vector<GR> coordinates(const OneForm& w) const;
  OneForm form(const std::vector<GR>& coords) const;
  OneForm basis_form(std::size_t a) const { return OneForm::dalpha(n, indices[a]); }
};

Omega1Basis omega1_basis(const LieSubalgebra& g);

struct CalculusSummary {
  std::size_t dim_omega1 = 0;
  // Basis of {lambda : lambda^I da_I = 0}.
  std::vector<std::vector<GR>> relations;
  bool connected = false;
  std::size_t h0_dim = 0;
  std::size_t h1_dim = 0;
  std::vector<int> basis_indices;
};

CalculusSummary omega1_summary(const LieSubalgebra& g);

// Basis of ker(d) on K_N, in (lambda, mu, alpha) coordinates as KElements.
std::vector<KElement> kernel_of_d(const LieSubalgebra& g);
// a with da = w, coefficientwise: a = i lambda^0 e + lambda^k a_k.
KElement exact_preimage(const OneForm& w);

// Integral of w against the trace: int da = tau(a). Throws IllDefined unless
// tau vanishes on ker(d).
GR integrate(const OneForm& w, const KTrace& t, const LieSubalgebra& g);

// (da db)(p, q) = da(p) db(q) - da(q) db(p)
KElement wedge_eval(const KElement& a, const KElement& b, const Derivation& p, const Derivation& q);
// Checks da db on every pair of basis derivations for all generator pairs and
// `samples` random pairs.
bool wedge_vanishes(const LieSubalgebra& g, int samples, Rng& rng);

std::string to_string(const OneForm& w);

}  // namespace ncg
