#pragma once

// The noncommutative torus with a formal unit q: finitely supported sums
// c_{kl} U^k V^l with c_{kl} Laurent scalars and
//   (U^k V^l)(U^m V^n) = q^{lm} U^{k+m} V^{l+n}.
// One-forms are pairs (a, b) meaning a w + b n in the central basis
// w = -i U^{-1} dU, n = -i V^{-1} dV, with w(d_b) = delta_1b, n(d_b) = delta_2b.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/connection.hpp"
#include "ncg/random.hpp"
#include "ncg/scalar.hpp"

namespace ncg {

class TorusElement {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Key, LaurentScalar>;

  TorusElement() = default;
  TorusElement(const LaurentScalar& c);  // NOLINT: scalars embed implicitly
  TorusElement(const GR& c) : TorusElement(LaurentScalar(c)) {}  // NOLINT
  TorusElement(int c) : TorusElement(LaurentScalar(c)) {}  // NOLINT

  static TorusElement monomial(const LaurentScalar& c, std::int64_t k, std::int64_t l);
  static TorusElement U(std::int64_t k = 1) { return monomial(LaurentScalar(1), k, 0); }
  static TorusElement V(std::int64_t l = 1) { return monomial(LaurentScalar(1), 0, l); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Support inside {(0, 0)}: the center of the algebra.
  bool is_scalar() const;
  LaurentScalar coefficient(std::int64_t k, std::int64_t l) const;

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  TorusElement operator-() const;
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

 private:
  void add_term(const Key& key, const LaurentScalar& c);
  Terms terms_;
};

TorusElement t_mul(const TorusElement& x, const TorusElement& y);
inline TorusElement operator*(const TorusElement& x, const TorusElement& y) { return t_mul(x, y); }
TorusElement t_star(const TorusElement& x);
// a in {1, 2}: d_1(U^k V^l) = i k U^k V^l, d_2(U^k V^l) = i l U^k V^l.
TorusElement t_derive(int a, const TorusElement& x);
TorusElement t_commutator(const TorusElement& x, const TorusElement& y);

struct TorusOneForm {
  TorusElement w;  // coefficient of w = omega^1
  TorusElement e;  // coefficient of n = omega^2

  const TorusElement& coef(int b) const { return b == 1 ? w : e; }
  TorusElement& coef(int b) { return b == 1 ? w : e; }

  TorusOneForm& operator+=(const TorusOneForm& o);
  TorusOneForm& operator-=(const TorusOneForm& o);
  friend TorusOneForm operator+(TorusOneForm a, const TorusOneForm& b) { return a += b; }
  friend TorusOneForm operator-(TorusOneForm a, const TorusOneForm& b) { return a -= b; }
  friend bool operator==(const TorusOneForm&, const TorusOneForm&) = default;
  bool is_zero() const { return w.is_zero() && e.is_zero(); }
};

TorusOneForm t_basis_form(int b);
// Evaluation on d_a.
TorusElement t_eval(const TorusOneForm& f, int a);
TorusOneForm t_act_left(const TorusElement& x, const TorusOneForm& f);
TorusOneForm t_act_right(const TorusOneForm& f, const TorusElement& x);
// dx = (d_1 x) w + (d_2 x) n
TorusOneForm t_d(const TorusElement& x);
// Coefficient of w n in d(a w + b n): d_1 b - d_2 a.
TorusElement t_d1(const TorusOneForm& f);
// x with t_d(x) = f, when one exists.
std::optional<TorusElement> t_exact_preimage(const TorusOneForm& f);
// (a, b) with t_d1 = c, when one exists (c_00 = 0).
std::optional<TorusOneForm> t_d1_preimage(const TorusElement& c);

struct TorusCohomology {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
};

// Cohomology of the complex restricted to supports in [-K, K]^2, which d
// preserves. Throws UsageError for K < 1.
TorusCohomology t_cohomology(int window);

// gamma[b-1][a-1][c-1] = Gamma^b_{ac}, nabla_{d_a} omega^b = Gamma^b_{ac} omega^c.
struct TorusConnection {
  std::array<std::array<std::array<TorusElement, 2>, 2>, 2> gamma;

  const TorusElement& G(int b, int a, int c) const { return gamma[b - 1][a - 1][c - 1]; }
  TorusElement& G(int b, int a, int c) { return gamma[b - 1][a - 1][c - 1]; }
  friend bool operator==(const TorusConnection&, const TorusConnection&) = default;
};

using TorusMatrix = std::array<std::array<TorusElement, 2>, 2>;

// h^{ab} together with a caller-supplied inverse h_{ab}.
struct TorusHermitianData {
  TorusMatrix up;
  TorusMatrix down;

  // Throws NotInvertible when the inverse identities fail and AxiomViolation
  // when (h^{ab})* != h^{ba}.
  TorusHermitianData(TorusMatrix up_, TorusMatrix down_);
  // Hermitian and antihermitian parts of h_{ab} = f_{ab} + i g_{ab}.
  TorusElement f(int a, int b) const;
  TorusElement g(int a, int b) const;
};

TorusOneForm t_conn_apply(const TorusConnection& c, int a, const TorusOneForm& f);
// T_w(d_1, d_2) with dw(d_1, d_2) = d_1(w(d_2)) - d_2(w(d_1)).
TorusElement t_torsion(const TorusConnection& c, const TorusOneForm& f);
// Gamma^a_{12} = Gamma^a_{21} for a = 1, 2.
bool t_is_torsion_free(const TorusConnection& c);
bool t_is_torsion_free_by_definition(const TorusConnection& c);

struct TorusCompatibility {
  bool compatible = true;
  std::vector<Residual> residuals;
};

// d_c h^{ab} = Gamma^{ab}_c + (Gamma^{ba}_c)* with Gamma^{ab}_c = Gamma^a_{cp} h^{pb}.
TorusCompatibility t_is_compatible(const TorusConnection& c, const TorusHermitianData& h);
// h(f_a w^a, g_b w^b) = f_a h^{ab} g_b*
TorusElement t_h_eval(const TorusMatrix& up, const TorusOneForm& x, const TorusOneForm& y);
// d_c h(w^a, w^b) = h(nabla_c w^a, w^b) + h(w^a, nabla_c w^b) through t_h_eval.
TorusCompatibility t_compatible_by_definition(const TorusConnection& c, const TorusMatrix& up);
// d_c g^{ab} = Gamma^a_{cp} g^{pb} + g^{ap} Gamma^b_{cp}
TorusCompatibility t_g_compatible(const TorusConnection& c, const TorusMatrix& g);

TorusConnection t_build_diagonal_lc(const TorusElement& h1, const TorusElement& h1inv, const TorusElement& h2,
                                    const TorusElement& h2inv);
TorusHermitianData t_diagonal_data(const TorusElement& h1, const TorusElement& h1inv, const TorusElement& h2,
                                   const TorusElement& h2inv);
TorusConnection t_build_offdiagonal_lc(const TorusElement& hhat, const TorusElement& hhatinv);
TorusHermitianData t_offdiagonal_data(const TorusElement& hhat, const TorusElement& hhatinv);
// h^{ab} = [[0, i lambda], [-i lambda, 0]], nabla_{d_1} n = gamma1 w,
// nabla_{d_2} w = gamma2 n.
TorusConnection t_build_constant_offdiagonal(const Rational& gamma1, const Rational& gamma2);
TorusHermitianData t_constant_offdiagonal_data(const Rational& lambda);

struct TorusGFormExample {
  TorusConnection connection;
  TorusMatrix g;
};

// g^1 = U^k V^l, g^2 = z U^k V^l. Throws DivisionByZero for z = 0.
TorusGFormExample t_build_gform_example(std::int64_t k, std::int64_t l, const GR& z);

using TorusTensor = std::array<std::array<std::array<TorusElement, 2>, 2>, 2>;

// s[a-1][b-1][c-1] = S^{ab}_c. Gamma^b_{ac} = (1/2 d_a h^{bp} + i S^{bp}_a) h_{pc}.
// Throws AxiomViolation unless (S^{ab}_c)* = S^{ba}_c.
TorusConnection t_build_s_family(const TorusHermitianData& h, const TorusTensor& s);
// t[a-1][b-1][c-1] = T^{ab}_c.
// Gamma^c_{ab} = -1/2 h^{cp} d_a h_{pb} - 1/2 h^{cp} d_b h_{pa} + 1/2 h^{cp} d_p h_{ab} + i T^{cp}_a h_{pb}.
TorusConnection t_build_t_family(const TorusHermitianData& h, const TorusTensor& t);
// Residuals d_q g_{ab} - h_{qc} T^{cp}_b h_{pa} + h_{qc} T^{cp}_a h_{pb}.
std::vector<Residual> t_torsion_free_t_residuals(const TorusHermitianData& h, const TorusTensor& t);
// The T tensor of the off-diagonal example.
TorusTensor t_offdiagonal_t(const TorusElement& hhat, const TorusElement& hhatinv);

struct TorusConnectionFlags {
  bool bimodule = false;
  bool star = false;
};

TorusConnectionFlags t_bimodule_and_star_checks(const TorusConnection& c);

TorusElement random_torus_element(Rng& rng, int max_terms = 3, int exponent_bound = 2);
// t[a][b][c] with t[b][a][c] = t[a][b][c]*
TorusTensor random_hermitian_tensor(Rng& rng);

std::string to_string(const TorusElement& x);

}  // namespace ncg
