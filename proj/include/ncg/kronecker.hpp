#pragma once

// The Kronecker algebra K_N: span of 1, e and the arrows a_1..a_N with
//   e^2 = e,  e a_k = a_k,  a_k e = 0,  a_j a_k = 0.
// Every element is stored in the unique normal form
//   lambda*1 + mu*e + alpha[0]*a_1 + ... + alpha[N-1]*a_N.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ncg/scalar.hpp"

namespace ncg {

struct KElement {
  int n = 1;
  GR lambda;
  GR mu;
  std::vector<GR> alpha;

  KElement() : alpha(1) {}
  explicit KElement(int arrows);
  KElement(int arrows, GR l, GR m, std::vector<GR> a);

  static KElement zero(int n) { return KElement(n); }
  static KElement one(int n);
  static KElement scalar(int n, const GR& c);
  static KElement e(int n);
  // k is 1-based, matching a_1..a_N.
  static KElement arrow(int n, int k);

  bool is_zero() const;
  // lambda = mu = 0, i.e. the element lies in the ideal spanned by the arrows.
  bool in_ideal() const { return lambda.is_zero() && mu.is_zero(); }

  KElement& operator+=(const KElement& o);
  KElement& operator-=(const KElement& o);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  KElement operator-() const;
  friend KElement operator*(const GR& c, const KElement& a);
  friend bool operator==(const KElement&, const KElement&) = default;
};

// Basis {1, e, a_1, ..., a_N} in that order.
std::vector<KElement> k_basis(int n);

KElement k_mul(const KElement& a, const KElement& b);
inline KElement operator*(const KElement& a, const KElement& b) { return k_mul(a, b); }
KElement k_commutator(const KElement& a, const KElement& b);
KElement k_star(const KElement& a);
// Throws NotInvertible naming the failed condition.
KElement k_inverse(const KElement& a);
bool k_is_central(const KElement& a);
// Same question answered by commuting with e and every arrow.
bool k_commutes_with_generators(const KElement& a);

struct KTrace {
  Rational tau0;
  Rational tau1;
};

GR k_trace_eval(const KTrace& t, const KElement& a);
// Element with tau(a* a) < 0, or none for the zero trace.
std::optional<KElement> k_positive_trace_witness(const KTrace& t, int n);

std::string to_string(const KElement& a);
std::ostream& operator<<(std::ostream& os, const KElement& a);

}  // namespace ncg
