#pragma once

// Derivations of K_N. Every derivation is determined by
//   d(e)   = a[k] a_k
//   d(a_i) = b[i][k] a_k
// (indices 0-based in storage, arrows a_1..a_N), and every such datum is a
// derivation. Named subalgebras:
//   der    d_1..d_N, then d_k^l for k = 1..N, l = 1..N
//   inner  dhat = sum_k d_k^k, d_1..d_N
//   tilde  dt_i = d_i + d_i^i

#include <optional>
#include <string>
#include <vector>

#include "ncg/kronecker.hpp"
#include "ncg/scalar.hpp"

namespace ncg {

struct Derivation {
  int n = 1;
  std::vector<GR> a;
  std::vector<std::vector<GR>> b;

  Derivation() : Derivation(1) {}
  explicit Derivation(int arrows);
  Derivation(int arrows, std::vector<GR> a_, std::vector<std::vector<GR>> b_);

  // d_k: e -> i a_k, arrows -> 0 (k is 1-based).
  static Derivation d(int n, int k);
  // d_k^l: a_l -> a_k, everything else -> 0.
  static Derivation d_up(int n, int k, int l);
  static Derivation dhat(int n);
  static Derivation dtilde(int n, int i);

  bool is_zero() const;
  // Coordinates a^1..a^N, b_1^1, b_1^2, .., b_N^N.
  std::vector<GR> coords() const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  friend Derivation operator+(Derivation x, const Derivation& y) { return x += y; }
  friend Derivation operator-(Derivation x, const Derivation& y) { return x -= y; }
  friend Derivation operator*(const GR& c, Derivation x);
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

KElement der_apply(const Derivation& d, const KElement& x);
// [d1, d2] = d1 d2 - d2 d1
Derivation der_bracket(const Derivation& d1, const Derivation& d2);
// d*(x) = (d(x*))*
Derivation der_star(const Derivation& d);
bool der_is_hermitian(const Derivation& d);
// Some w with d(x) = [w, x] for all x, normalized to lambda(w) = 0; none when
// d is outer.
std::optional<KElement> der_is_inner(const Derivation& d);

std::size_t der_rank(const std::vector<Derivation>& ds);

struct LieSubalgebra {
  std::string name;
  int n = 1;
  std::vector<Derivation> basis;
  std::vector<std::string> labels;

  std::size_t dim() const { return basis.size(); }
  // Coordinates of d in the basis; none when d is outside the span.
  std::optional<std::vector<GR>> coordinates(const Derivation& d) const;
  bool contains(const Derivation& d) const { return coordinates(d).has_value(); }
  Derivation combine(const std::vector<GR>& coeffs) const;
  bool bracket_closed() const;
  bool star_closed() const;
  bool basis_independent() const { return der_rank(basis) == basis.size(); }
  bool basis_hermitian() const;
};

LieSubalgebra der_full_basis(int n);
LieSubalgebra der_inner(int n);
LieSubalgebra der_tilde(int n);
// "der", "inner" or "tilde"; throws UsageError otherwise.
LieSubalgebra lie_by_name(const std::string& name, int n);
// Same span with a basis of hermitian derivations, built from (d + d*)/2 and
// (d - d*)/(2i) of the original basis.
LieSubalgebra hermitian_basis(const LieSubalgebra& g);

std::string to_string(const Derivation& d);

}  // namespace ncg
