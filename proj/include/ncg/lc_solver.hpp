#pragma once

// Levi-Civita connections over K_N as an exact linear system.
//
// Unknowns are the matrices of nabla on a basis of Omega^1,
//   nabla_{d_b} dx_a = X[b](a, c) dx_c,
// each entry split into real and imaginary rational parts (compatibility is
// conjugate-linear in part of the unknowns). They are ordered
// lexicographically by (b, a, c, re/im). Equations are the torsion values on
// every basis pair and the compatibility residuals on every basis derivation
// and pair of basis forms, plus Im X = 0 when a star connection is asked for.

#include <optional>
#include <string>
#include <vector>

#include "ncg/connection.hpp"
#include "ncg/hermitian.hpp"

namespace ncg {

enum class LCStatus { Unique, Family, Empty };

std::string to_string(LCStatus s);

struct LCCheck {
  std::string name;
  bool pass = true;
  std::optional<Residual> residual;
};

struct LCSolution {
  LCStatus status = LCStatus::Empty;
  // The algebra the unknowns refer to; a hermitian basis of the input span
  // when star connections were requested on a non-hermitian basis.
  LieSubalgebra g;
  Omega1Basis basis;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::optional<std::string> violated;
  // Real coordinates of the particular solution and of the kernel basis.
  std::vector<Rational> particular_vector;
  std::vector<std::vector<Rational>> kernel_vectors;
  std::optional<Connection> particular;
  // Independent re-verification of outputs against the raw definitions.
  std::vector<LCCheck> checks;

  std::size_t kernel_dim() const { return kernel_vectors.size(); }
  // particular + sum t_k kernel_k
  Connection member(const std::vector<Rational>& t) const;
  bool contains(const Connection& c) const;
};

// Throws AxiomViolation when the form fails its axioms.
LCSolution solve_levi_civita(const LieSubalgebra& g, const HermitianForm& h, bool star_flag);

// Real unknown vector of a connection (reduced matrices, re/im split).
std::vector<Rational> lc_unknowns(const Connection& c, const Omega1Basis& basis);

}  // namespace ncg
