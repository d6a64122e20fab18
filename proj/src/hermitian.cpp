#include "ncg/hermitian.hpp"

#include "ncg/error.hpp"

namespace ncg {

namespace {

std::string dx_name(const Omega1Basis& basis, std::size_t a) { return "da_" + std::to_string(basis.indices[a]); }

FormKind source_kind(Conversion kind) {
  switch (kind) {
    case Conversion::LeftToBimodule:
    case Conversion::LeftToRight:
      return FormKind::LeftHermitian;
    case Conversion::BimoduleToLeft:
    case Conversion::BimoduleToRight:
      return FormKind::StarBimodule;
  }
  return FormKind::LeftHermitian;
}

}  // namespace

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::LeftHermitian:
      return "left_hermitian";
    case FormKind::StarBimodule:
      return "star_bimodule";
    case FormKind::RightHermitian:
      return "right_hermitian";
  }
  return "unknown";
}

void validate_form(const HermitianForm& f) {
  const std::size_t n = f.basis.dim();
  if (f.h.size() != n) throw AxiomViolation("form has " + std::to_string(f.h.size()) + " rows, Omega^1 has dimension " + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (f.h[a].size() != n)
      throw AxiomViolation("form row " + std::to_string(a) + " has " + std::to_string(f.h[a].size()) + " entries, expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      const KElement& x = f.h[a][b];
      if (x.n != f.basis.n) throw AxiomViolation("h[" + std::to_string(a) + "][" + std::to_string(b) + "] has the wrong number of arrows");
      if (!x.in_ideal()) throw AxiomViolation("h[" + std::to_string(a) + "][" + std::to_string(b) + "] is not in the arrow ideal");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (!(f.h[b][a] == k_star(f.h[a][b])))
        throw AxiomViolation("h[" + std::to_string(b) + "][" + std::to_string(a) + "] is not the star of h[" + std::to_string(a) + "][" + std::to_string(b) + "]");
}

HermitianForm make_form(const LieSubalgebra& g, FormKind kind, std::vector<std::vector<KElement>> h) {
  HermitianForm f{kind, omega1_basis(g), std::move(h)};
  validate_form(f);
  return f;
}

HermitianForm zero_form(const LieSubalgebra& g, FormKind kind) {
  const std::size_t n = omega1_basis(g).dim();
  return make_form(g, kind, std::vector<std::vector<KElement>>(n, std::vector<KElement>(n, KElement(g.n))));
}

KElement h_eval(const HermitianForm& f, const OneForm& w, const OneForm& v) {
  const auto x = f.basis.coordinates(w);
  const auto y = f.basis.coordinates(v);
  KElement out(f.basis.n);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) {
      GR c;
      switch (f.kind) {
        case FormKind::LeftHermitian:
          c = x[a] * y[b].conj();
          break;
        case FormKind::StarBimodule:
          c = x[a] * y[b];
          break;
        case FormKind::RightHermitian:
          c = x[a].conj() * y[b];
          break;
      }
      if (!c.is_zero()) out += c * f.h[a][b];
    }
  return out;
}

HermitianForm form_convert(Conversion kind, const HermitianForm& f) {
  if (f.kind != source_kind(kind))
    throw AxiomViolation("conversion expects a " + to_string(source_kind(kind)) + " form, got " + to_string(f.kind));
  validate_form(f);
  HermitianForm out = f;
  const std::size_t n = f.basis.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const OneForm m1 = f.basis.basis_form(a);
      const OneForm m2 = f.basis.basis_form(b);
      switch (kind) {
        case Conversion::LeftToBimodule:  // g(m1, m2) = h_L(m1, m2*)
          out.h[a][b] = h_eval(f, m1, form_star(m2));
          break;
        case Conversion::BimoduleToLeft:  // h_L(m1, m2) = g(m1, m2*)
          out.h[a][b] = h_eval(f, m1, form_star(m2));
          break;
        case Conversion::BimoduleToRight:  // h_R(m1, m2) = g(m1*, m2)
          out.h[a][b] = h_eval(f, form_star(m1), m2);
          break;
        case Conversion::LeftToRight:  // h_R(m1, m2) = h_L(m1*, m2*)
          out.h[a][b] = h_eval(f, form_star(m1), form_star(m2));
          break;
      }
    }
  switch (kind) {
    case Conversion::LeftToBimodule:
      out.kind = FormKind::StarBimodule;
      break;
    case Conversion::BimoduleToLeft:
      out.kind = FormKind::LeftHermitian;
      break;
    case Conversion::BimoduleToRight:
    case Conversion::LeftToRight:
      out.kind = FormKind::RightHermitian;
      break;
  }
  validate_form(out);
  return out;
}

CompatibilityReport is_compatible(const Connection& c, const HermitianForm& f) {
  const auto& g = c.algebra();
  CompatibilityReport report;
  const std::size_t n = f.basis.dim();
  for (std::size_t b = 0; b < g.dim(); ++b) {
    const Derivation& d = g.basis[b];
    const Derivation ds = der_star(d);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k) {
        const OneForm w = f.basis.basis_form(a);
        const OneForm v = f.basis.basis_form(k);
        KElement r = der_apply(d, h_eval(f, w, v));
        switch (f.kind) {
          case FormKind::LeftHermitian:
            r -= h_eval(f, conn_apply(c, d, w), v) + h_eval(f, w, conn_apply(c, ds, v));
            break;
          case FormKind::RightHermitian:
            r -= h_eval(f, conn_apply(c, ds, w), v) + h_eval(f, w, conn_apply(c, d, v));
            break;
          case FormKind::StarBimodule:
            r -= h_eval(f, conn_apply(c, d, w), v) + h_eval(f, w, conn_apply(c, d, v));
            break;
        }
        if (!r.is_zero()) {
          report.compatible = false;
          report.residuals.push_back(
              {"compat[" + g.labels[b] + "](" + dx_name(f.basis, a) + "," + dx_name(f.basis, k) + ")", to_string(r)});
        }
      }
  }
  return report;
}

DegeneracyReport degenerate_check(const LieSubalgebra& g, const HermitianForm& f, int trials, Rng& rng) {
  DegeneracyReport report;
  report.trials = trials;
  const std::size_t n = f.basis.dim();
  const auto gens = k_basis(g.n);
  report.annihilates = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& x : gens)
        for (std::size_t c = 0; c < n; ++c)
          if (!form_is_zero(g, act_left(k_mul(f.h[a][b], x), f.basis.basis_form(c)))) report.annihilates = false;

  for (int t = 0; t < trials; ++t) {
    std::vector<std::vector<KElement>> inv(n, std::vector<KElement>(n, KElement(g.n)));
    for (auto& row : inv)
      for (auto& x : row) x = random_kelement(rng, g.n);
    bool fails = false;
    for (std::size_t a = 0; a < n; ++a) {
      OneForm residual = OneForm(g.n) - f.basis.basis_form(a);
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) residual += act_left(k_mul(f.h[a][b], inv[b][c]), f.basis.basis_form(c));
      if (!form_is_zero(g, residual)) fails = true;
    }
    if (fails) ++report.nonzero_residuals;
  }
  report.degenerate = report.annihilates && report.nonzero_residuals == trials;
  return report;
}

HermitianForm rho_family(const LieSubalgebra& g, const std::vector<Rational>& rho, const KElement& h0) {
  const std::size_t size = static_cast<std::size_t>(g.n) + 1;
  if (rho.size() != size) throw DimensionMismatch(static_cast<int>(size), static_cast<int>(rho.size()));
  const Omega1Basis basis = omega1_basis(g);
  if (basis.dim() != size) throw Error("rho_family needs a connected calculus");
  std::vector<std::vector<KElement>> h(size, std::vector<KElement>(size, KElement(g.n)));
  h[0][0] = GR(rho[0]) * h0;
  for (std::size_t k = 1; k < size; ++k) {
    h[0][k] = GR(Rational(0), Rational(-rho[k])) * h0;
    h[k][0] = GR(Rational(0), rho[k]) * h0;
  }
  return make_form(g, FormKind::LeftHermitian, std::move(h));
}

HermitianForm diagonal_lambda_form(const LieSubalgebra& g, const std::vector<Rational>& lambdas) {
  const Omega1Basis basis = omega1_basis(g);
  const std::size_t n = basis.dim();
  if (lambdas.size() != n) throw DimensionMismatch(static_cast<int>(n), static_cast<int>(lambdas.size()));
  std::vector<std::vector<KElement>> h(n, std::vector<KElement>(n, KElement(g.n)));
  for (std::size_t a = 0; a < n; ++a) {
    if (basis.indices[a] == 0) throw Error("diagonal_lambda_form expects a basis of arrow differentials");
    h[a][a] = GR(lambdas[a]) * KElement::arrow(g.n, basis.indices[a]);
  }
  return make_form(g, FormKind::LeftHermitian, std::move(h));
}

HermitianForm random_form(const LieSubalgebra& g, FormKind kind, Rng& rng) {
  const std::size_t n = omega1_basis(g).dim();
  std::vector<std::vector<KElement>> h(n, std::vector<KElement>(n, KElement(g.n)));
  for (std::size_t a = 0; a < n; ++a) {
    h[a][a] = random_hermitian_ideal_element(rng, g.n);
    for (std::size_t b = a + 1; b < n; ++b) {
      h[a][b] = random_ideal_element(rng, g.n);
      h[b][a] = k_star(h[a][b]);
    }
  }
  return make_form(g, kind, std::move(h));
}

}  // namespace ncg
