#include "ncg/calculus.hpp"

#include <algorithm>

#include "ncg/error.hpp"

namespace ncg {

namespace {

void require_same_n(int lhs, int rhs) {
  if (lhs != rhs) throw DimensionMismatch(lhs, rhs);
}

// Rows: da_0..da_N. Columns: arrow coordinates of the evaluation on each
// basis derivation of g.
Matrix<GR> evaluation_matrix(const LieSubalgebra& g) {
  const std::size_t width = g.dim() * static_cast<std::size_t>(g.n);
  Matrix<GR> m(static_cast<std::size_t>(g.n) + 1, width);
  for (int I = 0; I <= g.n; ++I) {
    auto sig = form_signature(g, OneForm::dalpha(g.n, I));
    for (std::size_t j = 0; j < width; ++j) m(static_cast<std::size_t>(I), j) = sig[j];
  }
  return m;
}

// Rows: d of each basis element of K_N (1, e, a_k).
Matrix<GR> differential_matrix(const LieSubalgebra& g) {
  const auto basis = k_basis(g.n);
  const std::size_t width = g.dim() * static_cast<std::size_t>(g.n);
  Matrix<GR> m(basis.size(), width);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    auto sig = form_signature(g, differential(basis[r]));
    for (std::size_t j = 0; j < width; ++j) m(r, j) = sig[j];
  }
  return m;
}

}  // namespace

OneForm::OneForm(int arrows) : n(arrows), coeffs(static_cast<std::size_t>(arrows) + 1) {
  if (arrows < 1) throw Error("K_N needs at least one arrow, got " + std::to_string(arrows));
}

OneForm::OneForm(int arrows, std::vector<GR> c) : n(arrows), coeffs(std::move(c)) {
  if (arrows < 1) throw Error("K_N needs at least one arrow, got " + std::to_string(arrows));
  if (static_cast<int>(coeffs.size()) != arrows + 1) throw DimensionMismatch(arrows + 1, static_cast<int>(coeffs.size()));
}

OneForm OneForm::dalpha(int n, int index) {
  if (index < 0 || index > n) throw Error("da index " + std::to_string(index) + " out of range 0.." + std::to_string(n));
  OneForm w(n);
  w.coeffs[static_cast<std::size_t>(index)] = GR(1);
  return w;
}

bool OneForm::coeffs_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const GR& c) { return c.is_zero(); });
}

OneForm& OneForm::operator+=(const OneForm& o) {
  require_same_n(n, o.n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  require_same_n(n, o.n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

OneForm operator*(const GR& c, OneForm w) {
  for (auto& x : w.coeffs) x *= c;
  return w;
}

OneForm differential(const KElement& a) {
  OneForm w(a.n);
  w.coeffs[0] = -(GR::i() * a.mu);
  for (std::size_t k = 0; k < a.alpha.size(); ++k) w.coeffs[k + 1] = a.alpha[k];
  return w;
}

KElement eval_raw(const OneForm& w, const Derivation& d) {
  require_same_n(w.n, d.n);
  KElement out(w.n);
  // da_0(d) = i d(e) = i a^k a_k
  const GR c0 = w.coeffs[0] * GR::i();
  for (std::size_t k = 0; k < out.alpha.size(); ++k) out.alpha[k] = c0 * d.a[k];
  for (std::size_t i = 0; i < d.b.size(); ++i) {
    const GR& c = w.coeffs[i + 1];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < out.alpha.size(); ++k) out.alpha[k] += c * d.b[i][k];
  }
  return out;
}

KElement eval(const OneForm& w, const Derivation& d, const LieSubalgebra& g) {
  if (!g.contains(d)) throw NotInSubalgebra("derivation " + to_string(d) + " is not in " + g.name);
  return eval_raw(w, d);
}

OneForm act_left(const KElement& a, const OneForm& w) {
  require_same_n(a.n, w.n);
  return (a.lambda + a.mu) * w;
}

OneForm act_right(const OneForm& w, const KElement& a) {
  require_same_n(a.n, w.n);
  return a.lambda * w;
}

OneForm form_star(const OneForm& w) {
  OneForm out(w);
  for (auto& c : out.coeffs) c = c.conj();
  return out;
}

std::vector<GR> form_signature(const LieSubalgebra& g, const OneForm& w) {
  std::vector<GR> out;
  out.reserve(g.dim() * static_cast<std::size_t>(g.n));
  for (const auto& d : g.basis) {
    auto v = eval_raw(w, d);
    out.insert(out.end(), v.alpha.begin(), v.alpha.end());
  }
  return out;
}

bool forms_equal(const LieSubalgebra& g, const OneForm& w, const OneForm& v) {
  return form_signature(g, w) == form_signature(g, v);
}

bool form_is_zero(const LieSubalgebra& g, const OneForm& w) {
  for (const auto& x : form_signature(g, w))
    if (!x.is_zero()) return false;
  return true;
}

std::vector<GR> Omega1Basis::coordinates(const OneForm& w) const {
  require_same_n(n, w.n);
  std::vector<GR> out(dim());
  for (std::size_t I = 0; I < w.coeffs.size(); ++I) {
    if (w.coeffs[I].is_zero()) continue;
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += w.coeffs[I] * express(I, a);
  }
  return out;
}

OneForm Omega1Basis::form(const std::vector<GR>& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch(static_cast<int>(dim()), static_cast<int>(coords.size()));
  OneForm w(n);
  for (std::size_t a = 0; a < coords.size(); ++a) w.coeffs[static_cast<std::size_t>(indices[a])] = coords[a];
  return w;
}

Omega1Basis omega1_basis(const LieSubalgebra& g) {
  const Matrix<GR> m = evaluation_matrix(g);
  const std::size_t width = m.cols();
  std::vector<int> order;
  for (int I = 1; I <= g.n; ++I) order.push_back(I);
  order.push_back(0);

  Omega1Basis out;
  out.n = g.n;
  LinearSystem<GR> probe(width);
  for (int I : order) {
    std::vector<GR> row(width);
    for (std::size_t j = 0; j < width; ++j) row[j] = m(static_cast<std::size_t>(I), j);
    const std::size_t before = probe.rank();
    probe.add_dense(row, GR(0));
    if (probe.rank() > before) out.indices.push_back(I);
  }
  std::sort(out.indices.begin(), out.indices.end());

  // Solve sum_a c_a sig(dx_a) = sig(da_I) for every I.
  const std::size_t dim = out.indices.size();
  out.express = Matrix<GR>(static_cast<std::size_t>(g.n) + 1, dim);
  for (int I = 0; I <= g.n; ++I) {
    LinearSystem<GR> sys(dim);
    for (std::size_t j = 0; j < width; ++j) {
      LinearSystem<GR>::Row row;
      for (std::size_t a = 0; a < dim; ++a) {
        const GR& v = m(static_cast<std::size_t>(out.indices[a]), j);
        if (!v.is_zero()) row.emplace(a, v);
      }
      sys.add(std::move(row), m(static_cast<std::size_t>(I), j));
    }
    auto sol = sys.solve();
    if (!sol) throw Error("internal: da_" + std::to_string(I) + " is not in the span of the chosen basis");
    for (std::size_t a = 0; a < dim; ++a) out.express(static_cast<std::size_t>(I), a) = sol->particular[a];
  }
  return out;
}

CalculusSummary omega1_summary(const LieSubalgebra& g) {
  CalculusSummary s;
  const Matrix<GR> m = evaluation_matrix(g);
  s.dim_omega1 = rank(m);
  s.relations = nullspace(m.transpose());
  s.connected = s.dim_omega1 == static_cast<std::size_t>(g.n) + 1;
  const std::size_t rank_d = rank(differential_matrix(g));
  s.h0_dim = static_cast<std::size_t>(g.n) + 2 - rank_d;
  s.h1_dim = s.dim_omega1 - rank_d;
  s.basis_indices = omega1_basis(g).indices;
  return s;
}

std::vector<KElement> kernel_of_d(const LieSubalgebra& g) {
  const Matrix<GR> m = differential_matrix(g);
  std::vector<KElement> out;
  for (const auto& v : nullspace(m.transpose())) {
    KElement x(g.n);
    x.lambda = v[0];
    x.mu = v[1];
    for (std::size_t k = 0; k < x.alpha.size(); ++k) x.alpha[k] = v[k + 2];
    out.push_back(std::move(x));
  }
  return out;
}

KElement exact_preimage(const OneForm& w) {
  KElement a(w.n);
  a.mu = GR::i() * w.coeffs[0];
  for (std::size_t k = 0; k < a.alpha.size(); ++k) a.alpha[k] = w.coeffs[k + 1];
  return a;
}

GR integrate(const OneForm& w, const KTrace& t, const LieSubalgebra& g) {
  for (const auto& z : kernel_of_d(g)) {
    if (!k_trace_eval(t, z).is_zero())
      throw IllDefined("integral is ill-defined: the trace does not vanish on closed element " + to_string(z));
  }
  return k_trace_eval(t, exact_preimage(w));
}

KElement wedge_eval(const KElement& a, const KElement& b, const Derivation& p, const Derivation& q) {
  return k_mul(der_apply(p, a), der_apply(q, b)) - k_mul(der_apply(q, a), der_apply(p, b));
}

bool wedge_vanishes(const LieSubalgebra& g, int samples, Rng& rng) {
  std::vector<std::pair<KElement, KElement>> pairs;
  const auto gens = k_basis(g.n);
  for (const auto& x : gens)
    for (const auto& y : gens) pairs.emplace_back(x, y);
  for (int s = 0; s < samples; ++s) pairs.emplace_back(random_kelement(rng, g.n), random_kelement(rng, g.n));
  for (const auto& [a, b] : pairs)
    for (std::size_t p = 0; p < g.dim(); ++p)
      for (std::size_t q = 0; q < g.dim(); ++q)
        if (!wedge_eval(a, b, g.basis[p], g.basis[q]).is_zero()) return false;
  return true;
}

std::string to_string(const OneForm& w) {
  std::string out;
  for (std::size_t I = 0; I < w.coeffs.size(); ++I) {
    if (w.coeffs[I].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(w.coeffs[I]) + ")da_" + std::to_string(I);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ncg
