#include "ncg/derivation.hpp"

#include "ncg/error.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

namespace {

using Square = std::vector<std::vector<GR>>;

Square zero_square(int n) { return Square(static_cast<std::size_t>(n), std::vector<GR>(static_cast<std::size_t>(n))); }

void require_same_n(int lhs, int rhs) {
  if (lhs != rhs) throw DimensionMismatch(lhs, rhs);
}

void check_index(int n, int k) {
  if (k < 1 || k > n) throw Error("derivation index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
}

// row vector times matrix
std::vector<GR> vec_mat(const std::vector<GR>& v, const Square& m) {
  std::vector<GR> out(m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += v[i] * m[i][k];
  }
  return out;
}

Square mat_mul(const Square& x, const Square& y) {
  Square out(x.size(), std::vector<GR>(y.empty() ? 0 : y[0].size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = vec_mat(x[i], y);
  return out;
}

}  // namespace

Derivation::Derivation(int arrows) : n(arrows), a(static_cast<std::size_t>(arrows)), b(zero_square(arrows)) {
  if (arrows < 1) throw Error("K_N needs at least one arrow, got " + std::to_string(arrows));
}

Derivation::Derivation(int arrows, std::vector<GR> a_, std::vector<std::vector<GR>> b_)
    : n(arrows), a(std::move(a_)), b(std::move(b_)) {
  if (arrows < 1) throw Error("K_N needs at least one arrow, got " + std::to_string(arrows));
  if (static_cast<int>(a.size()) != n) throw DimensionMismatch(n, static_cast<int>(a.size()));
  if (static_cast<int>(b.size()) != n) throw DimensionMismatch(n, static_cast<int>(b.size()));
  for (const auto& row : b)
    if (static_cast<int>(row.size()) != n) throw DimensionMismatch(n, static_cast<int>(row.size()));
}

Derivation Derivation::d(int n, int k) {
  check_index(n, k);
  Derivation out(n);
  out.a[static_cast<std::size_t>(k - 1)] = GR::i();
  return out;
}

Derivation Derivation::d_up(int n, int k, int l) {
  check_index(n, k);
  check_index(n, l);
  Derivation out(n);
  out.b[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(k - 1)] = GR(1);
  return out;
}

Derivation Derivation::dhat(int n) {
  Derivation out(n);
  for (int k = 0; k < n; ++k) out.b[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = GR(1);
  return out;
}

Derivation Derivation::dtilde(int n, int i) { return d(n, i) + d_up(n, i, i); }

bool Derivation::is_zero() const {
  for (const auto& x : coords())
    if (!x.is_zero()) return false;
  return true;
}

std::vector<GR> Derivation::coords() const {
  std::vector<GR> out(a);
  for (const auto& row : b) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  require_same_n(n, o.n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += o.a[i];
    for (std::size_t k = 0; k < a.size(); ++k) b[i][k] += o.b[i][k];
  }
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  require_same_n(n, o.n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] -= o.a[i];
    for (std::size_t k = 0; k < a.size(); ++k) b[i][k] -= o.b[i][k];
  }
  return *this;
}

Derivation operator*(const GR& c, Derivation x) {
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    x.a[i] *= c;
    for (auto& v : x.b[i]) v *= c;
  }
  return x;
}

KElement der_apply(const Derivation& d, const KElement& x) {
  require_same_n(d.n, x.n);
  KElement out(d.n);
  for (std::size_t k = 0; k < out.alpha.size(); ++k) out.alpha[k] = x.mu * d.a[k];
  for (std::size_t i = 0; i < x.alpha.size(); ++i) {
    if (x.alpha[i].is_zero()) continue;
    for (std::size_t k = 0; k < out.alpha.size(); ++k) out.alpha[k] += x.alpha[i] * d.b[i][k];
  }
  return out;
}

Derivation der_bracket(const Derivation& d1, const Derivation& d2) {
  require_same_n(d1.n, d2.n);
  Derivation out(d1.n);
  auto a21 = vec_mat(d2.a, d1.b);
  auto a12 = vec_mat(d1.a, d2.b);
  auto b21 = mat_mul(d2.b, d1.b);
  auto b12 = mat_mul(d1.b, d2.b);
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    out.a[i] = a21[i] - a12[i];
    for (std::size_t k = 0; k < out.a.size(); ++k) out.b[i][k] = b21[i][k] - b12[i][k];
  }
  return out;
}

Derivation der_star(const Derivation& d) {
  // e* = 1 - e flips the sign of the e-datum; the arrows are hermitian.
  Derivation out(d.n);
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    out.a[i] = -d.a[i].conj();
    for (std::size_t k = 0; k < out.a.size(); ++k) out.b[i][k] = d.b[i][k].conj();
  }
  return out;
}

bool der_is_hermitian(const Derivation& d) { return der_star(d) == d; }

std::optional<KElement> der_is_inner(const Derivation& d) {
  // [nu e + w^k a_k, x] has e-datum -w and arrow datum nu * identity.
  const GR nu = d.b[0][0];
  for (std::size_t i = 0; i < d.b.size(); ++i)
    for (std::size_t k = 0; k < d.b.size(); ++k) {
      const GR expect = i == k ? nu : GR(0);
      if (!(d.b[i][k] == expect)) return std::nullopt;
    }
  KElement w(d.n);
  w.mu = nu;
  for (std::size_t k = 0; k < w.alpha.size(); ++k) w.alpha[k] = -d.a[k];
  return w;
}

std::size_t der_rank(const std::vector<Derivation>& ds) {
  if (ds.empty()) return 0;
  const std::size_t width = ds.front().coords().size();
  Matrix<GR> m(ds.size(), width);
  for (std::size_t r = 0; r < ds.size(); ++r) {
    auto c = ds[r].coords();
    if (c.size() != width) throw DimensionMismatch(static_cast<int>(width), static_cast<int>(c.size()));
    for (std::size_t j = 0; j < width; ++j) m(r, j) = c[j];
  }
  return rank(m);
}

std::optional<std::vector<GR>> LieSubalgebra::coordinates(const Derivation& d) const {
  require_same_n(n, d.n);
  LinearSystem<GR> sys(basis.size());
  const auto target = d.coords();
  std::vector<std::vector<GR>> cols;
  for (const auto& x : basis) cols.push_back(x.coords());
  for (std::size_t r = 0; r < target.size(); ++r) {
    LinearSystem<GR>::Row row;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!cols[j][r].is_zero()) row.emplace(j, cols[j][r]);
    sys.add(std::move(row), target[r]);
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return sol->particular;
}

Derivation LieSubalgebra::combine(const std::vector<GR>& coeffs) const {
  if (coeffs.size() != basis.size())
    throw DimensionMismatch(static_cast<int>(basis.size()), static_cast<int>(coeffs.size()));
  Derivation out(n);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (!coeffs[j].is_zero()) out += coeffs[j] * basis[j];
  return out;
}

bool LieSubalgebra::bracket_closed() const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!contains(der_bracket(basis[i], basis[j]))) return false;
  return true;
}

bool LieSubalgebra::star_closed() const {
  for (const auto& d : basis)
    if (!contains(der_star(d))) return false;
  return true;
}

bool LieSubalgebra::basis_hermitian() const {
  for (const auto& d : basis)
    if (!der_is_hermitian(d)) return false;
  return true;
}

LieSubalgebra der_full_basis(int n) {
  LieSubalgebra g{"der", n, {}, {}};
  for (int k = 1; k <= n; ++k) {
    g.basis.push_back(Derivation::d(n, k));
    g.labels.push_back("d_" + std::to_string(k));
  }
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      g.basis.push_back(Derivation::d_up(n, k, l));
      g.labels.push_back("d_" + std::to_string(k) + "^" + std::to_string(l));
    }
  return g;
}

LieSubalgebra der_inner(int n) {
  LieSubalgebra g{"inner", n, {Derivation::dhat(n)}, {"dhat"}};
  for (int k = 1; k <= n; ++k) {
    g.basis.push_back(Derivation::d(n, k));
    g.labels.push_back("d_" + std::to_string(k));
  }
  return g;
}

LieSubalgebra der_tilde(int n) {
  LieSubalgebra g{"tilde", n, {}, {}};
  for (int i = 1; i <= n; ++i) {
    g.basis.push_back(Derivation::dtilde(n, i));
    g.labels.push_back("dt_" + std::to_string(i));
  }
  return g;
}

LieSubalgebra lie_by_name(const std::string& name, int n) {
  if (n < 1) throw UsageError("n must be at least 1, got " + std::to_string(n));
  if (name == "der") return der_full_basis(n);
  if (name == "inner") return der_inner(n);
  if (name == "tilde") return der_tilde(n);
  throw UsageError("unknown Lie algebra '" + name + "' (expected der, inner or tilde)");
}

LieSubalgebra hermitian_basis(const LieSubalgebra& g) {
  if (g.basis_hermitian()) return g;
  LieSubalgebra out{g.name, g.n, {}, {}};
  const GR half(make_rational(1, 2));
  const GR half_over_i = GR(Rational(0), make_rational(-1, 2));  // 1/(2i)
  for (std::size_t j = 0; j < g.basis.size(); ++j) {
    const Derivation s = der_star(g.basis[j]);
    const Derivation re = half * (g.basis[j] + s);
    const Derivation im = half_over_i * (g.basis[j] - s);
    for (const auto& [cand, tag] : {std::pair{re, "re"}, std::pair{im, "im"}}) {
      if (cand.is_zero()) continue;
      auto trial = out.basis;
      trial.push_back(cand);
      if (der_rank(trial) == trial.size()) {
        out.basis.push_back(cand);
        out.labels.push_back(std::string(tag) + "(" + g.labels[j] + ")");
      }
    }
  }
  return out;
}

std::string to_string(const Derivation& d) {
  std::string out = "{a:";
  for (const auto& x : d.a) out += " " + to_string(x);
  out += "; b:";
  for (const auto& row : d.b) {
    out += " [";
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? " " : "") + to_string(row[k]);
    out += "]";
  }
  return out + "}";
}

}  // namespace ncg
