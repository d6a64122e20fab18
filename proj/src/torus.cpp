#include "ncg/torus.hpp"

#include "ncg/error.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

namespace {

const GR kHalf(make_rational(1, 2));
const GR kI = GR::i();

TorusElement scale(const GR& c, const TorusElement& x) { return TorusElement(c) * x; }

std::string idx(int a) { return std::to_string(a); }

TorusMatrix identity_matrix() {
  TorusMatrix m;
  m[0][0] = TorusElement(1);
  m[1][1] = TorusElement(1);
  return m;
}

}  // namespace

TorusElement::TorusElement(const LaurentScalar& c) { add_term({0, 0}, c); }

void TorusElement::add_term(const Key& key, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement TorusElement::monomial(const LaurentScalar& c, std::int64_t k, std::int64_t l) {
  TorusElement out;
  out.add_term({k, l}, c);
  return out;
}

bool TorusElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}); }

LaurentScalar TorusElement::coefficient(std::int64_t k, std::int64_t l) const {
  auto it = terms_.find({k, l});
  return it == terms_.end() ? LaurentScalar() : it->second;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

TorusElement t_mul(const TorusElement& x, const TorusElement& y) {
  TorusElement out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      out += TorusElement::monomial(cx * cy * LaurentScalar::q(kx.second * ky.first), kx.first + ky.first,
                                    kx.second + ky.second);
  return out;
}

TorusElement t_star(const TorusElement& x) {
  // (U^k V^l)* = V^{-l} U^{-k} = q^{kl} U^{-k} V^{-l}
  TorusElement out;
  for (const auto& [key, c] : x.terms())
    out += TorusElement::monomial(c.star() * LaurentScalar::q(key.first * key.second), -key.first, -key.second);
  return out;
}

TorusElement t_derive(int a, const TorusElement& x) {
  if (a != 1 && a != 2) throw Error("torus derivation index must be 1 or 2, got " + std::to_string(a));
  TorusElement out;
  for (const auto& [key, c] : x.terms()) {
    const std::int64_t m = a == 1 ? key.first : key.second;
    out += TorusElement::monomial(c * LaurentScalar(GR(Rational(0), Rational(static_cast<long>(m)))), key.first,
                                  key.second);
  }
  return out;
}

TorusElement t_commutator(const TorusElement& x, const TorusElement& y) { return x * y - y * x; }

TorusOneForm& TorusOneForm::operator+=(const TorusOneForm& o) {
  w += o.w;
  e += o.e;
  return *this;
}

TorusOneForm& TorusOneForm::operator-=(const TorusOneForm& o) {
  w -= o.w;
  e -= o.e;
  return *this;
}

TorusOneForm t_basis_form(int b) {
  TorusOneForm f;
  f.coef(b) = TorusElement(1);
  return f;
}

TorusElement t_eval(const TorusOneForm& f, int a) { return f.coef(a); }

TorusOneForm t_act_left(const TorusElement& x, const TorusOneForm& f) { return {x * f.w, x * f.e}; }

TorusOneForm t_act_right(const TorusOneForm& f, const TorusElement& x) { return {f.w * x, f.e * x}; }

TorusOneForm t_d(const TorusElement& x) { return {t_derive(1, x), t_derive(2, x)}; }

TorusElement t_d1(const TorusOneForm& f) { return t_derive(1, f.e) - t_derive(2, f.w); }

std::optional<TorusElement> t_exact_preimage(const TorusOneForm& f) {
  // i k x_kl = a_kl and i l x_kl = b_kl
  TorusElement x;
  std::map<TorusElement::Key, std::pair<LaurentScalar, LaurentScalar>> coeffs;
  for (const auto& [key, c] : f.w.terms()) coeffs[key].first = c;
  for (const auto& [key, c] : f.e.terms()) coeffs[key].second = c;
  for (const auto& [key, ab] : coeffs) {
    const auto [k, l] = key;
    LaurentScalar candidate;
    if (k != 0) candidate = ab.first * LaurentScalar(GR(Rational(0), Rational(-1, static_cast<long>(k))));
    else if (l != 0) candidate = ab.second * LaurentScalar(GR(Rational(0), Rational(-1, static_cast<long>(l))));
    else return std::nullopt;  // nonzero (0,0) coefficient
    const auto piece = TorusElement::monomial(candidate, k, l);
    if (!(t_d(piece) == TorusOneForm{TorusElement::monomial(ab.first, k, l), TorusElement::monomial(ab.second, k, l)}))
      return std::nullopt;
    x += piece;
  }
  return x;
}

std::optional<TorusOneForm> t_d1_preimage(const TorusElement& c) {
  TorusOneForm f;
  for (const auto& [key, coef] : c.terms()) {
    const auto [k, l] = key;
    if (k != 0) f.e += TorusElement::monomial(coef * LaurentScalar(GR(Rational(0), Rational(-1, static_cast<long>(k)))), k, l);
    else if (l != 0) f.w += TorusElement::monomial(coef * LaurentScalar(GR(Rational(0), Rational(1, static_cast<long>(l)))), k, l);
    else return std::nullopt;
  }
  return f;
}

TorusCohomology t_cohomology(int window) {
  if (window < 1) throw UsageError("cohomology window must be at least 1, got " + std::to_string(window));
  // Monomials of the window; d multiplies each by i k or i l, so it maps the
  // window into itself and the complex splits over monomials.
  std::vector<TorusElement::Key> keys;
  for (int k = -window; k <= window; ++k)
    for (int l = -window; l <= window; ++l) keys.emplace_back(k, l);
  const std::size_t m = keys.size();

  // d0: Omega^0 -> Omega^1, rows indexed by monomials of Omega^0.
  Matrix<GR> d0(m, 2 * m);
  // d1: Omega^1 -> Omega^2, rows indexed by (monomial, w or n).
  Matrix<GR> d1(2 * m, m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto x = TorusElement::monomial(LaurentScalar(1), keys[r].first, keys[r].second);
    const TorusOneForm dx = t_d(x);
    for (std::size_t j = 0; j < m; ++j) {
      d0(r, 2 * j) = dx.w.coefficient(keys[j].first, keys[j].second).coefficient(0);
      d0(r, 2 * j + 1) = dx.e.coefficient(keys[j].first, keys[j].second).coefficient(0);
    }
    for (int b = 1; b <= 2; ++b) {
      TorusOneForm f;
      f.coef(b) = x;
      const TorusElement c = t_d1(f);
      for (std::size_t j = 0; j < m; ++j)
        d1(2 * r + static_cast<std::size_t>(b - 1), j) = c.coefficient(keys[j].first, keys[j].second).coefficient(0);
    }
  }
  const std::size_t r0 = rank(d0);
  const std::size_t r1 = rank(d1);
  return {m - r0, 2 * m - r1 - r0, m - r1};
}

TorusHermitianData::TorusHermitianData(TorusMatrix up_, TorusMatrix down_) : up(std::move(up_)), down(std::move(down_)) {
  const TorusMatrix id = identity_matrix();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      TorusElement left, right;
      for (int c = 0; c < 2; ++c) {
        left += up[a][c] * down[c][b];
        right += down[b][c] * up[c][a];
      }
      if (!(left == id[a][b]) || !(right == id[a][b]))
        throw NotInvertible("h_ab is not the inverse of h^ab at (" + idx(a + 1) + "," + idx(b + 1) + ")");
      if (!(t_star(up[a][b]) == up[b][a]))
        throw AxiomViolation("(h^" + idx(a + 1) + idx(b + 1) + ")* != h^" + idx(b + 1) + idx(a + 1));
    }
}

TorusElement TorusHermitianData::f(int a, int b) const {
  const TorusElement& x = down[a - 1][b - 1];
  return scale(kHalf, x + t_star(x));
}

TorusElement TorusHermitianData::g(int a, int b) const {
  // (x - x*) / (2i)
  const TorusElement& x = down[a - 1][b - 1];
  return scale(GR(Rational(0), make_rational(-1, 2)), x - t_star(x));
}

TorusOneForm t_conn_apply(const TorusConnection& c, int a, const TorusOneForm& f) {
  // nabla_a(f_b w^b) = f_b Gamma^b_{ac} w^c + (d_a f_c) w^c
  TorusOneForm out;
  for (int k = 1; k <= 2; ++k) {
    TorusElement coef = t_derive(a, f.coef(k));
    for (int b = 1; b <= 2; ++b) coef += f.coef(b) * c.G(b, a, k);
    out.coef(k) = coef;
  }
  return out;
}

TorusElement t_torsion(const TorusConnection& c, const TorusOneForm& f) {
  const TorusElement dw = t_derive(1, t_eval(f, 2)) - t_derive(2, t_eval(f, 1));
  return t_eval(t_conn_apply(c, 1, f), 2) - t_eval(t_conn_apply(c, 2, f), 1) - dw;
}

bool t_is_torsion_free(const TorusConnection& c) {
  for (int a = 1; a <= 2; ++a)
    if (!(c.G(a, 1, 2) == c.G(a, 2, 1))) return false;
  return true;
}

bool t_is_torsion_free_by_definition(const TorusConnection& c) {
  for (int b = 1; b <= 2; ++b)
    if (!t_torsion(c, t_basis_form(b)).is_zero()) return false;
  return true;
}

TorusCompatibility t_is_compatible(const TorusConnection& c, const TorusHermitianData& h) {
  TorusCompatibility out;
  auto gamma_up = [&](int a, int b, int cc) {
    TorusElement s;
    for (int p = 1; p <= 2; ++p) s += c.G(a, cc, p) * h.up[p - 1][b - 1];
    return s;
  };
  for (int cc = 1; cc <= 2; ++cc)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        TorusElement r = t_derive(cc, h.up[a - 1][b - 1]) - gamma_up(a, b, cc) - t_star(gamma_up(b, a, cc));
        if (!r.is_zero()) {
          out.compatible = false;
          out.residuals.push_back({"metric[c=" + idx(cc) + "](" + idx(a) + "," + idx(b) + ")", to_string(r)});
        }
      }
  return out;
}

TorusElement t_h_eval(const TorusMatrix& up, const TorusOneForm& x, const TorusOneForm& y) {
  TorusElement out;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) out += x.coef(a) * up[a - 1][b - 1] * t_star(y.coef(b));
  return out;
}

TorusCompatibility t_compatible_by_definition(const TorusConnection& c, const TorusMatrix& up) {
  TorusCompatibility out;
  for (int cc = 1; cc <= 2; ++cc)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        const TorusOneForm wa = t_basis_form(a), wb = t_basis_form(b);
        TorusElement r = t_derive(cc, t_h_eval(up, wa, wb)) - t_h_eval(up, t_conn_apply(c, cc, wa), wb) -
                         t_h_eval(up, wa, t_conn_apply(c, cc, wb));
        if (!r.is_zero()) {
          out.compatible = false;
          out.residuals.push_back({"compat[d_" + idx(cc) + "](" + idx(a) + "," + idx(b) + ")", to_string(r)});
        }
      }
  return out;
}

TorusCompatibility t_g_compatible(const TorusConnection& c, const TorusMatrix& g) {
  TorusCompatibility out;
  for (int cc = 1; cc <= 2; ++cc)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        TorusElement r = t_derive(cc, g[a - 1][b - 1]);
        for (int p = 1; p <= 2; ++p) r -= c.G(a, cc, p) * g[p - 1][b - 1] + g[a - 1][p - 1] * c.G(b, cc, p);
        if (!r.is_zero()) {
          out.compatible = false;
          out.residuals.push_back({"gmetric[c=" + idx(cc) + "](" + idx(a) + "," + idx(b) + ")", to_string(r)});
        }
      }
  return out;
}

TorusHermitianData t_diagonal_data(const TorusElement& h1, const TorusElement& h1inv, const TorusElement& h2,
                                   const TorusElement& h2inv) {
  TorusMatrix up, down;
  up[0][0] = h1;
  up[1][1] = h2;
  down[0][0] = h1inv;
  down[1][1] = h2inv;
  return TorusHermitianData(up, down);
}

TorusConnection t_build_diagonal_lc(const TorusElement& h1, const TorusElement& h1inv, const TorusElement& h2,
                                    const TorusElement& h2inv) {
  t_diagonal_data(h1, h1inv, h2, h2inv);  // validates the inverse pairs and hermiticity
  const GR mhalf = -kHalf;
  TorusConnection c;
  c.G(1, 1, 1) = scale(mhalf, h1 * t_derive(1, h1inv));
  c.G(1, 1, 2) = scale(mhalf, h1 * t_derive(2, h1inv));
  c.G(2, 1, 1) = scale(kHalf, h2 * t_derive(2, h1inv));
  c.G(2, 1, 2) = scale(mhalf, h2 * t_derive(1, h2inv));
  c.G(1, 2, 1) = scale(mhalf, h1 * t_derive(2, h1inv));
  c.G(1, 2, 2) = scale(kHalf, h1 * t_derive(1, h2inv));
  c.G(2, 2, 1) = scale(mhalf, h2 * t_derive(1, h2inv));
  c.G(2, 2, 2) = scale(mhalf, h2 * t_derive(2, h2inv));
  return c;
}

TorusHermitianData t_offdiagonal_data(const TorusElement& hhat, const TorusElement& hhatinv) {
  TorusMatrix up, down;
  up[0][1] = hhat;
  up[1][0] = t_star(hhat);
  down[0][1] = t_star(hhatinv);
  down[1][0] = hhatinv;
  return TorusHermitianData(up, down);
}

TorusConnection t_build_offdiagonal_lc(const TorusElement& hhat, const TorusElement& hhatinv) {
  const TorusHermitianData h = t_offdiagonal_data(hhat, hhatinv);
  // h_21 = hhat^{-1} = f - i g
  const TorusElement f = h.f(1, 2);
  const TorusElement g = h.g(1, 2);
  const TorusElement hs = t_star(hhat);
  TorusConnection c;
  c.G(1, 1, 1) = -(hhat * t_derive(1, f));
  c.G(1, 1, 2) = scale(kI, hhat * t_derive(2, g));
  c.G(1, 2, 1) = c.G(1, 1, 2);
  c.G(2, 2, 2) = -(hs * t_derive(2, f));
  c.G(2, 1, 2) = scale(-kI, hs * t_derive(1, g));
  c.G(2, 2, 1) = c.G(2, 1, 2);
  return c;
}

TorusHermitianData t_constant_offdiagonal_data(const Rational& lambda) {
  if (sgn(lambda) == 0) throw NotInvertible("constant off-diagonal form needs lambda != 0");
  TorusMatrix up, down;
  up[0][1] = TorusElement(GR(Rational(0), lambda));
  up[1][0] = TorusElement(GR(Rational(0), Rational(-lambda)));
  down[0][1] = TorusElement(GR(Rational(0), Rational(1 / lambda)));
  down[1][0] = TorusElement(GR(Rational(0), Rational(-1 / lambda)));
  return TorusHermitianData(up, down);
}

TorusConnection t_build_constant_offdiagonal(const Rational& gamma1, const Rational& gamma2) {
  TorusConnection c;
  c.G(2, 1, 1) = TorusElement(GR(gamma1));
  c.G(1, 2, 2) = TorusElement(GR(gamma2));
  return c;
}

TorusGFormExample t_build_gform_example(std::int64_t k, std::int64_t l, const GR& z) {
  if (z.is_zero()) throw DivisionByZero();
  TorusGFormExample ex;
  const TorusElement g1 = TorusElement::monomial(LaurentScalar(1), k, l);
  ex.g[0][0] = g1;
  ex.g[1][1] = scale(z, g1);
  const GR ik2(Rational(0), Rational(static_cast<long>(k), 2));
  const GR il2(Rational(0), Rational(static_cast<long>(l), 2));
  TorusConnection& c = ex.connection;
  c.G(1, 1, 1) = TorusElement(ik2);
  c.G(1, 1, 2) = TorusElement(il2);
  c.G(1, 2, 1) = TorusElement(il2);
  c.G(2, 2, 2) = TorusElement(il2);
  c.G(2, 1, 2) = TorusElement(ik2);
  c.G(2, 2, 1) = TorusElement(ik2);
  c.G(1, 2, 2) = TorusElement(-(ik2 / z));
  c.G(2, 1, 1) = TorusElement(-(il2 * z));
  return ex;
}

TorusConnection t_build_s_family(const TorusHermitianData& h, const TorusTensor& s) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (!(t_star(s[a][b][c]) == s[b][a][c]))
          throw AxiomViolation("(S^" + idx(a + 1) + idx(b + 1) + "_" + idx(c + 1) + ")* != S^" + idx(b + 1) + idx(a + 1) + "_" + idx(c + 1));
  TorusConnection out;
  for (int b = 1; b <= 2; ++b)
    for (int a = 1; a <= 2; ++a)
      for (int c = 1; c <= 2; ++c) {
        TorusElement sum;
        for (int p = 1; p <= 2; ++p)
          sum += (scale(kHalf, t_derive(a, h.up[b - 1][p - 1])) + scale(kI, s[b - 1][p - 1][a - 1])) * h.down[p - 1][c - 1];
        out.G(b, a, c) = sum;
      }
  return out;
}

TorusConnection t_build_t_family(const TorusHermitianData& h, const TorusTensor& t) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (!(t_star(t[a][b][c]) == t[b][a][c]))
          throw AxiomViolation("(T^" + idx(a + 1) + idx(b + 1) + "_" + idx(c + 1) + ")* != T^" + idx(b + 1) + idx(a + 1) + "_" + idx(c + 1));
  TorusConnection out;
  for (int c = 1; c <= 2; ++c)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        TorusElement sum;
        for (int p = 1; p <= 2; ++p) {
          const TorusElement& hcp = h.up[c - 1][p - 1];
          sum -= scale(kHalf, hcp * t_derive(a, h.down[p - 1][b - 1]));
          sum -= scale(kHalf, hcp * t_derive(b, h.down[p - 1][a - 1]));
          sum += scale(kHalf, hcp * t_derive(p, h.down[a - 1][b - 1]));
          sum += scale(kI, t[c - 1][p - 1][a - 1] * h.down[p - 1][b - 1]);
        }
        // Gamma^c_{ab}: nabla_{d_a} w^c = Gamma^c_{ab} w^b
        out.G(c, a, b) = sum;
      }
  return out;
}

std::vector<Residual> t_torsion_free_t_residuals(const TorusHermitianData& h, const TorusTensor& t) {
  std::vector<Residual> out;
  for (int q = 1; q <= 2; ++q)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        TorusElement r = t_derive(q, h.g(a, b));
        for (int c = 1; c <= 2; ++c)
          for (int p = 1; p <= 2; ++p) {
            const TorusElement& hqc = h.down[q - 1][c - 1];
            r -= hqc * t[c - 1][p - 1][b - 1] * h.down[p - 1][a - 1];
            r += hqc * t[c - 1][p - 1][a - 1] * h.down[p - 1][b - 1];
          }
        if (!r.is_zero()) out.push_back({"torsion_free_T[q=" + idx(q) + "](" + idx(a) + "," + idx(b) + ")", to_string(r)});
      }
  return out;
}

TorusTensor t_offdiagonal_t(const TorusElement& hhat, const TorusElement& hhatinv) {
  const TorusHermitianData h = t_offdiagonal_data(hhat, hhatinv);
  const TorusElement g = h.g(1, 2);
  const TorusElement hs = t_star(hhat);
  TorusTensor t;
  // t[a][b][c] = T^{ab}_c, T^{11} = T^{22} = 0
  t[1][0][0] = -(hs * t_derive(1, g) * hs);
  t[0][1][0] = -(hhat * t_derive(1, g) * hhat);
  t[0][1][1] = hhat * t_derive(2, g) * hhat;
  t[1][0][1] = hs * t_derive(2, g) * hs;
  return t;
}

TorusConnectionFlags t_bimodule_and_star_checks(const TorusConnection& c) {
  TorusConnectionFlags flags{true, true};
  for (const auto& plane : c.gamma)
    for (const auto& row : plane)
      for (const auto& x : row) {
        if (!x.is_scalar()) flags.bimodule = false;
        if (!(t_star(x) == x)) flags.star = false;
      }
  flags.star = flags.star && flags.bimodule;
  return flags;
}

std::string to_string(const TorusElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(c) + "]*U^" + std::to_string(key.first) + "*V^" + std::to_string(key.second);
  }
  return out;
}


TorusElement random_torus_element(Rng& rng, int max_terms, int exponent_bound) {
  TorusElement out;
  const int terms = random_int(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int k = random_int(rng, -exponent_bound, exponent_bound);
    const int l = random_int(rng, -exponent_bound, exponent_bound);
    out += TorusElement::monomial(random_laurent(rng, 1, 1), k, l);
  }
  return out;
}

TorusTensor random_hermitian_tensor(Rng& rng) {
  TorusTensor t;
  for (int c = 0; c < 2; ++c) {
    for (int a = 0; a < 2; ++a) {
      const TorusElement x = random_torus_element(rng);
      t[a][a][c] = x + t_star(x);
    }
    t[0][1][c] = random_torus_element(rng);
    t[1][0][c] = t_star(t[0][1][c]);
  }
  return t;
}

}  // namespace ncg
