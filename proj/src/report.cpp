#include "ncg/report.hpp"

#include "ncg/calculus.hpp"
#include "ncg/error.hpp"
#include "ncg/lc_solver.hpp"
#include "ncg/random.hpp"

namespace ncg {

namespace {

Json gr_vector(const std::vector<GR>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json rational_vector(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

void require_n(int n) {
  if (n < 1) throw UsageError("--n must be at least 1, got " + std::to_string(n));
}

std::size_t center_dim(int n) {
  // Rows: commutators of each basis element with e and every arrow.
  const auto basis = k_basis(n);
  const std::size_t width = basis.size() * basis.size();
  Matrix<GR> m(basis.size(), width);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t s = 0; s < basis.size(); ++s) {
      const KElement c = k_commutator(basis[r], basis[s]);
      const std::vector<GR> coords = [&] {
        std::vector<GR> v{c.lambda, c.mu};
        v.insert(v.end(), c.alpha.begin(), c.alpha.end());
        return v;
      }();
      for (std::size_t j = 0; j < coords.size(); ++j) m(r, s * basis.size() + j) = coords[j];
    }
  return nullspace(m.transpose()).size();
}

std::string diff(std::size_t got, std::size_t want) {
  return std::to_string(static_cast<long long>(got) - static_cast<long long>(want));
}

std::string torus_names(const char* prefix, const std::string& tag) { return std::string(prefix) + "[" + tag + "]"; }

std::vector<Residual> torus_torsion_residuals(const TorusConnection& c) {
  std::vector<Residual> out;
  for (int b = 1; b <= 2; ++b) {
    const TorusElement t = t_torsion(c, t_basis_form(b));
    if (!t.is_zero()) out.push_back({"T(w^" + std::to_string(b) + ")", to_string(t)});
  }
  for (int a = 1; a <= 2; ++a)
    if (!(c.G(a, 1, 2) == c.G(a, 2, 1)))
      out.push_back({"Gamma^" + std::to_string(a) + "_12 - Gamma^" + std::to_string(a) + "_21",
                     to_string(c.G(a, 1, 2) - c.G(a, 2, 1))});
  return out;
}

std::vector<Residual> torus_compat_residuals(const TorusConnection& c, const TorusHermitianData& h) {
  auto out = t_is_compatible(c, h).residuals;
  const auto def = t_compatible_by_definition(c, h.up).residuals;
  out.insert(out.end(), def.begin(), def.end());
  return out;
}

// c U^k V^l and its inverse c^{-1} q^{kl} U^{-k} V^{-l}.
std::pair<TorusElement, TorusElement> monomial_pair(const GR& c, std::int64_t k, std::int64_t l) {
  return {TorusElement::monomial(LaurentScalar(c), k, l),
          TorusElement::monomial(LaurentScalar(c.inverse()) * LaurentScalar::q(k * l), -k, -l)};
}

}  // namespace

void Report::check(std::string name, bool pass, std::optional<std::string> residual) {
  results_.push_back({std::move(name), pass ? "pass" : "fail", std::move(residual)});
}

void Report::check_residuals(std::string name, const std::vector<Residual>& residuals) {
  if (residuals.empty()) {
    check(std::move(name), true, "0");
  } else {
    check(std::move(name), false, residuals.front().name + " = " + residuals.front().value);
  }
}

void Report::error(std::string name, const std::string& message) { results_.push_back({std::move(name), "error", message}); }

bool Report::all_pass() const {
  for (const auto& r : results_)
    if (r.status != "pass") return false;
  return true;
}

Json Report::to_json() const {
  Json results = Json::array();
  for (const auto& r : results_) {
    Json j{{"name", r.name}, {"status", r.status}};
    if (r.residual) j["residual"] = *r.residual;
    results.push_back(j);
  }
  return Json{{"command", command_}, {"inputs", inputs_}, {"data", data_}, {"results", results}, {"version", kVersion}};
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Report cmd_kn_info(int n, std::uint64_t seed) {
  require_n(n);
  Report r("kn-info");
  r.inputs() = Json{{"n", n}, {"seed", seed}};
  const auto der = der_full_basis(n);
  const auto inner = der_inner(n);
  const auto tilde = der_tilde(n);
  const std::size_t dim_der = der_rank(der.basis);
  const std::size_t dim_inner = der_rank(inner.basis);
  const std::size_t center = center_dim(n);
  r.data() = Json{{"dimAlgebra", k_basis(n).size()},
                  {"dimCenter", center},
                  {"dimDer", dim_der},
                  {"dimInner", dim_inner},
                  {"dimTilde", der_rank(tilde.basis)}};
  const auto nn = static_cast<std::size_t>(n);
  r.check("dim Der = N + N^2", dim_der == nn + nn * nn, diff(dim_der, nn + nn * nn));
  r.check("dim inner = N + 1", dim_inner == nn + 1, diff(dim_inner, nn + 1));
  r.check("center = C 1", center == 1, diff(center, 1));

  bool all_inner = true;
  for (const auto& d : inner.basis) all_inner = all_inner && der_is_inner(d).has_value();
  r.check("inner basis is inner", all_inner);
  bool outer = false;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      if (k != l) outer = outer || !der_is_inner(Derivation::d_up(n, k, l)).has_value();
  if (n > 1) r.check("Der has outer derivations", outer);

  for (const auto* g : {&der, &inner, &tilde}) {
    r.check(g->name + " closed under bracket", g->bracket_closed());
    r.check(g->name + " closed under star", g->star_closed());
  }

  Rng rng(seed);
  bool leibniz = true;
  for (int t = 0; t < 50; ++t) {
    const Derivation d = random_derivation(rng, n);
    const KElement x = random_kelement(rng, n), y = random_kelement(rng, n);
    leibniz = leibniz && der_apply(d, x * y) == der_apply(d, x) * y + x * der_apply(d, y);
  }
  r.check("Leibniz on random derivations", leibniz);
  return r;
}

Report cmd_calculus(int n, const std::string& name, std::uint64_t seed) {
  require_n(n);
  const LieSubalgebra g = lie_by_name(name, n);
  Report r("calculus");
  r.inputs() = Json{{"n", n}, {"g", name}, {"seed", seed}};
  const CalculusSummary s = omega1_summary(g);
  Json relations = Json::array();
  for (const auto& rel : s.relations) relations.push_back(gr_vector(rel));
  r.data() = Json{{"dim_omega1", s.dim_omega1},
                  {"basis_indices", s.basis_indices},
                  {"relations", relations},
                  {"connected", s.connected},
                  {"h0_dim", s.h0_dim},
                  {"h1_dim", s.h1_dim}};

  const auto nn = static_cast<std::size_t>(n);
  const bool is_tilde = name == "tilde";
  const std::size_t want_dim = is_tilde ? nn : nn + 1;
  r.check("dim Omega^1", s.dim_omega1 == want_dim, diff(s.dim_omega1, want_dim));
  r.check(is_tilde ? "not connected" : "connected", s.connected == !is_tilde);
  if (is_tilde) {
    bool ones = s.relations.size() == 1;
    if (ones)
      for (const auto& x : s.relations[0]) ones = ones && x == s.relations[0][0] && !x.is_zero();
    r.check("relation da_0 + sum da_i = 0", ones);
  } else {
    r.check("no relations", s.relations.empty());
  }
  bool exact = true;
  for (int i = 0; i <= n; ++i) {
    const OneForm w = OneForm::dalpha(n, i);
    exact = exact && forms_equal(g, differential(exact_preimage(w)), w);
  }
  r.check("H^1 = 0", s.h1_dim == 0 && exact, std::to_string(s.h1_dim));
  Rng rng(seed);
  r.check("Omega^2 = 0", wedge_vanishes(g, 100, rng));
  return r;
}

Report cmd_lc_solve(const FormFile& form, const std::string& path, std::optional<int> n, std::optional<std::string> g,
                    bool star) {
  if (n && *n != form.n)
    throw UsageError("--n " + std::to_string(*n) + " does not match n = " + std::to_string(form.n) + " in " + path);
  if (g && *g != form.g) throw UsageError("--g " + *g + " does not match g = " + form.g + " in " + path);
  const LieSubalgebra lie = lie_by_name(form.g, form.n);
  const HermitianForm h = make_form(lie, form.kind, form.h);
  Report r("lc-solve");
  r.inputs() = Json{{"n", form.n}, {"g", form.g}, {"form", path}, {"kind", to_string(form.kind)}, {"star", star}};
  const LCSolution sol = solve_levi_civita(lie, h, star);

  Json data{{"status", to_string(sol.status)},
            {"basis", sol.g.labels},
            {"omega1_basis", sol.basis.indices},
            {"unknowns", sol.unknowns},
            {"equations", sol.equations},
            {"rank", sol.rank},
            {"kernel_dim", sol.kernel_dim()}};
  if (sol.violated) data["violated"] = *sol.violated;
  if (sol.particular) {
    Json gamma = Json::object();
    for (std::size_t b = 0; b < sol.g.dim(); ++b) gamma[sol.g.labels[b]] = to_json(sol.particular->gamma(b));
    data["particular"] = gamma;
    Json kernel = Json::array();
    for (const auto& v : sol.kernel_vectors) kernel.push_back(rational_vector(v));
    data["particular_vector"] = rational_vector(sol.particular_vector);
    data["kernel"] = kernel;
  }
  r.data() = data;
  for (const auto& c : sol.checks) {
    if (c.pass) r.check(c.name, true, "0");
    else r.check(c.name, false, c.residual->name + " = " + c.residual->value);
  }
  return r;
}

Report cmd_torus_verify(std::uint64_t seed) {
  Report r("torus verify-examples");
  r.inputs() = Json{{"seed", seed}};
  const TorusElement U = TorusElement::U(), V = TorusElement::V();
  r.check("VU = q UV", V * U == TorusElement(LaurentScalar::q()) * U * V);
  r.check("(UV)* = q U^-1 V^-1", t_star(U * V) == TorusElement(LaurentScalar::q()) * U.U(-1) * V.V(-1));
  r.check("d_1 U = i U", t_derive(1, U) == TorusElement(GR::i()) * U);

  Json examples = Json::array();

  // Diagonal metrics: only scalars are finitely supported, hermitian and
  // invertible, so the displayed table has to vanish.
  for (const auto& [c, d] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {2, Rational(3, 5)}}) {
    const TorusElement h1{GR(c)}, h2{GR(d)};
    const TorusElement h1inv{GR(Rational(1 / c))}, h2inv{GR(Rational(1 / d))};
    const std::string tag = to_string(c) + "," + to_string(d);
    const TorusConnection con = t_build_diagonal_lc(h1, h1inv, h2, h2inv);
    const TorusHermitianData h = t_diagonal_data(h1, h1inv, h2, h2inv);
    r.check_residuals(torus_names("diagonal torsion", tag), torus_torsion_residuals(con));
    r.check_residuals(torus_names("diagonal compatibility", tag), torus_compat_residuals(con, h));
    r.check(torus_names("diagonal Gamma = 0", tag), con == TorusConnection{});
  }

  // Off-diagonal metrics with hhat = c U^k V^l.
  struct Mono {
    GR c;
    std::int64_t k, l;
  };
  for (const auto& m : std::vector<Mono>{{GR(1), 0, 0}, {GR::i(), 0, 0}, {GR(3), 1, 0}, {GR(2), 2, -1}, {GR(Rational(1, 5)), -3, 2}}) {
    const auto [hhat, hinv] = monomial_pair(m.c, m.k, m.l);
    const std::string tag = "hhat=" + to_string(hhat);
    const TorusConnection con = t_build_offdiagonal_lc(hhat, hinv);
    const TorusHermitianData h = t_offdiagonal_data(hhat, hinv);
    r.check_residuals(torus_names("off-diagonal torsion", tag), torus_torsion_residuals(con));
    r.check_residuals(torus_names("off-diagonal compatibility", tag), torus_compat_residuals(con, h));
    const TorusTensor t = t_offdiagonal_t(hhat, hinv);
    r.check_residuals(torus_names("off-diagonal T equations", tag), t_torsion_free_t_residuals(h, t));
    r.check(torus_names("off-diagonal table = T-family", tag), t_build_t_family(h, t) == con);
    if (m.k == 0 && m.l == 0) r.check(torus_names("off-diagonal Gamma = 0", tag), con == TorusConnection{});
  }

  // Constant off-diagonal metric with the real gamma-family.
  for (const auto& [lambda, g1, g2] : std::vector<std::tuple<Rational, Rational, Rational>>{{1, 0, 0}, {3, 2, -5}, {Rational(-1, 2), Rational(7, 3), 1}}) {
    const std::string tag = "lambda=" + to_string(lambda) + ",gamma=" + to_string(g1) + "," + to_string(g2);
    const TorusHermitianData h = t_constant_offdiagonal_data(lambda);
    const TorusConnection con = t_build_constant_offdiagonal(g1, g2);
    r.check("constant off-diagonal nabla_1 n = gamma_1 w[" + tag + "]",
            t_conn_apply(con, 1, t_basis_form(2)) == TorusOneForm{TorusElement(GR(g1)), TorusElement()});
    r.check_residuals(torus_names("constant off-diagonal torsion", tag), torus_torsion_residuals(con));
    r.check_residuals(torus_names("constant off-diagonal compatibility", tag), torus_compat_residuals(con, h));
    const auto flags = t_bimodule_and_star_checks(con);
    r.check(torus_names("constant off-diagonal bimodule", tag), flags.bimodule);
    r.check(torus_names("constant off-diagonal star", tag), flags.star);
  }

  // The g-form example.
  for (const auto& [k, l, z] : std::vector<std::tuple<int, int, GR>>{{1, 0, GR(1)}, {0, 1, GR(2)}, {2, 3, GR(1) + GR::i()}}) {
    const std::string tag = "k=" + std::to_string(k) + ",l=" + std::to_string(l) + ",z=" + to_string(z);
    const TorusGFormExample ex = t_build_gform_example(k, l, z);
    r.check_residuals(torus_names("g-form compatibility", tag), t_g_compatible(ex.connection, ex.g).residuals);
    r.check_residuals(torus_names("g-form torsion", tag), torus_torsion_residuals(ex.connection));
    const auto flags = t_bimodule_and_star_checks(ex.connection);
    r.check(torus_names("g-form bimodule = true", tag), flags.bimodule);
    r.check(torus_names("g-form star = false", tag), !flags.star);
  }

  // Parametrized metric connections for random hermitian S and T.
  Rng rng(seed);
  const auto [hhat, hinv] = monomial_pair(GR(2), 1, -1);
  const TorusHermitianData h = t_offdiagonal_data(hhat, hinv);
  std::vector<Residual> s_res, t_res;
  bool iff = true;
  for (int trial = 0; trial < 20; ++trial) {
    const TorusConnection cs = t_build_s_family(h, random_hermitian_tensor(rng));
    for (auto& x : t_is_compatible(cs, h).residuals) s_res.push_back(x);
    const TorusTensor tt = random_hermitian_tensor(rng);
    const TorusConnection ct = t_build_t_family(h, tt);
    for (auto& x : t_is_compatible(ct, h).residuals) t_res.push_back(x);
    iff = iff && (t_is_torsion_free(ct) == t_torsion_free_t_residuals(h, tt).empty());
  }
  r.check_residuals("S-family compatibility", s_res);
  r.check_residuals("T-family compatibility", t_res);
  r.check("T-family torsion-free iff T equations hold", iff);

  const TorusCohomology coh = t_cohomology(2);
  r.check("cohomology (1,2,1) on window 2", coh.h0 == 1 && coh.h1 == 2 && coh.h2 == 1);
  return r;
}

Report cmd_torus_cohomology(int window) {
  if (window < 1) throw UsageError("--window must be at least 1, got " + std::to_string(window));
  Report r("torus cohomology");
  r.inputs() = Json{{"window", window}};
  const TorusCohomology c = t_cohomology(window);
  r.data() = Json{{"h0", c.h0}, {"h1", c.h1}, {"h2", c.h2}};
  r.check("h0 = 1", c.h0 == 1, diff(c.h0, 1));
  r.check("h1 = 2", c.h1 == 2, diff(c.h1, 2));
  r.check("h2 = 1", c.h2 == 1, diff(c.h2, 1));
  return r;
}

}  // namespace ncg
