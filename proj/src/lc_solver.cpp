#include "ncg/lc_solver.hpp"

#include <set>

#include "ncg/error.hpp"

namespace ncg {

namespace {

// Flattened KElement: re/im of lambda, mu, alpha_1..alpha_N.
std::vector<Rational> flatten(const KElement& x) {
  std::vector<Rational> out;
  out.reserve(2 * (x.alpha.size() + 2));
  auto push = [&](const GR& c) {
    out.push_back(c.re());
    out.push_back(c.im());
  };
  push(x.lambda);
  push(x.mu);
  for (const auto& c : x.alpha) push(c);
  return out;
}

struct Group {
  enum Kind { Torsion, Compat } kind;
  std::size_t p, q, a;  // torsion: (p, q, a); compat: (b = p, a, c = q)
  std::string name;
};

class Builder {
 public:
  Builder(const LieSubalgebra& g, const HermitianForm& f) : g_(g), f_(f), dim_g_(g.dim()), n_(f.basis.dim()) {
    x_.assign(dim_g_ * n_ * n_, GR(0));
    for (std::size_t a = 0; a < n_; ++a) {
      std::vector<KElement> row;
      for (std::size_t q = 0; q < dim_g_; ++q) row.push_back(eval_raw(f_.basis.basis_form(a), g_.basis[q]));
      ev_.push_back(std::move(row));
    }
    for (std::size_t b = 0; b < dim_g_; ++b) {
      auto s = g_.coordinates(der_star(g_.basis[b]));
      if (!s) throw Error("Lie algebra " + g_.name + " is not closed under star");
      star_.push_back(*s);
    }
    dterm_.assign(dim_g_ * dim_g_ * n_, KElement(g_.n));
    for (std::size_t p = 0; p < dim_g_; ++p)
      for (std::size_t q = p + 1; q < dim_g_; ++q)
        for (std::size_t a = 0; a < n_; ++a)
          dterm_[(p * dim_g_ + q) * n_ + a] = exterior_d(f_.basis.basis_form(a), g_.basis[p], g_.basis[q]);

    for (std::size_t p = 0; p < dim_g_; ++p)
      for (std::size_t q = p + 1; q < dim_g_; ++q)
        for (std::size_t a = 0; a < n_; ++a)
          groups_.push_back({Group::Torsion, p, q, a, "torsion[" + g_.labels[p] + "," + g_.labels[q] + "](" + dx(a) + ")"});
    for (std::size_t b = 0; b < dim_g_; ++b)
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t c = 0; c < n_; ++c)
          groups_.push_back({Group::Compat, b, c, a, "compat[" + g_.labels[b] + "](" + dx(a) + "," + dx(c) + ")"});

    // Which groups read the block X[b](a, .)
    affected_.assign(dim_g_ * n_, {});
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
      const Group& gr = groups_[gi];
      std::set<std::size_t> blocks;
      if (gr.kind == Group::Torsion) {
        blocks = {block(gr.p, gr.a), block(gr.q, gr.a)};
      } else {
        const std::size_t b = gr.p, a = gr.a, c = gr.q;
        blocks = {block(b, a), block(b, c)};
        for (std::size_t bp = 0; bp < dim_g_; ++bp)
          if (!star_[b][bp].is_zero()) {
            blocks.insert(block(bp, a));
            blocks.insert(block(bp, c));
          }
      }
      for (std::size_t blk : blocks) affected_[blk].push_back(gi);
    }
  }

  std::size_t complex_unknowns() const { return x_.size(); }
  const std::vector<Group>& groups() const { return groups_; }
  std::string unknown_name(std::size_t u) const {
    const std::size_t c = u % n_, a = (u / n_) % n_, b = u / (n_ * n_);
    return "X[" + g_.labels[b] + "](" + dx(a) + "," + dx(c) + ")";
  }

  LinearSystem<Rational> build(bool star_flag, std::size_t& equations) {
    const std::size_t comps = 2 * (static_cast<std::size_t>(g_.n) + 2);
    std::vector<std::vector<Rational>> base;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) base.push_back(flatten(residual(groups_[gi])));
    std::vector<LinearSystem<Rational>::Row> rows(groups_.size() * comps);

    for (std::size_t u = 0; u < x_.size(); ++u) {
      const std::size_t blk = u / n_;
      for (int part = 0; part < 2; ++part) {
        x_[u] = part == 0 ? GR(1) : GR::i();
        for (std::size_t gi : affected_[blk]) {
          auto v = flatten(residual(groups_[gi]));
          for (std::size_t r = 0; r < comps; ++r) {
            Rational delta = v[r] - base[gi][r];
            if (sgn(delta) != 0) rows[gi * comps + r].emplace(2 * u + static_cast<std::size_t>(part), std::move(delta));
          }
        }
        x_[u] = GR(0);
      }
    }

    LinearSystem<Rational> sys(2 * x_.size());
    equations = 0;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi)
      for (std::size_t r = 0; r < comps; ++r) {
        auto& row = rows[gi * comps + r];
        if (row.empty() && sgn(base[gi][r]) == 0) continue;
        ++equations;
        sys.add(std::move(row), Rational(-base[gi][r]), groups_[gi].name);
      }
    if (star_flag)
      for (std::size_t u = 0; u < x_.size(); ++u) {
        ++equations;
        sys.add({{2 * u + 1, Rational(1)}}, Rational(0), "star:" + unknown_name(u) + " must be real");
      }
    return sys;
  }

 private:
  std::size_t block(std::size_t b, std::size_t a) const { return b * n_ + a; }
  std::string dx(std::size_t a) const { return "da_" + std::to_string(f_.basis.indices[a]); }

  // Coordinates of nabla_{d_b} dx_a.
  std::vector<GR> nabla(std::size_t b, std::size_t a) const {
    return {x_.begin() + static_cast<std::ptrdiff_t>(block(b, a) * n_),
            x_.begin() + static_cast<std::ptrdiff_t>(block(b, a) * n_ + n_)};
  }
  // Coordinates of nabla_{d_b*} dx_a.
  std::vector<GR> nabla_star(std::size_t b, std::size_t a) const {
    std::vector<GR> out(n_);
    for (std::size_t bp = 0; bp < dim_g_; ++bp) {
      const GR& s = star_[b][bp];
      if (s.is_zero()) continue;
      for (std::size_t c = 0; c < n_; ++c) out[c] += s * x_[block(bp, a) * n_ + c];
    }
    return out;
  }
  std::vector<GR> unit(std::size_t a) const {
    std::vector<GR> out(n_);
    out[a] = GR(1);
    return out;
  }
  KElement pair(const std::vector<GR>& x, const std::vector<GR>& y) const {
    KElement out(g_.n);
    for (std::size_t a = 0; a < n_; ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < n_; ++b) {
        if (y[b].is_zero()) continue;
        GR c;
        switch (f_.kind) {
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
        out += c * f_.h[a][b];
      }
    }
    return out;
  }

  KElement residual(const Group& gr) const {
    if (gr.kind == Group::Torsion) {
      KElement t = -dterm_[(gr.p * dim_g_ + gr.q) * n_ + gr.a];
      for (std::size_t c = 0; c < n_; ++c) {
        const GR& xp = x_[block(gr.p, gr.a) * n_ + c];
        const GR& xq = x_[block(gr.q, gr.a) * n_ + c];
        if (!xp.is_zero()) t += xp * ev_[c][gr.q];
        if (!xq.is_zero()) t -= xq * ev_[c][gr.p];
      }
      return t;
    }
    const std::size_t b = gr.p, a = gr.a, c = gr.q;
    KElement r = der_apply(g_.basis[b], f_.h[a][c]);
    switch (f_.kind) {
      case FormKind::LeftHermitian:
        r -= pair(nabla(b, a), unit(c)) + pair(unit(a), nabla_star(b, c));
        break;
      case FormKind::RightHermitian:
        r -= pair(nabla_star(b, a), unit(c)) + pair(unit(a), nabla(b, c));
        break;
      case FormKind::StarBimodule:
        r -= pair(nabla(b, a), unit(c)) + pair(unit(a), nabla(b, c));
        break;
    }
    return r;
  }

  const LieSubalgebra& g_;
  const HermitianForm& f_;
  std::size_t dim_g_, n_;
  std::vector<GR> x_;
  std::vector<std::vector<KElement>> ev_;
  std::vector<std::vector<GR>> star_;
  std::vector<KElement> dterm_;
  std::vector<Group> groups_;
  std::vector<std::vector<std::size_t>> affected_;
};

Connection from_vector(const LieSubalgebra& g, const Omega1Basis& basis, const std::vector<Rational>& v) {
  const std::size_t n = basis.dim();
  std::vector<Matrix<GR>> x(g.dim(), Matrix<GR>(n, n));
  std::size_t u = 0;
  for (std::size_t b = 0; b < g.dim(); ++b)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c, ++u) x[b](a, c) = GR(v[2 * u], v[2 * u + 1]);
  return connection_from_reduced(g, basis, x);
}

void record(LCCheck& check, const std::vector<Residual>& residuals) {
  if (residuals.empty() || !check.pass) return;
  check.pass = false;
  check.residual = residuals.front();
}

}  // namespace

std::string to_string(LCStatus s) {
  switch (s) {
    case LCStatus::Unique:
      return "unique";
    case LCStatus::Family:
      return "family";
    case LCStatus::Empty:
      return "empty";
  }
  return "unknown";
}

std::vector<Rational> lc_unknowns(const Connection& c, const Omega1Basis& basis) {
  std::vector<Rational> out;
  for (const auto& x : reduced_gamma(c, basis))
    for (std::size_t a = 0; a < x.rows(); ++a)
      for (std::size_t k = 0; k < x.cols(); ++k) {
        out.push_back(x(a, k).re());
        out.push_back(x(a, k).im());
      }
  return out;
}

Connection LCSolution::member(const std::vector<Rational>& t) const {
  if (status == LCStatus::Empty) throw Error("the Levi-Civita family is empty");
  if (t.size() != kernel_vectors.size())
    throw DimensionMismatch(static_cast<int>(kernel_vectors.size()), static_cast<int>(t.size()));
  std::vector<Rational> v = particular_vector;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (sgn(t[k]) != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += t[k] * kernel_vectors[k][j];
  return from_vector(g, basis, v);
}

bool LCSolution::contains(const Connection& c) const {
  if (status == LCStatus::Empty) return false;
  if (c.algebra().basis != g.basis) throw Error("connection is over a different basis of derivations");
  const auto x = lc_unknowns(c, basis);
  LinearSystem<Rational> sys(kernel_vectors.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    LinearSystem<Rational>::Row row;
    for (std::size_t k = 0; k < kernel_vectors.size(); ++k)
      if (sgn(kernel_vectors[k][j]) != 0) row.emplace(k, kernel_vectors[k][j]);
    sys.add(std::move(row), Rational(x[j] - particular_vector[j]));
  }
  return sys.consistent();
}

LCSolution solve_levi_civita(const LieSubalgebra& g_in, const HermitianForm& h, bool star_flag) {
  validate_form(h);
  LCSolution sol;
  sol.g = star_flag ? hermitian_basis(g_in) : g_in;
  sol.basis = h.basis;
  if (omega1_basis(sol.g).indices != h.basis.indices) throw AxiomViolation("form is not over the Omega^1 basis of " + g_in.name);

  Builder builder(sol.g, h);
  std::size_t equations = 0;
  LinearSystem<Rational> sys = builder.build(star_flag, equations);
  sol.unknowns = sys.unknowns();
  sol.equations = equations;
  sol.rank = sys.rank();

  auto family = sys.solve();
  if (!family) {
    sol.status = LCStatus::Empty;
    sol.violated = sys.inconsistency();
    return sol;
  }
  sol.particular_vector = family->particular;
  sol.kernel_vectors = family->kernel;
  sol.status = sol.kernel_vectors.empty() ? LCStatus::Unique : LCStatus::Family;
  sol.particular = from_vector(sol.g, sol.basis, sol.particular_vector);

  // Re-verify the particular solution and particular + each kernel direction
  // against the raw definitions.
  LCCheck torsion_check{"torsion_free", true, std::nullopt};
  LCCheck compat_check{"compatible", true, std::nullopt};
  LCCheck star_check{"star_connection", true, std::nullopt};
  std::vector<Connection> members{*sol.particular};
  for (std::size_t k = 0; k < sol.kernel_vectors.size(); ++k) {
    std::vector<Rational> t(sol.kernel_vectors.size(), Rational(0));
    t[k] = 1;
    members.push_back(sol.member(t));
  }
  for (const auto& c : members) {
    record(torsion_check, torsion_residuals(c));
    record(compat_check, is_compatible(c, h).residuals);
    if (star_flag) record(star_check, star_residuals(c));
  }
  sol.checks = {torsion_check, compat_check};
  if (star_flag) sol.checks.push_back(star_check);
  return sol;
}

}  // namespace ncg
