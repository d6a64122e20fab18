#include "ncg/kronecker.hpp"

#include "ncg/error.hpp"

namespace ncg {

namespace {

void require_same_n(const KElement& a, const KElement& b) {
  if (a.n != b.n) throw DimensionMismatch(a.n, b.n);
}

}  // namespace

KElement::KElement(int arrows) : n(arrows), alpha(static_cast<std::size_t>(arrows)) {
  if (arrows < 1) throw Error("K_N needs at least one arrow, got " + std::to_string(arrows));
}

KElement::KElement(int arrows, GR l, GR m, std::vector<GR> a)
    : n(arrows), lambda(std::move(l)), mu(std::move(m)), alpha(std::move(a)) {
  if (arrows < 1) throw Error("K_N needs at least one arrow, got " + std::to_string(arrows));
  if (static_cast<int>(alpha.size()) != arrows) throw DimensionMismatch(arrows, static_cast<int>(alpha.size()));
}

KElement KElement::one(int n) {
  KElement x(n);
  x.lambda = GR(1);
  return x;
}

KElement KElement::scalar(int n, const GR& c) {
  KElement x(n);
  x.lambda = c;
  return x;
}

KElement KElement::e(int n) {
  KElement x(n);
  x.mu = GR(1);
  return x;
}

KElement KElement::arrow(int n, int k) {
  if (k < 1 || k > n) throw Error("arrow index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  KElement x(n);
  x.alpha[static_cast<std::size_t>(k - 1)] = GR(1);
  return x;
}

bool KElement::is_zero() const {
  if (!in_ideal()) return false;
  for (const auto& c : alpha)
    if (!c.is_zero()) return false;
  return true;
}

KElement& KElement::operator+=(const KElement& o) {
  require_same_n(*this, o);
  lambda += o.lambda;
  mu += o.mu;
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += o.alpha[i];
  return *this;
}

KElement& KElement::operator-=(const KElement& o) {
  require_same_n(*this, o);
  lambda -= o.lambda;
  mu -= o.mu;
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] -= o.alpha[i];
  return *this;
}

KElement KElement::operator-() const {
  KElement out(*this);
  out.lambda = -out.lambda;
  out.mu = -out.mu;
  for (auto& c : out.alpha) c = -c;
  return out;
}

KElement operator*(const GR& c, const KElement& a) {
  KElement out(a);
  out.lambda *= c;
  out.mu *= c;
  for (auto& x : out.alpha) x *= c;
  return out;
}

std::vector<KElement> k_basis(int n) {
  std::vector<KElement> out{KElement::one(n), KElement::e(n)};
  for (int k = 1; k <= n; ++k) out.push_back(KElement::arrow(n, k));
  return out;
}

KElement k_mul(const KElement& a, const KElement& b) {
  require_same_n(a, b);
  KElement out(a.n);
  out.lambda = a.lambda * b.lambda;
  out.mu = a.lambda * b.mu + b.lambda * a.mu + a.mu * b.mu;
  const GR left = a.lambda + a.mu;
  for (std::size_t i = 0; i < out.alpha.size(); ++i) out.alpha[i] = left * b.alpha[i] + b.lambda * a.alpha[i];
  return out;
}

KElement k_commutator(const KElement& a, const KElement& b) { return k_mul(a, b) - k_mul(b, a); }

KElement k_star(const KElement& a) {
  KElement out(a.n);
  out.lambda = a.lambda.conj() + a.mu.conj();
  out.mu = -a.mu.conj();
  for (std::size_t i = 0; i < out.alpha.size(); ++i) out.alpha[i] = a.alpha[i].conj();
  return out;
}

KElement k_inverse(const KElement& a) {
  if (a.lambda.is_zero()) throw NotInvertible("element is not invertible: lambda = 0");
  const GR sum = a.lambda + a.mu;
  if (sum.is_zero()) throw NotInvertible("element is not invertible: lambda + mu = 0");
  const GR scale = (a.lambda * sum).inverse();
  KElement out(a.n);
  out.lambda = scale * sum;
  out.mu = -(scale * a.mu);
  for (std::size_t i = 0; i < out.alpha.size(); ++i) out.alpha[i] = -(scale * a.alpha[i]);
  return out;
}

bool k_is_central(const KElement& a) {
  if (!a.mu.is_zero()) return false;
  for (const auto& c : a.alpha)
    if (!c.is_zero()) return false;
  return true;
}

bool k_commutes_with_generators(const KElement& a) {
  if (!k_commutator(a, KElement::e(a.n)).is_zero()) return false;
  for (int k = 1; k <= a.n; ++k)
    if (!k_commutator(a, KElement::arrow(a.n, k)).is_zero()) return false;
  return true;
}

GR k_trace_eval(const KTrace& t, const KElement& a) {
  // tau(1) = tau0, tau(e) = tau0/2 + i tau1, tau(a_k) = 0
  const GR tau_e(t.tau0 / 2, t.tau1);
  return a.lambda * GR(t.tau0) + a.mu * tau_e;
}

std::optional<KElement> k_positive_trace_witness(const KTrace& t, int n) {
  // tau(a* a) = (|lambda|^2 + Re(lambda conj(mu))) tau0 + 2 Im(lambda conj(mu)) tau1
  KElement a(n);
  if (sgn(t.tau0) > 0) {
    a.lambda = GR(1);
    a.mu = GR(-2);
  } else if (sgn(t.tau0) < 0) {
    a.lambda = GR(1);
  } else if (sgn(t.tau1) != 0) {
    a.lambda = GR::i();
    a.mu = GR(Rational(-(t.tau0 + 1) / (2 * t.tau1)));
  } else {
    return std::nullopt;
  }
  return a;
}

std::string to_string(const KElement& a) {
  std::string out = "[" + to_string(a.lambda) + "; " + to_string(a.mu) + ";";
  for (const auto& c : a.alpha) out += " " + to_string(c);
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const KElement& a) { return os << to_string(a); }

}  // namespace ncg
