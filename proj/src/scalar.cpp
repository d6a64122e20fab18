#include "ncg/scalar.hpp"

#include <cctype>
#include <sstream>

#include "ncg/error.hpp"

namespace ncg {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Minimal cursor over a whitespace-free string.
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
  }
};

std::string read_digits(Cursor& cur) {
  std::size_t start = cur.pos;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  if (start == cur.pos) cur.fail("expected digits");
  return std::string(cur.s.substr(start, cur.pos - start));
}

// unsigned rational: digits ['/' digits]
Rational read_unsigned_rational(Cursor& cur) {
  std::string num = read_digits(cur);
  std::string den = "1";
  if (cur.eat('/')) den = read_digits(cur);
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::int64_t read_signed_int(Cursor& cur) {
  bool neg = false;
  if (cur.eat('-')) neg = true;
  else cur.eat('+');
  std::string digits = read_digits(cur);
  std::int64_t v = std::stoll(digits);
  return neg ? -v : v;
}

// GaussianRational body: sum of signed terms, each either a rational, a
// rational followed by "*i", or a bare "i". Stops at ')' or end.
GR read_gaussian(Cursor& cur) {
  GR total;
  bool first = true;
  while (!cur.done() && cur.peek() != ')') {
    int sign = 1;
    if (cur.eat('-')) sign = -1;
    else if (!cur.eat('+') && !first) cur.fail("expected '+' or '-'");
    first = false;
    GR term;
    if (cur.eat('i')) {
      term = GR::i();
    } else {
      Rational r = read_unsigned_rational(cur);
      if (cur.eat('*')) {
        if (!cur.eat('i')) cur.fail("expected 'i' after '*'");
        term = GR(Rational(0), r);
      } else {
        term = GR(r);
      }
    }
    total += sign > 0 ? term : -term;
  }
  if (first) cur.fail("empty scalar");
  return total;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string clean = strip_spaces(text);
  Cursor cur{clean};
  bool neg = cur.eat('-');
  if (!neg) cur.eat('+');
  Rational r = read_unsigned_rational(cur);
  if (!cur.done()) cur.fail("trailing characters");
  return neg ? Rational(-r) : r;
}

GR GR::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm2();
  return {re_ / n, -im_ / n};
}

GR& GR::operator+=(const GR& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GR& GR::operator-=(const GR& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GR& GR::operator*=(const GR& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GR& GR::operator/=(const GR& o) { return *this *= o.inverse(); }

std::string to_string(const GR& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (sgn(x.re()) != 0) out = x.re().get_str();
  if (sgn(x.im()) != 0) {
    if (!out.empty() && sgn(x.im()) > 0) out += "+";
    out += x.im().get_str() + "*i";
  }
  return out;
}

GR parse_gaussian(std::string_view text) {
  std::string clean = strip_spaces(text);
  Cursor cur{clean};
  GR value = read_gaussian(cur);
  if (!cur.done()) cur.fail("trailing characters");
  return value;
}

std::ostream& operator<<(std::ostream& os, const GR& x) { return os << to_string(x); }

// ---------------------------------------------------------------------------

void LaurentScalar::add_term(std::int64_t exponent, const GR& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentScalar LaurentScalar::monomial(const GR& c, std::int64_t exponent) {
  LaurentScalar out;
  out.add_term(exponent, c);
  return out;
}

GR LaurentScalar::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? GR() : it->second;
}

LaurentScalar LaurentScalar::star() const {
  LaurentScalar out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(-m, c.conj());
  return out;
}

LaurentScalar LaurentScalar::invert_monomial() const {
  if (!is_monomial()) {
    throw NotInvertible("invert_monomial requires a single nonzero term, got " + to_string(*this));
  }
  const auto& [m, c] = *terms_.begin();
  return monomial(c.inverse(), -m);
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  for (const auto& [m, c] : a.terms_) {
    for (const auto& [n, d] : b.terms_) out.add_term(m + n, c * d);
  }
  return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string to_string(const LaurentScalar& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += "+";
    out += "(" + to_string(c) + ")*q^" + std::to_string(m);
  }
  return out;
}

LaurentScalar parse_laurent(std::string_view text) {
  std::string clean = strip_spaces(text);
  Cursor cur{clean};
  LaurentScalar total;
  bool first = true;
  while (!cur.done()) {
    if (!first && !cur.eat('+')) cur.fail("expected '+' between terms");
    first = false;
    GR coef(1);
    bool have_coef = false;
    if (cur.eat('(')) {
      coef = read_gaussian(cur);
      if (!cur.eat(')')) cur.fail("expected ')'");
      have_coef = true;
    } else if (cur.peek() != 'q') {
      // bare signed rational coefficient, e.g. "-3*q^2" or "5"
      bool neg = cur.eat('-');
      Rational r = read_unsigned_rational(cur);
      coef = GR(neg ? Rational(-r) : r);
      if (cur.eat('*')) {
        if (cur.eat('i')) coef = GR(Rational(0), coef.re());
        else --cur.pos;
      }
      have_coef = true;
    }
    std::int64_t exponent = 0;
    if (have_coef && cur.eat('*')) {
      if (!cur.eat('q')) cur.fail("expected 'q'");
      exponent = cur.eat('^') ? read_signed_int(cur) : 1;
    } else if (!have_coef) {
      if (!cur.eat('q')) cur.fail("expected term");
      exponent = cur.eat('^') ? read_signed_int(cur) : 1;
    }
    total += LaurentScalar::monomial(coef, exponent);
  }
  if (first) cur.fail("empty Laurent scalar");
  return total;
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << to_string(x); }

}  // namespace ncg
