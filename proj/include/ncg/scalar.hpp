#pragma once

// Exact coefficient arithmetic.
//
//   Rational          arbitrary precision fraction (GMP), always canonical
//   GaussianRational  a + b i with a, b rational; the field Q(i)
//   LaurentScalar     finitely supported sum of c_m q^m, c_m in Q(i), where q
//                     is a formal unit with star(q) = q^{-1}
//
// Text grammar (whitespace-insensitive on input):
//   GaussianRational  "3/2", "-1/3*i", "3/2-1/3*i", "0"
//   LaurentScalar     "(1)*q^-2+(2)*q^0+(1)*q^2", "0"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace ncg {

using Rational = mpq_class;

// Canonical rational num/den; throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT: integers embed implicitly
  GaussianRational(long re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |x|^2 as a rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

using GR = GaussianRational;

inline GR conj(const GR& x) { return x.conj(); }

std::string to_string(const GR& x);
GR parse_gaussian(std::string_view text);
std::ostream& operator<<(std::ostream& os, const GR& x);

class LaurentScalar {
 public:
  using Terms = std::map<std::int64_t, GR>;

  LaurentScalar() = default;
  LaurentScalar(const GR& c) { add_term(0, c); }  // NOLINT: constants embed implicitly
  LaurentScalar(int c) : LaurentScalar(GR(c)) {}  // NOLINT

  static LaurentScalar monomial(const GR& c, std::int64_t exponent);
  static LaurentScalar q(std::int64_t exponent = 1) { return monomial(GR(1), exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Coefficient of q^m (zero when absent).
  GR coefficient(std::int64_t exponent) const;

  LaurentScalar star() const;
  // Inverse of a single term c q^m; throws NotInvertible otherwise.
  LaurentScalar invert_monomial() const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  LaurentScalar operator-() const;

  friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;

 private:
  void add_term(std::int64_t exponent, const GR& c);

  Terms terms_;
};

using LS = LaurentScalar;

std::string to_string(const LaurentScalar& x);
LaurentScalar parse_laurent(std::string_view text);
std::ostream& operator<<(std::ostream& os, const LaurentScalar& x);

}  // namespace ncg
