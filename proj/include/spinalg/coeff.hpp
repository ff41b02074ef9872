#pragma once

// Exact scalars: rationals, Gaussian rationals and sparse polynomials in the
// two symbolic parameters alpha (coupling) and E (energy).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace spinalg {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "n" or "n/d" (optional leading sign).
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// re + im*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  /// i^k for any integer k.
  static GaussianRational i_pow(int k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }

  /// Compact form used in expression text: "3/2", "-i", "1/2+3/4i".
  std::string str() const;
  /// Fixed two-part form used by the matrix fixtures: "a+bi" / "a-bi".
  std::string fixture_str() const;
  /// Inverse of fixture_str(); also accepts the compact form.
  static GaussianRational parse(std::string_view text);

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

/// Sparse polynomial in alpha and E with Gaussian-rational coefficients.
/// Terms are kept sorted by (alpha power, E power) ascending and never hold a
/// zero coefficient, so structural equality is mathematical equality.
class ParamPoly {
 public:
  struct Term {
    std::uint8_t alpha = 0;
    std::uint8_t energy = 0;
    GaussianRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  ParamPoly() = default;
  ParamPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamPoly(Rational c) : ParamPoly(GaussianRational(std::move(c))) {}  // NOLINT

  static ParamPoly monomial(GaussianRational c, unsigned alpha_pow, unsigned e_pow);
  static ParamPoly alpha() { return monomial(1, 1, 0); }
  static ParamPoly energy() { return monomial(1, 0, 1); }
  static ParamPoly i() { return GaussianRational::i(); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero if absent).
  GaussianRational constant() const;
  bool depends_on_alpha() const;
  bool depends_on_energy() const;
  /// True iff no stored coefficient is zero and terms are strictly sorted.
  bool is_canonical() const;

  ParamPoly conj() const;
  ParamPoly substitute(const std::optional<GaussianRational>& alpha_val,
                       const std::optional<GaussianRational>& e_val) const;

  /// Canonical text: terms by (alpha power, E power) descending, e.g.
  /// "2*alpha*E-1/2*E+3".
  std::string str() const;
  /// str() wrapped in parentheses when it is not a single factor-like term.
  std::string factor_str() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const GaussianRational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  void add_term(std::uint8_t a, std::uint8_t e, const GaussianRational& c);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

ParamPoly poly_add(const ParamPoly& a, const ParamPoly& b);
ParamPoly poly_mul(const ParamPoly& a, const ParamPoly& b);
ParamPoly poly_conjugate(const ParamPoly& a);
ParamPoly poly_substitute(const ParamPoly& a, const std::optional<GaussianRational>& alpha_val,
                          const std::optional<GaussianRational>& e_val);

}  // namespace spinalg
