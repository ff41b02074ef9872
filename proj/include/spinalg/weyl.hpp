#pragma once

// Canonical forms and exact arithmetic in the Weyl algebra (x_i, p_i with
// [x_i, p_j] = i delta_ij) tensored with Cl_d and localized at r^2 = sum x_i^2.
//
// An element is stored as a sum of graded terms
//
//     c * r^(2k) * x^a * p^b * w,      k <= 0,
//
// where for k < 0 the exponent of x_1 is at most 1 (the x-part is the
// remainder of division by r^2 under graded lex order x_1 > ... > x_d) and
// k = 0 carries an arbitrary polynomial. This decomposition is unique, so
// equality is structural. The left-fraction view r^(-2m) * N with N not
// left-divisible by r^2 is derived from it on demand.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinalg/clifford.hpp"
#include "spinalg/coeff.hpp"

namespace spinalg {

using Exponents = std::array<std::uint8_t, kMaxDim>;

/// x^x * p^p * word, always in that order.
struct Monomial {
  Exponents x{};
  Exponents p{};
  CliffordWord word;

  int x_degree() const;
  int p_degree() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// r^(2*rpow) * mono.
struct GradedKey {
  int rpow = 0;
  Monomial mono;
  friend auto operator<=>(const GradedKey&, const GradedKey&) = default;
};

/// Polynomial in x only (one (p, word) slice of a numerator).
using XPoly = std::map<Exponents, ParamPoly>;
/// Left-fraction numerator.
using Numerator = std::map<Monomial, ParamPoly>;

class OperatorExpr {
 public:
  using TermMap = std::map<GradedKey, ParamPoly>;

  /// The zero element of dimension d.
  explicit OperatorExpr(int d);

  static OperatorExpr scalar(int d, const ParamPoly& c);
  static OperatorExpr x(int d, int i);
  static OperatorExpr p(int d, int i);
  static OperatorExpr gamma(int d, int i);
  static OperatorExpr word(int d, const CliffordWord& w);
  /// r^(-2)
  static OperatorExpr rinv2(int d);
  /// r^2 expanded as sum x_i^2.
  static OperatorExpr r2(int d);
  /// c * r^(2*rpow) * mono for any rpow <= 0 and any x exponents.
  static OperatorExpr term(int d, int rpow, const Monomial& mono, const ParamPoly& c);

  int d() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// m in the left-fraction form r^(-2m) * N.
  int denom_pow() const;
  /// N in the left-fraction form; never left-divisible by r^2 when m > 0.
  Numerator numerator() const;
  /// Number of monomials in the left-fraction numerator.
  std::size_t term_count() const { return numerator().size(); }
  bool depends_on_alpha() const;
  bool depends_on_energy() const;

  /// Canonical text, e.g. "rinv2^1*(x1*g1 + x2*g2)"; parseable by the
  /// expression language.
  std::string str() const;

  OperatorExpr operator-() const;
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const ParamPoly& c);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const ParamPoly& c) { return a *= c; }
  friend OperatorExpr operator*(const ParamPoly& c, OperatorExpr a) { return a *= c; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  /// Adds c * r^(2*rpow) * mono, reducing the x-part modulo r^2 when rpow < 0.
  void add_term(int rpow, const Monomial& mono, const ParamPoly& c);

 private:
  void add_canonical(const GradedKey& key, const ParamPoly& c);
  int d_;
  TermMap terms_;
};

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr linear_combine(int d, const std::vector<std::pair<ParamPoly, OperatorExpr>>& terms);
/// Formal adjoint: conjugated coefficients, reversed order, every generator
/// (x_i, p_i, gamma_i, r^-2) self-adjoint.
OperatorExpr adjoint(const OperatorExpr& a);
inline bool is_zero(const OperatorExpr& a) { return a.is_zero(); }
OperatorExpr substitute(const OperatorExpr& a, const std::optional<GaussianRational>& alpha_val,
                        const std::optional<GaussianRational>& e_val);
OperatorExpr power(const OperatorExpr& a, unsigned n);

/// Builds r^(-2m) * numerator and divides out r^2 on the left as long as
/// possible.
OperatorExpr reduce_denominator(int d, const Numerator& numerator, int m);

struct R2Division {
  XPoly quotient;
  XPoly remainder;
};
/// Division of an x-polynomial by r^2 under graded lex order x_1 > ... > x_d.
/// The remainder has no monomial divisible by x_1^2.
R2Division divide_by_r2(int d, const XPoly& poly);
/// True iff every (p, word) slice of the numerator is divisible by r^2.
bool left_divisible_by_r2(int d, const Numerator& numerator);

/// For odd d: maps every Clifford word longer than (d-1)/2 onto its
/// complement using gamma_1...gamma_d = c, i.e. projects onto the quotient
/// realized by an irreducible representation.
OperatorExpr pseudoscalar_quotient(const OperatorExpr& a, const GaussianRational& c);

// ---------------------------------------------------------------------------
// Rewriting normalizer.

enum class GenKind : std::uint8_t { RInv2, X, P, Gamma };

struct Letter {
  GenKind kind = GenKind::X;
  int index = 0;  // 1..d; unused for RInv2
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct FormalProduct {
  ParamPoly coeff{1};
  std::vector<Letter> letters;
};

enum class RewriteOrder { Leftmost, Random };

/// Normalizes a formal sum of generator strings by local rewriting:
/// p_i x_j -> x_j p_i - i delta_ij, gamma word reduction, p_i r^-2 ->
/// r^-2 p_i + 2i x_i r^-4, commuting swaps, then a single left denominator
/// and denominator minimality. Any redex order reaches the same result;
/// Random picks redexes with the given seed.
OperatorExpr normalize(int d, const std::vector<FormalProduct>& sum, RewriteOrder order = RewriteOrder::Leftmost,
                       std::uint64_t seed = 0);

}  // namespace spinalg
