#include <doctest.h>

#include <random>

#include "spinalg/oracle.hpp"
#include "spinalg/weyl.hpp"

using namespace spinalg;

namespace {

OperatorExpr X(int d, int i) { return OperatorExpr::x(d, i); }
OperatorExpr P(int d, int i) { return OperatorExpr::p(d, i); }
OperatorExpr G(int d, int i) { return OperatorExpr::gamma(d, i); }
OperatorExpr R(int d) { return OperatorExpr::rinv2(d); }
OperatorExpr C(int d, const ParamPoly& c) { return OperatorExpr::scalar(d, c); }
const ParamPoly kI = ParamPoly::i();

OperatorExpr gamma_dot_x(int d) {
  OperatorExpr out(d);
  for (int i = 1; i <= d; ++i) out += X(d, i) * G(d, i);
  return out;
}

Letter random_letter(std::mt19937_64& rng, int d, bool with_rinv2) {
  const int kinds = with_rinv2 ? 4 : 3;
  const int k = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
  const int i = std::uniform_int_distribution<int>(1, d)(rng);
  switch (k) {
    case 0: return {GenKind::X, i};
    case 1: return {GenKind::P, i};
    case 2: return {GenKind::Gamma, i};
    default: return {GenKind::RInv2, 0};
  }
}

FormalProduct random_product(std::mt19937_64& rng, int d, int max_len) {
  FormalProduct fp;
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int k = 0; k < len; ++k) fp.letters.push_back(random_letter(rng, d, true));
  fp.coeff = ParamPoly(GaussianRational(Rational(std::uniform_int_distribution<int>(-3, 3)(rng)),
                                        Rational(std::uniform_int_distribution<int>(-1, 1)(rng))));
  return fp;
}

OperatorExpr letter_value(int d, const Letter& l) {
  switch (l.kind) {
    case GenKind::X: return X(d, l.index);
    case GenKind::P: return P(d, l.index);
    case GenKind::Gamma: return G(d, l.index);
    case GenKind::RInv2: return R(d);
  }
  return OperatorExpr(d);
}

OperatorExpr multiply_out(int d, const std::vector<FormalProduct>& sum) {
  OperatorExpr out(d);
  for (const auto& fp : sum) {
    OperatorExpr t = C(d, fp.coeff);
    for (const auto& l : fp.letters) t = t * letter_value(d, l);
    out += t;
  }
  return out;
}

OperatorExpr random_expr(std::mt19937_64& rng, int d, int terms = 3, int max_len = 4) {
  std::vector<FormalProduct> sum;
  for (int k = 0; k < terms; ++k) sum.push_back(random_product(rng, d, max_len));
  return normalize(d, sum);
}

bool minimal(const OperatorExpr& a) { return a.denom_pow() == 0 || !left_divisible_by_r2(a.d(), a.numerator()); }

}  // namespace

TEST_CASE("normalize examples") {
  const int d = 3;
  CHECK(normalize(d, {{1, {{GenKind::P, 1}, {GenKind::X, 1}}}}) == X(d, 1) * P(d, 1) - C(d, kI));
  // p1 r^-2 = r^-2 p1 + 2i x1 r^-4 = r^-4 (r^2 p1 + 2i x1)
  const OperatorExpr pr = normalize(d, {{1, {{GenKind::P, 1}, {GenKind::RInv2, 0}}}});
  CHECK(pr == R(d) * P(d, 1) + C(d, ParamPoly(2) * kI) * X(d, 1) * R(d) * R(d));
  CHECK(pr.denom_pow() == 2);
  CHECK(pr.str() == "rinv2^2*(2i*x1+x1^2*p1+x2^2*p1+x3^2*p1)");
  // oracle confirmation of the same rewrite
  const OperatorExpr expected = R(d) * P(d, 1) + C(d, ParamPoly(2) * kI) * X(d, 1) * R(d) * R(d);
  CHECK(crosscheck(P(d, 1) * R(d), expected).agree);
  // x1^2 + x2^2 over r^2 at d = 2 is 1
  CHECK(R(2) * (X(2, 1) * X(2, 1) + X(2, 2) * X(2, 2)) == C(2, 1));
  CHECK_THROWS(normalize(d, {{1, {{GenKind::X, 4}}}}));
}

TEST_CASE("multiply examples") {
  for (int d = 2; d <= 6; ++d) CHECK(gamma_dot_x(d) * gamma_dot_x(d) == OperatorExpr::r2(d));
  CHECK((X(2, 1) * P(2, 1)).str() == "x1*p1");
  CHECK((gamma_dot_x(3) * gamma_dot_x(3)).str() == "x1^2+x2^2+x3^2");
  CHECK_THROWS(X(2, 1) * X(3, 1));
}

TEST_CASE("(x.p)^2 at d = 3 against the oracle") {
  const int d = 3;
  OperatorExpr xp(d);
  for (int i = 1; i <= d; ++i) xp += X(d, i) * P(d, i);
  // (x.p)^2 = sum_ij x_i x_j p_i p_j - i x.p
  OperatorExpr expanded(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) expanded += OperatorExpr::term(d, 0, [&] {
      Monomial m;
      m.x[i - 1]++;
      m.x[j - 1]++;
      m.p[i - 1]++;
      m.p[j - 1]++;
      return m;
    }(), 1);
  expanded -= C(d, kI) * xp;
  CHECK(xp * xp == expanded);
  CHECK(crosscheck(xp * xp, expanded).agree);
}

TEST_CASE("linear_combine") {
  std::mt19937_64 rng(5);
  const OperatorExpr a = random_expr(rng, 3);
  CHECK(linear_combine(3, {{1, a}, {-1, a}}).is_zero());
  CHECK(linear_combine(3, {}).is_zero());
  CHECK(linear_combine(3, {{2, a}, {kI, a}}) == a * ParamPoly(GaussianRational(Rational(2), Rational(1))));
}

TEST_CASE("commutator and anticommutator basics") {
  CHECK(commutator(X(3, 1), P(3, 1)) == C(3, kI));
  CHECK(commutator(X(3, 1), P(3, 2)).is_zero());
  CHECK(!is_zero(commutator(X(3, 1), P(3, 1))));
  CHECK(is_zero(anticommutator(G(3, 1), G(3, 2))));
  CHECK(anticommutator(G(3, 1), G(3, 1)) == C(3, 2));
}

TEST_CASE("adjoint") {
  // (x1 p1)^dagger = p1 x1 = x1 p1 - i
  CHECK(adjoint(X(3, 1) * P(3, 1)) == X(3, 1) * P(3, 1) - C(3, kI));
  CHECK(adjoint(C(3, kI)) == C(3, -kI));
  CHECK(adjoint(G(3, 1) * G(3, 2)) == G(3, 2) * G(3, 1));
  CHECK(adjoint(R(3) * P(3, 1)) == P(3, 1) * R(3));
}

TEST_CASE("reduce_denominator examples") {
  auto num_of = [](const OperatorExpr& a) { return a.numerator(); };
  const OperatorExpr r2 = OperatorExpr::r2(3);
  const OperatorExpr one = reduce_denominator(3, num_of(r2), 1);
  CHECK(one == C(3, 1));
  CHECK(one.denom_pow() == 0);
  const OperatorExpr x1sq = reduce_denominator(2, num_of(X(2, 1) * X(2, 1)), 1);
  CHECK(x1sq.denom_pow() == 1);
  CHECK(x1sq.numerator() == num_of(X(2, 1) * X(2, 1)));
  const OperatorExpr rp = reduce_denominator(3, num_of(r2 * P(3, 1)), 2);
  CHECK(rp.denom_pow() == 1);
  CHECK(rp == R(3) * P(3, 1));
}

TEST_CASE("substitute and parameter dependence") {
  const ParamPoly E = ParamPoly::energy(), alpha = ParamPoly::alpha();
  const OperatorExpr a = C(2, alpha * E) * X(2, 1) + C(2, E) * P(2, 2);
  CHECK(a.depends_on_alpha());
  CHECK(a.depends_on_energy());
  const OperatorExpr s = substitute(a, GaussianRational(2), GaussianRational(Rational(1, 2)));
  CHECK(s == X(2, 1) + C(2, Rational(1, 2)) * P(2, 2));
  CHECK(!s.depends_on_energy());
  CHECK(substitute(a, std::nullopt, std::nullopt) == a);
}

TEST_CASE("normalize confluence: leftmost, random and multiplication agree") {
  for (int d = 2; d <= 4; ++d) {
    std::mt19937_64 rng(1000 + d);
    for (int n = 0; n < 500; ++n) {
      std::vector<FormalProduct> sum;
      const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < terms; ++k) sum.push_back(random_product(rng, d, 6));
      const OperatorExpr left = normalize(d, sum, RewriteOrder::Leftmost);
      REQUIRE(minimal(left));
      REQUIRE(normalize(d, sum, RewriteOrder::Random, rng()) == left);
      REQUIRE(normalize(d, sum, RewriteOrder::Random, rng()) == left);
      REQUIRE(multiply_out(d, sum) == left);
      // shuffled term order
      std::shuffle(sum.begin(), sum.end(), rng);
      REQUIRE(normalize(d, sum, RewriteOrder::Random, rng()) == left);
    }
  }
}

TEST_CASE("associativity, adjoint anti-automorphism and minimality") {
  for (int d = 2; d <= 4; ++d) {
    std::mt19937_64 rng(77 + d);
    for (int n = 0; n < 150; ++n) {
      const OperatorExpr a = random_expr(rng, d), b = random_expr(rng, d), c = random_expr(rng, d);
      const OperatorExpr ab = a * b;
      REQUIRE(ab * c == a * (b * c));
      REQUIRE(adjoint(ab) == adjoint(b) * adjoint(a));
      REQUIRE(adjoint(adjoint(a)) == a);
      REQUIRE(a * (b + c) == ab + a * c);
      for (const OperatorExpr& r : {ab, a + b, a - b, commutator(a, b), adjoint(a)}) REQUIRE(minimal(r));
    }
  }
}

TEST_CASE("canonical text round trip through reduce_denominator") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    const OperatorExpr a = random_expr(rng, 3);
    REQUIRE(reduce_denominator(3, a.numerator(), a.denom_pow()) == a);
    REQUIRE(a.term_count() == a.numerator().size());
  }
}
