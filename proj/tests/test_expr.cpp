#include <doctest.h>

#include <random>
#include <variant>

#include "spinalg/expr.hpp"
#include "spinalg/ops.hpp"

using namespace spinalg;

namespace {

OperatorExpr X(int d, int i) { return OperatorExpr::x(d, i); }
OperatorExpr P(int d, int i) { return OperatorExpr::p(d, i); }
OperatorExpr C(int d, const ParamPoly& c) { return OperatorExpr::scalar(d, c); }
const ParamPoly kI = ParamPoly::i();

std::string diag(std::string_view text, int d) {
  try {
    parse(text, d);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

OperatorExpr random_expr(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> kind(0, 3), idx(1, d), len(0, 5), re(-3, 3), im(-1, 1), pw(0, 2);
  std::vector<FormalProduct> sum;
  for (int t = 0; t < 3; ++t) {
    FormalProduct fp;
    for (int k = len(rng); k > 0; --k) {
      const int kd = kind(rng);
      fp.letters.push_back(kd == 3 ? Letter{GenKind::RInv2, 0}
                                   : Letter{kd == 0 ? GenKind::X : kd == 1 ? GenKind::P : GenKind::Gamma, idx(rng)});
    }
    fp.coeff = ParamPoly::monomial(GaussianRational(Rational(re(rng), 1 + pw(rng)), Rational(im(rng))), pw(rng), pw(rng));
    sum.push_back(fp);
  }
  return normalize(d, sum);
}

}  // namespace

TEST_CASE("parse produces the expected tree shapes") {
  const Ast c = parse("[x1, p1]", 3);
  const auto* br = std::get_if<BracketNode>(&c.node().node);
  REQUIRE(br);
  CHECK(!br->anti);
  CHECK(std::holds_alternative<GeneratorNode>(br->left.node().node));
  // juxtaposition binds tighter than +
  const Ast s = parse("x1 + p1 x2", 3);
  const auto* sum = std::get_if<SumNode>(&s.node().node);
  REQUIRE(sum);
  REQUIRE(sum->terms.size() == 2);
  CHECK(std::holds_alternative<ProductNode>(sum->terms[1].second.node().node));
  CHECK(s.str() == "x1 + p1*x2");
  // ^ applies to the whole bracket
  const Ast pw = parse("[x1,p1]^2", 3);
  const auto* pn = std::get_if<PowerNode>(&pw.node().node);
  REQUIRE(pn);
  CHECK(pn->exponent == 2);
  CHECK(std::holds_alternative<BracketNode>(pn->base.node().node));
  CHECK(pw.str() == "[x1, p1]^2");
  CHECK(parse("-x1^2", 3).str() == "-x1^2");
  CHECK(parse("(x1 + p1)^3", 3).str() == "(x1 + p1)^3");
  CHECK(parse("{g1, g2} - [J(1,2), A(3)]", 3).str() == "{g1, g2} - [J(1,2), A(3)]");
}

TEST_CASE("evaluate examples") {
  CHECK(reduce("[x1, p1]", 3) == C(3, kI));
  CHECK(reduce("x1*p1 - p1*x1", 2) == C(2, kI));
  CHECK(reduce("x1 p1 - p1 x1", 2) == C(2, kI));
  CHECK(reduce("[T, G0] - i*Gd1", 2).is_zero());
  CHECK(reduce("[A(1),M(1)] - i*T", 2).is_zero());
  CHECK(reduce("Q2", 3) == C(3, Rational(-5, 4)));
  CHECK(reduce("(1-2E)/2 * G0 + (1+2E)/2 * Gd1", 3) == build(3, "K"));
  CHECK(reduce("J(1,2)^2 + Q2", 3) == build(3, "J", {1, 2}) * build(3, "J", {1, 2}) + build(3, "Q2"));
  CHECK(reduce("LRL(1)", 3) == build_lrl(3, 1));
  CHECK(reduce("(g1 x1 + g2 x2 + g3 x3)^2", 3) == OperatorExpr::r2(3));
  CHECK(reduce("2 i x1 / 3", 3) == C(3, ParamPoly(GaussianRational(Rational(0), Rational(2, 3)))) * X(3, 1));
  CHECK(reduce("x1^0", 3) == C(3, 1));
  CHECK(reduce("{g1, g1}", 3) == C(3, 2));
  CHECK(reduce("rinv2 (x1^2 + x2^2)", 2) == C(2, 1));
}

TEST_CASE("dimension gating and index errors") {
  CHECK(diag("J(1,4)", 3) == "1:5: index 4 out of range 1..3");
  CHECK(diag("x0", 3) == "1:1: index 0 out of range 1..3");
  CHECK_THROWS_AS(evaluate(parse("Jvec(1)", 4), 4), std::domain_error);
  CHECK_NOTHROW(evaluate(parse("Jvec(1)", 3), 3));
  CHECK_THROWS_AS(parse("x1", 0), std::out_of_range);
}

TEST_CASE("positioned diagnostics") {
  CHECK(diag("x1 +", 3) == "1:5: expected a number, identifier, '(', '[' or '{', found end of input");
  CHECK(diag("foo", 3) == "1:1: unknown identifier 'foo'");
  CHECK(diag("x1 $", 3) == "1:4: expected an expression token, found '$'");
  CHECK(diag("x1^99", 3) == "1:4: exponent 99 exceeds 64");
  CHECK(diag("[x1 p1]", 3) == "1:7: expected ',', found ']'");
  CHECK(diag("LRL(1", 3) == "1:6: expected ')', found end of input");
  CHECK(diag("3/0", 3) == "1:1: invalid number 3/0");
  CHECK(diag("x1\n  + )", 3).starts_with("2:5: "));
  // nesting limit
  CHECK(!diag(std::string(500, '(') + "x1" + std::string(500, ')'), 3).empty());
  CHECK(diag(std::string(200, '(') + "x1" + std::string(200, ')'), 3).empty());
}

TEST_CASE("format") {
  CHECK(format(OperatorExpr(3)) == "0");
  CHECK(format(C(3, kI)) == "i");
  CHECK(format(X(2, 1) * P(2, 1)) == "x1*p1");
  CHECK(format(adjoint(X(2, 1) * P(2, 1))) == "-i+x1*p1");
  CHECK(format(OperatorExpr::r2(3)) == "x1^2+x2^2+x3^2");
}

TEST_CASE("canonical text round trip") {
  for (int d = 2; d <= 5; ++d) {
    std::mt19937_64 rng(900 + d);
    for (int n = 0; n < 200; ++n) {
      const OperatorExpr a = random_expr(rng, d);
      const std::string text = format(a);
      CAPTURE(text);
      REQUIRE(reduce(text, d) == a);
    }
  }
}

TEST_CASE("fuzzed input never crashes and errors carry a position") {
  const std::string alphabet = "x1p2g3 +-*/^()[]{},iEJALRMTHK0.$\n";
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 24);
  int errors = 0;
  for (int n = 0; n < 5000; ++n) {
    std::string s;
    for (std::size_t k = len(rng); k > 0; --k) s += alphabet[pick(rng)];
    try {
      const Ast a = parse(s, 3);
      try {
        evaluate(a, 3);
      } catch (const std::domain_error&) {
      } catch (const std::out_of_range&) {
      }
    } catch (const ParseError& e) {
      ++errors;
      REQUIRE(e.line() >= 1);
      REQUIRE(e.col() >= 1);
    }
  }
  CHECK(errors > 0);
}
