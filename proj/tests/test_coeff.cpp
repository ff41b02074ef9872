#include <doctest.h>

#include <map>
#include <random>

#include "spinalg/coeff.hpp"

using namespace spinalg;

namespace {

ParamPoly alpha() { return ParamPoly::alpha(); }
ParamPoly E() { return ParamPoly::energy(); }
ParamPoly I() { return ParamPoly::i(); }

ParamPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_terms(0, 4), pw(0, 3), num(-5, 5), den(1, 4);
  ParamPoly out;
  for (int k = n_terms(rng); k > 0; --k) {
    GaussianRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    out += ParamPoly::monomial(c, pw(rng), pw(rng));
  }
  return out;
}

// Dense reference model: (alpha power, E power) -> (re, im) as mpq pairs.
using Dense = std::map<std::pair<int, int>, std::pair<mpq_class, mpq_class>>;

Dense dense(const ParamPoly& p) {
  Dense out;
  for (const auto& t : p.terms()) out[{t.alpha, t.energy}] = {t.coeff.re().value(), t.coeff.im().value()};
  return out;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto& slot = out[{ka.first + kb.first, ka.second + kb.second}];
      slot.first += ca.first * cb.first - ca.second * cb.second;
      slot.second += ca.first * cb.second + ca.second * cb.first;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.first == 0 && kv.second.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("gaussian rational text forms") {
  CHECK(GaussianRational::i().str() == "i");
  CHECK(GaussianRational(Rational(0), Rational(-1)).str() == "-i");
  CHECK(GaussianRational(Rational(1, 2), Rational(3, 4)).str() == "1/2+3/4i");
  CHECK(GaussianRational(Rational(0), Rational(-1, 2)).fixture_str() == "0-1/2i");
  CHECK(GaussianRational::parse("0-1/2i") == GaussianRational(Rational(0), Rational(-1, 2)));
  CHECK(GaussianRational::parse("1/2+3/4i") == GaussianRational(Rational(1, 2), Rational(3, 4)));
  CHECK(GaussianRational::parse("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(GaussianRational::parse("5") == GaussianRational(5));
}

TEST_CASE("poly_add") {
  CHECK(poly_add(alpha(), -alpha()).is_zero());
  CHECK(poly_add(ParamPoly(Rational(1, 2)) + E(), ParamPoly(Rational(1, 2)) - E()) == ParamPoly(1));
  CHECK(poly_add(ParamPoly(2) * E() * alpha(), ParamPoly(3) * E() * alpha()) == ParamPoly(5) * E() * alpha());
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(ParamPoly(1) - ParamPoly(2) * E(), ParamPoly(1) + ParamPoly(2) * E()) ==
        ParamPoly(1) - ParamPoly(4) * E() * E());
  CHECK(poly_mul(I(), I()) == ParamPoly(-1));
  CHECK(poly_mul(alpha(), ParamPoly()).is_zero());
}

TEST_CASE("poly_conjugate") {
  CHECK(poly_conjugate(I()) == -I());
  CHECK(poly_conjugate(ParamPoly(3) + ParamPoly(2) * I() * E()) == ParamPoly(3) - ParamPoly(2) * I() * E());
  CHECK(poly_conjugate(alpha()) == alpha());
}

TEST_CASE("poly_substitute") {
  CHECK(poly_substitute(ParamPoly(1) - ParamPoly(2) * E(), std::nullopt, GaussianRational(Rational(1, 2))).is_zero());
  CHECK(poly_substitute(alpha() * alpha(), GaussianRational(3), std::nullopt) == ParamPoly(9));
  CHECK(poly_substitute(alpha() * E(), std::nullopt, std::nullopt) == alpha() * E());
}

TEST_CASE("canonical rendering") {
  CHECK((ParamPoly(2) * alpha() * E() - ParamPoly(Rational(1, 2)) * E() + ParamPoly(3)).str() ==
        "2*alpha*E-1/2*E+3");
  CHECK(ParamPoly().str() == "0");
  CHECK(I().str() == "i");
  CHECK((ParamPoly(GaussianRational(Rational(1), Rational(2))) * alpha()).str() == "(1+2i)*alpha");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 1000; ++n) {
    const ParamPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE(poly_conjugate(poly_conjugate(a)) == a);
    REQUIRE(poly_conjugate(a * b) == poly_conjugate(a) * poly_conjugate(b));
    for (const ParamPoly& r : {a * b, a + b, a - b, a * b + c, poly_conjugate(a)}) REQUIRE(r.is_canonical());
    // independent dense model
    REQUIRE(dense(a * b) == dense_mul(dense(a), dense(b)));
  }
}
