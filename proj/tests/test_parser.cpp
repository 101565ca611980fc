#include "doctest.h"
#include "qweyl/errors.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/qdiff.hpp"
#include "support.hpp"

using namespace qweyl;

namespace {

PresentationId pres(Family f, bool loc, int n) { return {f, loc, ParamContext::symbolic(n)}; }

ErrorCode code_of(const std::string& src, const PresentationId& p) {
  try {
    parse_element(src, p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << src);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("grammar examples") {
  auto aja = pres(Family::AJ, false, 1);
  CHECK(parse_element("x1*y1 - q1*y1*x1 - 1", aja).is_zero());
  auto mb = pres(Family::Malt, true, 2);
  NormalElement e = parse_element("z1^-1*x2", mb);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first == NormalMonomial{{0, 1}, {-1, 0}});
  CHECK(e.terms().begin()->second.is_one());
  auto x2 = parse_element("x1^2", aja);
  CHECK(x2 == NormalElement::generator(aja, Letter::X, 1, 2));
  CHECK(parse_element("z1", aja) == z_element(aja, 1));
  CHECK(parse_element("z1^2", aja) == z_element(aja, 1) * z_element(aja, 1));
}

TEST_CASE("precedence") {
  auto p = pres(Family::AJ, true, 1);
  auto q1 = Scalar::q(1);
  CHECK(parse_scalar("-q1^2") == -(q1 * q1));
  CHECK(parse_scalar("2*3^2") == Scalar(18));
  CHECK(parse_scalar("1 - 2 - 3") == Scalar(-4));
  CHECK(parse_scalar("12/4/3") == Scalar(1));
  CHECK(parse_scalar("(1 + q1)^2 / (1 + q1)") == 1 + q1);
  CHECK(parse_scalar("q1^-1") == q1.inverse());
  CHECK(parse_scalar("l21") == Scalar::var(Var::lambda(1, 2)).inverse());
  CHECK(parse_scalar("l1_12") == Scalar::var(Var::lambda(1, 12)));
  CHECK(parse_scalar("--2") == Scalar(2));
  CHECK(parse_element("x1*y1^2", p) == NormalElement::generator(p, Letter::X, 1) * NormalElement::generator(p, Letter::Y, 1, 2));
  CHECK(parse_element("-x1^2", p) == -NormalElement::generator(p, Letter::X, 1, 2));
  CHECK(parse_element("(x1 + y1)^2", p) == parse_element("x1*x1 + x1*y1 + y1*x1 + y1*y1", p));
  CHECK(parse_element("x1 / (q1 - 1)", p) == NormalElement::generator(p, Letter::X, 1).scaled((q1 - 1).inverse()));
}

TEST_CASE("errors") {
  auto a = pres(Family::AJ, false, 2);
  auto b = pres(Family::AJ, true, 2);
  CHECK(code_of("x1^-1", a) == ErrorCode::NegativeExponent);
  CHECK(code_of("y2^-2", b) == ErrorCode::NegativeExponent);
  CHECK(code_of("z1^-1", a) == ErrorCode::NegativeExponent);
  CHECK(parse_element("z1^-1", b) == NormalElement::generator(b, Letter::Z, 1, -1));
  CHECK(code_of("x3", a) == ErrorCode::UnknownGenerator);
  CHECK(code_of("x1 y1", a) == ErrorCode::SyntaxError);
  CHECK(code_of("x1^y1", a) == ErrorCode::SyntaxError);
  CHECK(code_of("x1 / y1", a) == ErrorCode::SyntaxError);
  CHECK(code_of("x1 / 0", a) == ErrorCode::DivisionByZero);
  CHECK(code_of("(x1 + 1", a) == ErrorCode::SyntaxError);
  CHECK(code_of("", a) == ErrorCode::SyntaxError);
  CHECK(code_of("x", a) == ErrorCode::SyntaxError);
  CHECK(code_of("l11", a) == ErrorCode::SyntaxError);
  CHECK(code_of("(x1+y1)^-1", a) == ErrorCode::NegativeExponent);
  try {
    parse_element("x1 + * y1", a);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 5);
  }
  try {
    parse_element("x1 + y1 )", a);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 8);
  }
  CHECK_THROWS_AS(parse_scalar("x1"), SyntaxError);
}

TEST_CASE("round trip on random elements") {
  std::mt19937_64 rng(testing::seed_from_env(77));
  int count = 0;
  for (Family f : {Family::AJ, Family::Malt}) {
    for (bool loc : {false, true}) {
      for (int n = 1; n <= 3; ++n) {
        auto p = pres(f, loc, n);
        for (int t = 0; t < 20; ++t) {
          NormalElement e(p);
          int terms = 1 + t % 4;
          for (int s = 0; s < terms; ++s) e.add_term(testing::random_monomial(rng, p, 4), testing::random_scalar(rng, n));
          std::string text = e.to_string();
          NormalElement back = parse_element(text, p);
          INFO(text);
          CHECK(back == e);
          CHECK(back.to_string() == text);
          ++count;
        }
      }
    }
  }
  CHECK(count >= 200);
}

TEST_CASE("scalars and q-polynomials round trip") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Scalar s = testing::random_scalar(rng, 3);
    INFO(s.to_string());
    CHECK(parse_scalar(s.to_string()) == s);
    CHECK(parse_scalar(s.to_string()).to_string() == s.to_string());
  }
  auto ctx = ParamContext::symbolic(2);
  QPolynomial f = QPolynomial::monomial(ctx, {2, 1}, Scalar(3)) + QPolynomial::monomial(ctx, {1, 0}, Scalar::generic(1));
  PresentationId host{Family::AJ, false, ctx};
  CHECK(QPolynomial::from_element(parse_element(f.to_string(), host)) == f);
}
