#include "doctest.h"
#include "qweyl/suites.hpp"

using namespace qweyl;

namespace {

void require_all(const Report& r) {
  CHECK(!r.entries.empty());
  for (const auto& e : r.entries) {
    INFO(r.title << ": " << e.identity << " " << e.witness);
    CHECK(e.ok);
  }
}

}  // namespace

TEST_CASE("theta suite") {
  for (int n = 1; n <= 2; ++n) require_all(theta_suite(ParamContext::symbolic(n)));
}

TEST_CASE("twist suite") {
  for (int n = 1; n <= 2; ++n) {
    for (bool loc : {false, true}) require_all(twist_suite(ParamContext::symbolic(n), loc, 10, 3));
  }
}

TEST_CASE("untwisted model fails the lambda relations") {
  // The plain product of the (1)-algebra does not satisfy the Lambda relations.
  auto ctx = ParamContext::symbolic(2);
  PresentationId target{Family::AJ, true, ctx};
  PresentationId base{Family::AJ, true, ctx.with_ones()};
  auto r = check_relations_in(target, native_model(base));
  bool failed = false;
  for (const auto& e : r) failed = failed || !e.ok;
  CHECK(failed);
}

TEST_CASE("rank") {
  PresentationId p{Family::AJ, true, ParamContext::ones(1)};
  auto x = NormalElement::generator(p, Letter::X, 1);
  auto y = NormalElement::generator(p, Letter::Y, 1);
  CHECK(rank_of({x, y, x + y}) == 2);
  CHECK(rank_of({x, y.scaled(Scalar::q(1)), x * y}) == 3);
  CHECK(rank_of({}) == 0);
}
