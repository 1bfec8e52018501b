#include "sullivan/differential.hpp"
#include "sullivan/dsl.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace sullivan;
using testsupport::ex;

TEST_CASE("apply_d examples") {
  DGAlgebra A = parse_algebra("gen v2:2\ngen a1:1\nd a1 = v2\n");
  CHECK(apply_d(A, ex(A, "a1*v2")) == ex(A, "v2^2"));
  CHECK(apply_d(A, Element::unit(A.signature_ptr())).is_zero());

  DGAlgebra B = parse_algebra("gen v2:2\ngen w2:2\ngen v4:4\ngen w4:4\n");
  CHECK(apply_d(B, ex(B, "v4*w2 + v2*w4")).is_zero());
}

TEST_CASE("apply_d signs on odd prefixes") {
  DGAlgebra A = parse_algebra("gen b1:1\ngen v2:2\ngen a1:1\nd a1 = v2\n");
  // d(b1 a1) = -b1 v2
  CHECK(apply_d(A, ex(A, "b1*a1")) == ex(A, "-b1*v2"));
}

TEST_CASE("validate_sullivan examples") {
  CHECK(validate_sullivan(testsupport::sample("ex3")).ok());

  DGAlgebra fwd = parse_algebra("gen m0:1\ngen m1:2\nd m0 = m1\n");
  auto r1 = validate_sullivan(fwd);
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violations[0].kind == Violation::Kind::OrderViolation);
  CHECK(r1.violations[0].generator == 0);
  REQUIRE(r1.violations[0].monomial);
  CHECK(*r1.violations[0].monomial == Monomial::generator(1));

  DGAlgebra deg = parse_algebra("gen v2:2\ngen x:2\nd x = v2\n");
  auto r2 = validate_sullivan(deg);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations[0].kind == Violation::Kind::DegreeMismatch);
  CHECK(r2.violations[0].generator == 1);
}

TEST_CASE("validate_sullivan reports inhomogeneous, d^2 and degree 0") {
  auto inh = validate_sullivan(parse_algebra("gen a:1\ngen b:2\ngen c:1\nd c = b + a\n"));
  REQUIRE_FALSE(inh.ok());
  CHECK(inh.violations[0].kind == Violation::Kind::Inhomogeneous);

  auto sq = validate_sullivan(parse_algebra("gen a:1\ngen b:1\ngen c:1\nd b = a*a\nd c = a*b\n"));
  CHECK(sq.ok());
  auto sq2 = validate_sullivan(parse_algebra("gen v:2\ngen a:1\ngen b:2\nd a = v\nd b = a*v\n"));
  REQUIRE_FALSE(sq2.ok());
  CHECK(sq2.violations.back().kind == Violation::Kind::NotSquareZero);

  auto sig = std::make_shared<Signature>();
  sig->add("z", 0);
  auto zr = validate_sullivan(DGAlgebra(sig));
  REQUIRE_FALSE(zr.ok());
  CHECK(zr.violations[0].kind == Violation::Kind::NonPositiveDegree);
}

TEST_CASE("property: Leibniz rule, degree shift and d^2 = 0") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    DGAlgebra A = testsupport::random_sullivan(rng);
    REQUIRE(validate_sullivan(A).ok());
    const SignaturePtr& s = A.signature_ptr();
    for (int k = 0; k < 6; ++k) {
      int p = std::uniform_int_distribution<int>(0, 4)(rng);
      int q = std::uniform_int_distribution<int>(0, 4)(rng);
      Element a = testsupport::random_element(rng, s, p);
      Element b = testsupport::random_element(rng, s, q);
      Element rhs = apply_d(A, a) * b + (a * apply_d(A, b)) * Rational((p & 1) ? -1 : 1);
      CHECK(apply_d(A, a * b) == rhs);
      Element da = apply_d(A, a);
      if (!da.is_zero()) CHECK(*da.degree() == p + 1);
    }
    for (int p = 0; p <= 8; ++p)
      for (const auto& m : basis_monomials(*s, p, s->all()))
        CHECK(apply_d(A, apply_d(A, Element(s, m))).is_zero());
  }
}
