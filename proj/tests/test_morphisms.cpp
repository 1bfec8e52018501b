#include "sullivan/errors.hpp"
#include "sullivan/homology.hpp"
#include "sullivan/minimal_model.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sullivan;
using testsupport::ex;

namespace {

FullContraction identity_contraction(const DGAlgebra& A) {
  const SignaturePtr& s = A.signature_ptr();
  GeneratorSet all = s->all();
  GeneratorMap phi(s, s, -1);
  for (GenIndex g : all) phi.set(g, Element(s));
  return FullContraction{A,
                         std::vector<GenIndex>(all.begin(), all.end()),
                         A,
                         GeneratorMap::identity(s, all),
                         GeneratorMap::identity(s, all),
                         std::move(phi),
                         {}};
}

}  // namespace

TEST_CASE("generator map tables") {
  DGAlgebra A = testsupport::sample("ex1");
  const SignaturePtr& s = A.signature_ptr();
  GeneratorMap f(s, s, 0);
  CHECK_THROWS_AS(f.at(0), MissingEntry);
  CHECK_THROWS_AS(f.set(2, A.gen("a1")), InvalidInput);
  f.set(2, ex(A, "0"));
  CHECK(f.has(2));
  f.erase(2);
  CHECK_FALSE(f.has(2));
}

TEST_CASE("multiplicative extension on Example 1") {
  FullContraction c = compute_minimal_model(testsupport::sample("ex1"));
  const DGAlgebra& A = c.source;
  CHECK(apply_multiplicative(c.f, ex(A, "v2^2")).is_zero());
  CHECK(apply_multiplicative(c.f, ex(A, "b1*c1*u3")) == ex(A, "b1*c1*u3"));
  CHECK(apply_multiplicative(c.g, ex(A, "u3")) == ex(A, "u3 - a1*v2"));
  GeneratorMap id = GeneratorMap::identity(A.signature_ptr(), A.signature().all());
  Element x = ex(A, "3*a1*v2^2 - 1/2*v2*b1*c1");
  CHECK(apply_multiplicative(id, x) == x);
}

TEST_CASE("homotopy on Example 1") {
  FullContraction c = compute_minimal_model(testsupport::sample("ex1"));
  const DGAlgebra& A = c.source;
  CHECK(apply_homotopy(A, c.phi, c.f, c.g, ex(A, "v2")) == ex(A, "a1"));
  CHECK(apply_homotopy(A, c.phi, c.f, c.g, ex(A, "v2^2")) == ex(A, "a1*v2"));
  CHECK(apply_homotopy(A, c.phi, c.f, c.g, ex(A, "1")).is_zero());
  CHECK(apply_homotopy(A, c.phi, c.f, c.g, ex(A, "b1")).is_zero());
}

TEST_CASE("path elements") {
  DGAlgebra A = testsupport::sample("ex1");
  const SignaturePtr& s = A.signature_ptr();
  PathElement t;
  t.poly = {Element(s), Element::unit(s)};
  PathElement dt;
  dt.dpoly = {Element::unit(s)};
  // t dt integrates to 1/2
  CHECK(path_mul(t, dt).integral(s) == Element::unit(s, Rational(1, 2)));
  CHECK(path_mul(t, t).evaluate(s, 3) == Element::unit(s, 9));
  CHECK(PathElement::constant(A.gen("v2")).integral(s).is_zero());
}

TEST_CASE("check_contraction accepts Example 1 and the identity contraction") {
  FullContraction c = compute_minimal_model(testsupport::sample("ex1"));
  auto rep = check_contraction(c, 8);
  CHECK(rep.all_passed());
  CHECK(rep.results.size() == 11);
  for (const auto& r : rep.results) CHECK(r.checked > 0);

  for (const char* name : {"ex2", "ex3", "ex4"}) {
    FullContraction id = identity_contraction(compute_minimal_model(testsupport::sample(name)).target);
    CHECK(check_contraction(id, 6).all_passed());
  }
}

TEST_CASE("check_contraction reports a corrupted section") {
  FullContraction c = compute_minimal_model(testsupport::sample("ex1"));
  GenIndex u3 = c.source.signature().at("u3").index;
  c.g.set(u3, c.source.gen(u3));
  auto rep = check_contraction(c, 6);
  CHECK_FALSE(rep.all_passed());
  const IdentityResult* h = rep.find(identity::kHomotopy);
  REQUIRE(h);
  CHECK_FALSE(h->passed);
  REQUIRE(h->counterexample);
  CHECK(*h->counterexample == Monomial::generator(u3));
  CHECK(h->residual == ex(c.source, "-a1*v2"));
  CHECK_FALSE(rep.find(identity::kGChain)->passed);
  CHECK(rep.find(identity::kFG)->passed);
}

TEST_CASE("check_contraction reports a corrupted homotopy") {
  FullContraction c = compute_minimal_model(testsupport::sample("ex1"));
  GenIndex v2 = c.source.signature().at("v2").index;
  c.phi.set(v2, ex(c.source, "2*a1"));
  auto rep = check_contraction(c, 4);
  CHECK_FALSE(rep.find(identity::kHomotopy)->passed);
}

TEST_CASE("property: phi lowers degree and ignores factor order") {
  std::mt19937 rng(31);
  int cases = 0;
  for (int trial = 0; trial < 25; ++trial) {
    DGAlgebra A = testsupport::random_sullivan(rng, 6, 3);
    FullContraction c = compute_minimal_model(A);
    const SignaturePtr& s = A.signature_ptr();
    Homotopy H(c.source, c.f, c.g, c.phi);
    for (int p = 1; p <= 6; ++p) {
      for (const Monomial& m : basis_monomials(*s, p, s->all())) {
        Element x(s, m);
        Element px = H.apply(x);
        if (!px.is_zero()) CHECK(*px.degree() == p - 1);
        auto word = m.word();
        std::shuffle(word.begin(), word.end(), rng);
        int sign = canonicalize(*s, word).sign;
        CHECK(H.lift_word(word).integral(s) * Rational(sign) == px);
        ++cases;
      }
    }
  }
  CHECK(cases > 0);
}

TEST_CASE("property: g is injective on each degree of LW") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    FullContraction c = compute_minimal_model(testsupport::random_sullivan(rng, 6, 3));
    const SignaturePtr& s = c.source.signature_ptr();
    GeneratorSet W = c.w_set();
    for (int p = 0; p <= 6; ++p) {
      auto dom = basis_monomials(*s, p, W);
      auto cod = basis_monomials(*s, p, s->all());
      auto M = DegreeMatrix::of_differential(dom, cod, [&](const Monomial& m) {
        return apply_multiplicative(c.g, Element(s, m));
      });
      CHECK(rank(M) == dom.size());
    }
  }
}
