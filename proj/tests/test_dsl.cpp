#include "sullivan/dsl.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/minimal_model.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

#include <doctest.h>

#include <sstream>

using namespace sullivan;
using testsupport::read_text;

TEST_CASE("parse an algebra") {
  DGAlgebra A = parse_algebra("# comment\nmode algebra\n\ngen a1 : 1\ngen v2:2\nd a1 = v2  # trailing\n");
  REQUIRE(A.size() == 2);
  CHECK(A.signature()[0].name == "a1");
  CHECK(A.signature().degree(1) == 2);
  CHECK(A.d(0) == A.gen("v2"));
  CHECK(A.d(1).is_zero());
}

TEST_CASE("parse expressions") {
  DGAlgebra A = testsupport::sample("ex3");
  auto s = A.signature_ptr();
  CHECK(parse_expression("2*(a1 + b1)*c1", s) == parse_expression("2*a1*c1 + 2*b1*c1", s));
  CHECK(parse_expression("-1/2*v2^2 + 3/6*v2*v2", s).is_zero());
  CHECK(parse_expression("b1*a1", s) == -parse_expression("a1*b1", s));
  CHECK(parse_expression("a1*a1", s).is_zero());
  CHECK(parse_expression("0", s).is_zero());
  CHECK(parse_expression("4/2", s) == Element::unit(s, 2));
  CHECK_THROWS_AS(parse_expression("a1 +", s), ParseError);
  CHECK_THROWS_AS(parse_expression("nope", s), ParseError);
}

TEST_CASE("parse dispatches on mode") {
  auto v = parse("mode module\ngen m0 : 1\ngen m1 : 0\nd m1 = 2*m0\n");
  CHECK(std::holds_alternative<DGModule>(v));
  CHECK(std::holds_alternative<DGAlgebra>(parse("gen a : 1\n")));
  CHECK_THROWS_AS(parse_algebra("mode module\ngen m : 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_module("gen a : 1\n"), InvalidInput);
  // Linear in module mode, with a zero constant allowed.
  DGModule M = parse_module("mode module\ngen a : 1\ngen b : 0\nd b = 0\n");
  CHECK(M.d(1).is_zero());
}

TEST_CASE("source positions are recorded") {
  SourceDocument doc = parse_document("gen a : 1\n\n  gen b : 2\nd a = b\n");
  REQUIRE(doc.statements.size() == 3);
  CHECK(doc.statements[1].position == SourcePosition{3, 3});
  CHECK(doc.statements[2].kind == Statement::Kind::Diff);
  CHECK(doc.statements[2].name == "a");
}

TEST_CASE("an order violation parses and is left to validation") {
  DGAlgebra A = parse_algebra(read_text(std::string(TEST_DATA_DIR) + "/order_violation.sul"));
  CHECK_FALSE(validate_sullivan(A).ok());
}

TEST_CASE("malformed inputs report the expected position") {
  std::istringstream manifest(read_text(std::string(TEST_DATA_DIR) + "/malformed/expected.txt"));
  std::string line;
  int count = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string file, fragment;
    int l = 0, c = 0;
    ls >> file >> l >> c;
    std::getline(ls >> std::ws, fragment);
    CAPTURE(file);
    std::string text = read_text(std::string(TEST_DATA_DIR) + "/malformed/" + file);
    REQUIRE_FALSE(text.empty());
    try {
      parse(text);
      FAIL("parsed without error");
    } catch (const ParseError& e) {
      CHECK(e.position() == SourcePosition{l, c});
      CHECK(e.message().find(fragment) != std::string::npos);
      CHECK(std::string(e.what()) == std::to_string(l) + ":" + std::to_string(c) + ": " + e.message());
    }
    ++count;
  }
  CHECK(count >= 10);
}

TEST_CASE("format_element examples") {
  DGAlgebra A = testsupport::sample("ex1");
  auto s = A.signature_ptr();
  CHECK(format_element(Element(s)) == "0");
  CHECK(format_element(Element()) == "0");
  CHECK(format_element(Element::unit(s, -1)) == "-1");
  CHECK(format_element(parse_expression("u3 - a1*v2", s)) == "-v2*a1 + u3");
  CHECK(format_element(parse_expression("-2/3*b1*c1", s)) == "-2/3*b1*c1");
}

TEST_CASE("property: format then parse is the identity") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    DGAlgebra A = testsupport::random_sullivan(rng);
    auto s = A.signature_ptr();
    Element x = testsupport::random_element(rng, s, std::uniform_int_distribution<int>(0, 6)(rng), 6);
    CHECK(parse_expression(format_element(x), s) == x);
  }
}

TEST_CASE("machine format round trip on the examples") {
  for (const char* name : {"ex1", "ex2", "ex3", "ex4"}) {
    CAPTURE(name);
    FullContraction c = compute_minimal_model(testsupport::sample(name));
    std::string text = emit_machine(c);
    MachineDocument doc = parse_machine(text, c.source.signature_ptr());
    CHECK(emit_machine(doc) == text);
    CHECK(doc.W.size() == c.W.size());
  }
  FullContraction empty = compute_minimal_model(DGAlgebra());
  CHECK(emit_machine(empty) == "W = {}\n");
}

TEST_CASE("machine format contents for Example 1") {
  std::string text = emit_machine(compute_minimal_model(testsupport::sample("ex1")));
  CHECK(text.rfind("W = {b1, c1, u3}\n", 0) == 0);
  CHECK(text.find("phi v2 = a1\n") != std::string::npos);
  CHECK(text.find("g u3 = -v2*a1 + u3\n") != std::string::npos);
  CHECK(text.find("pair a1 v2\n") != std::string::npos);
}

TEST_CASE("report for Example 4") {
  std::string text = emit_report(compute_minimal_model(testsupport::sample("ex4")));
  CHECK(text.find("W = {v2, v4, x5, x7}") != std::string::npos);
  CHECK(text.find("(x1, w2)") != std::string::npos);
  CHECK(text.find("x3, d x3 = v2*w2 + v4 + w4") != std::string::npos);
}

TEST_CASE("malformed machine documents") {
  auto s = testsupport::sample("ex1").signature_ptr();
  CHECK_THROWS_AS(parse_machine("f v2 = 0\n", s), ParseError);
  CHECK_THROWS_AS(parse_machine("W = {b1}\nW = {c1}\n", s), ParseError);
  CHECK_THROWS_AS(parse_machine("W = {b1}\nzeta b1 = 0\n", s), ParseError);
}

TEST_CASE("property: machine round trip on random algebras") {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    FullContraction c = compute_minimal_model(testsupport::random_sullivan(rng));
    std::string text = emit_machine(c);
    CHECK(emit_machine(parse_machine(text, c.source.signature_ptr())) == text);
  }
}
