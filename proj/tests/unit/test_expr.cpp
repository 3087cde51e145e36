#include <doctest.h>

#include "seqgame/arena.hpp"
#include "seqgame/errors.hpp"
#include "seqgame/expr.hpp"
#include "seqgame/solver.hpp"

using namespace seqgame;

TEST_CASE("chains") {
  const Expr e = parse_expr("(-3) -> * -> 2");
  CHECK(e.kind == Expr::Kind::seq);
  REQUIRE(e.children.size() == 3);
  CHECK(e.children[0].value == -3);
  CHECK(e.children[1].kind == Expr::Kind::star);
  CHECK(e.children[2].value == 2);
  CHECK(as_compseq(e) == CompSeq{Component::integer(-3), Component::star(), Component::integer(2)});
  CHECK(to_string(e) == "(-3) -> * -> 2");
}

TEST_CASE("sums") {
  const Expr e = parse_expr("* + *");
  CHECK(e.kind == Expr::Kind::sum);
  CHECK(e.children.size() == 2);
  CHECK(sum_terms(e).size() == 2);
  const Expr mixed = parse_expr("1 -> * + -2");
  REQUIRE(mixed.children.size() == 2);
  CHECK(mixed.children[0].kind == Expr::Kind::seq);
  CHECK(mixed.children[1].value == -2);
}

TEST_CASE("parentheses") {
  CHECK(as_compseq(parse_expr("1 -> (* -> 2)")) == as_compseq(parse_expr("1 -> * -> 2")));
  const Expr nested = parse_expr("1 -> (* + *)");
  CHECK_FALSE(as_compseq(nested).has_value());
  CHECK(sum_terms(nested).size() == 1);
  CHECK(to_string(nested) == "1 -> (* + *)");
  CHECK(parse_expr("  (( 7 ))").value == 7);
}

TEST_CASE("malformed input") {
  try {
    parse_expr("1 -> -> 2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK(std::string(e.what()).find("INT") != std::string::npos);
  }
  for (const char* bad : {"", "(", "1 +", "1 2", "- 1", "(1 -> 2", "1 - > 2", "99999999999999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_expr(bad), ParseError);
  }
}

TEST_CASE("building games") {
  Arena a;
  Solver s(a);
  CHECK(build_game(a, parse_expr("1 -> 1 -> 1")) == a.integer(3));
  CHECK(s.equal(build_game(a, parse_expr("* + *")), a.zero()));
  CHECK(s.equal(build_game(a, parse_expr("1 -> *")), a.down(1)));
  CHECK(s.equal(build_game(a, parse_expr("(1 -> *) + (-1 -> *)")), a.zero()));
}
