#include <doctest.h>

#include <random>

#include "seqgame/arena.hpp"
#include "seqgame/errors.hpp"
#include "seqgame/solver.hpp"
#include "seqgame/uptimal.hpp"

using namespace seqgame;

namespace {
UptimalValue make(Dyadic x, int star, std::vector<std::int64_t> b) {
  UptimalValue u;
  u.x = x;
  u.star = star;
  u.b = std::move(b);
  u.normalize();
  return u;
}
const Dyadic kQuarter(BigInt(1), 2);
}  // namespace

TEST_CASE("parse") {
  CHECK(parse_uptimal("0.0203") == make(0, 0, {0, 2, 0, 3}));
  CHECK(parse_uptimal("-0.43331 + * + 1/4") == make(kQuarter, 1, {-4, -3, -3, -3, -1}));
  CHECK(parse_uptimal("0").is_zero());
  CHECK(parse_uptimal("*") == UptimalValue::of_star());
  CHECK(parse_uptimal("57/16") == UptimalValue::of_dyadic(Dyadic(BigInt(57), 4)));
  CHECK(parse_uptimal("-5") == UptimalValue::of_dyadic(-5));
  CHECK(parse_uptimal("-0.3321 - 1/16") == make(Dyadic(BigInt(-1), 4), 0, {-3, -3, -2, -1}));
  CHECK(parse_uptimal("* + *").is_zero());
}

TEST_CASE("parse errors carry offsets") {
  for (const char* bad : {"", "0.", "1/3", "+", "* +", "0.12 x", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_uptimal(bad), ParseError);
  }
  try {
    parse_uptimal("* + 1/6");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() >= 4);
  }
}

TEST_CASE("format") {
  CHECK(format_uptimal(UptimalValue{}) == "0");
  CHECK(format_uptimal(make(kQuarter, 1, {4, 3, 3, 3, 1})) == "0.43331 + * + 1/4");
  CHECK(format_uptimal(make(Dyadic(BigInt(-1), 4), 0, {-3, -3, -2, -1})) == "-0.3321 - 1/16");
  CHECK(format_uptimal(UptimalValue::of_dyadic(Dyadic(BigInt(5), 2))) == "5/4");
  CHECK(format_uptimal(UptimalValue::of_star()) == "*");
  CHECK(format_uptimal(make(0, 1, {-1})) == "-0.1 + *");
}

TEST_CASE("format round trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::int64_t> b(rng() % 6);
    for (auto& c : b) c = static_cast<std::int64_t>(rng() % 31) - 15;
    const UptimalValue u =
        make(Dyadic(BigInt(static_cast<std::int64_t>(rng() % 41) - 20), rng() % 4),
             static_cast<int>(rng() % 2), b);
    CAPTURE(format_uptimal(u));
    CHECK(parse_uptimal(format_uptimal(u)) == u);
  }
}

TEST_CASE("addition") {
  const UptimalValue g4_part = parse_uptimal("0.43331 + *");
  const UptimalValue g5_part = parse_uptimal("-0.3321");
  CHECK(g4_part + g5_part == parse_uptimal("0.10121 + *"));
  CHECK((g4_part + -g4_part).is_zero());
  CHECK((UptimalValue::of_star() + UptimalValue::of_star()).is_zero());
}

TEST_CASE("down view") {
  const UptimalValue v = UptimalValue::from_down(1, {1, 0, 2});
  CHECK(v.b == std::vector<std::int64_t>{-1, 0, -2});
  CHECK(v.down() == std::vector<std::int64_t>{1, 0, 2});
  CHECK(v.up_coefficient(3) == -2);
  CHECK(v.up_coefficient(9) == 0);
}

TEST_CASE("degree") {
  CHECK(deg_of(UptimalValue{}) == 0);
  CHECK(deg_of(UptimalValue::of_star()) == 0);
  CHECK(deg_of(UptimalValue::from_down(1, {1, 0, 2})) == 3);
  CHECK(deg_of(UptimalValue::from_down(0, {0, 1})) == 2);
  CHECK_THROWS_AS(deg_of(make(0, 0, {1})), FormError);
  CHECK_THROWS_AS(deg_of(UptimalValue::of_dyadic(1)), FormError);
}

TEST_CASE("materialization") {
  Arena a;
  Solver s(a);
  CHECK(uptimal_to_game(a, UptimalValue{}) == a.zero());
  CHECK(uptimal_to_game(a, make(0, 0, {1})) == a.up(1));
  const SumPosition p = uptimal_to_position(a, make(kQuarter, 1, {4, 3, 3, 3, 1}));
  CHECK(p.size() == 16);
  CHECK(s.compare(uptimal_to_game(a, make(0, 0, {-1, 1})), a.sum(a.down(1), a.up(2))) ==
        Comparison::eq);
}

TEST_CASE("signs") {
  Arena a;
  Solver s(a);
  const UptimalValue tail = make(kQuarter, 1, {-4, 2});
  CHECK(uptimal_sign_fast(tail) == Comparison::gt);
  CHECK(uptimal_sign(s, tail) == Comparison::gt);
  for (std::size_t k = 1; k <= 3; ++k) {
    const UptimalValue ones = make(0, 1, std::vector<std::int64_t>(k, 1));
    CHECK(uptimal_sign(s, ones) == Comparison::confused);
  }
  const UptimalValue aggregate = make(0, 0, {1, 0, 1, 2, 1});
  CHECK(uptimal_sign_fast(aggregate) == Comparison::gt);
  CHECK(uptimal_sign(s, make(0, 0, {1, -3})) == Comparison::gt);
  CHECK(s.sum_outcome(uptimal_to_position(a, make(0, 0, {1, -3}))) == Outcome::L);
  CHECK(uptimal_sign(s, make(0, 1, {2})) == Comparison::gt);
  CHECK(uptimal_sign(s, make(0, 1, {-1})) == Comparison::confused);
}

TEST_CASE("fast sign agrees with the solver") {
  Arena a;
  Solver s(a);
  for (int c = 0; c <= 1; ++c) {
    for (int b1 = -3; b1 <= 3; ++b1) {
      for (int b2 = -2; b2 <= 2; ++b2) {
        for (int b3 = -1; b3 <= 1; ++b3) {
          const UptimalValue u = make(0, c, {b1, b2, b3});
          const auto fast = uptimal_sign_fast(u);
          if (!fast) continue;
          CAPTURE(format_uptimal(u));
          CHECK(*fast == outcome_to_sign(s.sum_outcome(uptimal_to_position(a, u))));
        }
      }
    }
  }
}
