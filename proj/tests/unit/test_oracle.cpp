#include <doctest.h>

#include <fstream>
#include <set>

#include "seqgame/arena.hpp"
#include "seqgame/oracle.hpp"

using namespace seqgame;

TEST_CASE("enumeration sizes") {
  Arena a;
  CHECK(enumerate_games(a, 0) == std::vector<GameId>{a.zero()});
  const auto one = enumerate_games(a, 1);
  CHECK(one.size() == 4);
  const std::set<GameId> expected{a.zero(), a.integer(1), a.integer(-1), a.star()};
  CHECK(std::set<GameId>(one.begin(), one.end()) == expected);
  // Every pair of subsets of the four games above is a distinct game.
  CHECK(enumerate_games(a, 2).size() == 256);
  // 257 choices per side, minus the 25 games whose options are born by day 1.
  CHECK(enumerate_games(a, 3).size() == 257 * 257 - 25 + 256);
  CHECK_THROWS_AS(enumerate_games(a, 4), std::invalid_argument);
}

TEST_CASE("enumerated games are distinct and within the bound") {
  Arena a;
  const auto games = enumerate_games(a, 3);
  CHECK(std::set<GameId>(games.begin(), games.end()).size() == games.size());
  for (GameId g : games) CHECK(a.birthday(g) <= 3);
}

TEST_CASE("sampling is deterministic") {
  Arena a;
  Arena b;
  const auto x = sample_games(a, 4, 200, 99);
  const auto y = sample_games(b, 4, 200, 99);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(a.to_string(x[i]) == b.to_string(y[i]));
    CHECK(a.birthday(x[i]) <= 4);
  }
}

TEST_CASE("the property list matches the manifest") {
  std::ifstream in(PROPERTY_MANIFEST);
  REQUIRE(in.good());
  std::vector<std::string> listed;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') listed.push_back(line);
  }
  CHECK(listed == property_ids());
}

TEST_CASE("unknown properties") {
  CHECK_THROWS_AS(verify("no_such_property"), UnknownProperty);
}

TEST_CASE("report lines") {
  PropertyReport r;
  r.name = "demo";
  r.instances = 3;
  r.failures.push_back({"{|}", "P", "N"});
  CHECK_FALSE(r.passed());
  CHECK(r.to_lines() ==
        "property=demo instances=3 failures=1 status=fail\n"
        "counterexample property=demo input=\"{|}\" expected=\"P\" got=\"N\"\n");
  PropertyReport empty;
  CHECK_FALSE(empty.passed());
}

TEST_CASE("every property passes at its default bounds") {
  for (const std::string& id : property_ids()) {
    CAPTURE(id);
    const PropertyReport r = verify(id);
    INFO(r.to_lines());
    CHECK(r.passed());
  }
}

TEST_CASE("reports are reproducible for a seed") {
  const OracleBounds small{2, 100};
  CHECK(verify("sum_preserves_order", small, 5).to_lines() ==
        verify("sum_preserves_order", small, 5).to_lines());
}
