#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "seqgame/cli.hpp"
#include "seqgame/uptimal.hpp"

using namespace seqgame;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "(-1) -> (-3) -> (-1)"});
  CHECK(r.code == kOk);
  CHECK(r.out == "-5\nR\n");
  r = run({"eval", "* -> * -> *"});
  CHECK(r.out == "*\nN\n");
  r = run({"eval", "1 -> (-1) -> * -> 3 -> (-1) -> 1 -> * -> * -> * -> * -> (-2) -> 1"});
  CHECK(r.out == "0.43331 + * + 1/4\nL\n");
}

TEST_CASE("outcome and compare") {
  CHECK(run({"outcome", "* + *"}).out == "P\n");
  CHECK(run({"outcome", "1 -> *"}).out == "R\n");
  CHECK(run({"compare", "*", "0"}).out == "||\n");
  CHECK(run({"compare", "1 -> *", "0"}).out == "<\n");
  CHECK(run({"compare", "(-2) -> 1 -> (-1) -> 4", "3"}).out == ">\n");
  CHECK(run({"compare", "* -> *", "0"}).out == "=\n");
  CHECK(run({"compare", "1 -> (* + *)", "1 -> *"}).out == ">\n");
}

TEST_CASE("sums of compounds") {
  CHECK(run({"eval", "(1 -> *) + (1 -> *) + *"}).out == "-0.2 + *\nR\n");
  CHECK(run({"eval", "(-2) -> 2 + 3/4"}).code == kParseError);
  // A sum nested inside a compound goes through the solver.
  CHECK(run({"eval", "1 -> (* + *)"}).out == "0.1\nL\n");
}

TEST_CASE("the three pipelines agree") {
  for (const char* e : {"1 -> *", "(-1) -> * -> *", "2 -> (-1) -> *", "* -> 1 -> * -> (-1)",
                        "(-1) -> 1 -> *", "1 -> * -> 2"}) {
    CAPTURE(e);
    const Run p = run({"--pipeline", "prepend", "eval", e});
    const Run b = run({"--pipeline", "blocks", "eval", e});
    const Run s = run({"--pipeline", "solver", "eval", e});
    CHECK(p.code == kOk);
    CHECK(p.out == b.out);
    CHECK(p.out == s.out);
  }
}

TEST_CASE("oracle cross-check") {
  const Run r = run({"--oracle", "eval", "(-1) -> * -> 2 -> (-1) -> *"});
  CHECK(r.code == kOk);
  CHECK(r.out == "0.333\nL\n");
}

TEST_CASE("json") {
  const Run r = run({"--json", "eval", "(-2) -> 1 -> (-1) -> 4"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["expr"] == "(-2) -> 1 -> (-1) -> 4");
  CHECK(j["value"] == "57/16");
  CHECK(j["outcome"] == "L");
  CHECK(j["pipeline"] == "prepend");
  CHECK(j["nodes_used"].get<std::size_t>() > 0);
  CHECK(j["elapsed_ms"].is_number());
  CHECK(parse_uptimal(j["value"].get<std::string>()) == parse_uptimal("57/16"));
}

TEST_CASE("exit codes") {
  const Run parse = run({"eval", "1 -> -> 2"});
  CHECK(parse.code == kParseError);
  CHECK(parse.err.find("offset 5") != std::string::npos);
  CHECK(run({"eval", "50 -> 60"}).code == kOk);
  CHECK(run({"--max-nodes", "20", "--pipeline", "solver", "eval", "30 -> *"}).code == kFormError);
  CHECK(run({"--pipeline", "sideways", "eval", "1"}).code == kParseError);
  CHECK(run({"verify", "nothing_here"}).code == kParseError);
  CHECK(run({}).code == kParseError);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "int_chain"});
  CHECK(r.code == kOk);
  CHECK(r.out == "property=int_chain instances=93 failures=0 status=pass\n");
  const Run small = run({"verify", "misere_eq_seq_star", "--max-birthday", "2", "--seed", "3"});
  CHECK(small.code == kOk);
  CHECK(small.out.find("status=pass") != std::string::npos);
}
