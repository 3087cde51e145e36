#include <doctest.h>

#include "seqgame/arena.hpp"
#include "seqgame/solver.hpp"

using namespace seqgame;

TEST_CASE("outcomes of small games") {
  Arena a;
  Solver s(a);
  CHECK(s.outcome(a.zero()) == Outcome::P);
  CHECK(s.outcome(a.star()) == Outcome::N);
  CHECK(s.outcome(a.up(1)) == Outcome::L);
  CHECK(s.outcome(a.down(1)) == Outcome::R);
  CHECK(s.outcome(a.integer(2)) == Outcome::L);
  CHECK(s.outcome(a.integer(-2)) == Outcome::R);
}

TEST_CASE("sum outcomes") {
  Arena a;
  Solver s(a);
  CHECK(s.sum_outcome({a.star(), a.star()}) == Outcome::P);
  CHECK(s.sum_outcome({}) == Outcome::P);
  CHECK(s.sum_outcome({a.up(1), a.up(1), a.star()}) == Outcome::L);
  CHECK(s.sum_outcome({a.up(1), a.star()}) == Outcome::N);
  CHECK(s.sum_outcome({a.integer(1), a.integer(-1)}) == Outcome::P);
}

TEST_CASE("comparisons") {
  Arena a;
  Solver s(a);
  CHECK(s.compare(a.star(), a.zero()) == Comparison::confused);
  CHECK(s.leq(a.dyadic(Dyadic(BigInt(1), 2)), a.dyadic(Dyadic(BigInt(1), 1))));
  CHECK_FALSE(s.leq(a.dyadic(Dyadic(BigInt(1), 1)), a.dyadic(Dyadic(BigInt(1), 2))));
  CHECK(s.compare(a.up(2), a.up(1)) == Comparison::lt);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(s.compare(SumPosition(n, a.up(2)), SumPosition{a.up(1)}) == Comparison::lt);
  }
  CHECK(s.compare(a.integer(3), a.integer(3)) == Comparison::eq);
  CHECK(s.compare(a.integer(1), a.up(1)) == Comparison::gt);
  CHECK(comparison_symbol(Comparison::confused) == "||");
}

TEST_CASE("flattening does not change answers") {
  Arena a;
  Solver flat(a);
  Solver plain(a, SolverOptions{.flatten_sums = false});
  const GameId g = a.sum(a.sum(a.up(1), a.star()), a.down(2));
  CHECK(flat.outcome(g) == plain.outcome(g));
  const GameId h = a.sum(a.up(1), a.down(1));
  CHECK(flat.compare(h, a.zero()) == Comparison::eq);
  CHECK(plain.compare(h, a.zero()) == Comparison::eq);
}

TEST_CASE("inverse cancellation option") {
  Arena a;
  Solver s(a, SolverOptions{.cancel_inverses = true});
  const GameId g = a.parse("{{|},{{|}|{|}}|{|{|}}}");
  CHECK(s.sum_outcome({g, a.negate(g), a.star()}) == Outcome::N);
}

TEST_CASE("misere outcomes") {
  Arena a;
  Solver s(a);
  CHECK(s.misere_outcome(a.zero()) == Outcome::N);
  CHECK(s.misere_outcome(a.star()) == Outcome::P);
  CHECK(s.misere_outcome(a.integer(1)) == Outcome::R);
  // Checked against normal play of the compound with a star.
  CHECK(s.outcome(a.seq(a.star(), a.star())) == Outcome::P);
  CHECK(s.outcome(a.seq(a.integer(1), a.star())) == Outcome::R);
}

TEST_CASE("outcome of a sequential compound from its parts") {
  for (Outcome g : {Outcome::L, Outcome::R, Outcome::N, Outcome::P}) {
    for (Outcome gs : {Outcome::L, Outcome::R, Outcome::N, Outcome::P}) {
      CHECK(seq_outcome_formula(g, gs, Outcome::L) == Outcome::L);
      CHECK(seq_outcome_formula(g, gs, Outcome::R) == Outcome::R);
      CHECK(seq_outcome_formula(g, gs, Outcome::P) == g);
      CHECK(seq_outcome_formula(g, gs, Outcome::N) == gs);
    }
  }
  CHECK(seq_outcome_formula(Outcome::P, Outcome::N, Outcome::P) == Outcome::P);
  CHECK(seq_outcome_formula(Outcome::P, Outcome::N, Outcome::N) == Outcome::N);
}

TEST_CASE("position budget") {
  Arena a;
  Solver s(a, SolverOptions{.max_positions = 10});
  CHECK_THROWS(s.sum_outcome(SumPosition(6, a.up(3))));
}
