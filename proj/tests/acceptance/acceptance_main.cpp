// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <pthread.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "seqgame/arena.hpp"
#include "seqgame/oracle.hpp"
#include "seqgame/seq_eval.hpp"
#include "seqgame/solver.hpp"
#include "seqgame/uptimal.hpp"

using namespace seqgame;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Runs the suites and requires each to pass within the time limit.
Verdict suites(const std::vector<std::string>& ids, double limit_seconds) {
  Verdict v;
  const auto start = Clock::now();
  std::ostringstream detail;
  for (const auto& id : ids) {
    const PropertyReport r = verify(id);
    v.pass = v.pass && r.passed();
    detail << id << " " << r.instances - r.failures.size() << "/" << r.instances << "; ";
    if (!r.passed()) std::cerr << r.to_lines();
  }
  const double t = seconds_since(start);
  if (t >= limit_seconds) v.pass = false;
  detail << "time " << t << " s (limit " << limit_seconds << " s)";
  v.detail = detail.str();
  return v;
}

Verdict example_values() {
  Verdict v;
  const auto start = Clock::now();
  std::ostringstream detail;
  for (const auto& [seq, expected] : example6_cases()) {
    const UptimalValue got = eval_seq(seq);
    const bool ok = got == parse_uptimal(expected);
    v.pass = v.pass && ok;
    detail << format_uptimal(got) << (ok ? "" : " (expected " + expected + ")") << "; ";
  }
  const double t = seconds_since(start);
  if (t >= 1.0) v.pass = false;
  detail << "time " << t << " s";
  v.detail = detail.str();
  return v;
}

Verdict example_aggregate() {
  Verdict v;
  UptimalValue total;
  for (const auto& [seq, expected] : example6_cases()) total = total + eval_seq(seq);
  const bool digits = total.b == std::vector<std::int64_t>{1, 0, 1, 2, 1} && total.star == 0 &&
                      total.x.is_zero();
  Arena arena;
  Solver solver(arena);
  const auto start = Clock::now();
  SumPosition compounds;
  for (const auto& [seq, expected] : example6_cases()) {
    compounds.push_back(materialize_seq(arena, seq));
  }
  const Outcome direct = solver.sum_outcome(compounds);
  const Outcome by_value = solver.sum_outcome(uptimal_to_position(arena, total));
  const double t = seconds_since(start);
  v.pass = digits && t < 120.0;
  std::ostringstream detail;
  detail << "sum " << format_uptimal(total) << (digits ? "" : " (digits wrong)")
         << "; solver outcome " << outcome_letter(direct) << " on the six compounds, "
         << outcome_letter(by_value) << " on the value, " << t << " s"
         << "; stated outcome N "
         << (direct == Outcome::N ? "agrees" : "CONFLICTS with the solver");
  v.detail = detail.str();
  return v;
}

Verdict chained_blocks() {
  Verdict v = suites({"int_star_blocks", "int_star_chained"}, 600.0);
  Arena arena;
  Solver solver(arena);
  const Block one{{1}};
  const UptimalValue inner = block_value(one, JContext::zero());
  const UptimalValue outer = block_value(one, JContext::negative(inner), &solver);
  const GameId g = arena.seq(materialize_block(arena, one), materialize_block(arena, one));
  const bool ok =
      solver.compare(SumPosition{g}, uptimal_to_position(arena, outer)) == Comparison::eq;
  v.pass = v.pass && ok;
  v.detail += "; [1] -> [1] -> 0 = " + format_uptimal(outer) + (ok ? " (solver agrees)" : " (solver disagrees)");
  return v;
}

struct Criterion {
  int number;
  std::string title;
  std::function<Verdict()> check;
};

void* run_all(void* result) {
  const std::vector<Criterion> criteria = {
      {1, "six worked compounds evaluate exactly", example_values},
      {2, "aggregate of the six values", example_aggregate},
      {3, "integer chains, exhaustive", [] { return suites({"int_chain"}, 60.0); }},
      {4, "integer/star blocks and a chained block", chained_blocks},
      {5, "outcome of G -> H from its parts",
       [] { return suites({"seq_outcome_formula"}, 600.0); }},
      {6, "misere outcome equals outcome of G -> *",
       [] { return suites({"misere_eq_seq_star"}, 600.0); }},
      {7, "algebra of negation, compounds and sums",
       [] {
         return suites({"negate_involution", "seq_associative", "seq_identity",
                        "seq_negation_distributes", "sum_inverse"},
                       600.0);
       }},
      {8, "dicotic closure, order, translation and star laws",
       [] {
         return suites({"dicot_closure", "order_preserve", "num_trans", "star_cancel",
                        "star_reduce"},
                       600.0);
       }},
      {9, "prepend and block pipelines agree with each other and the solver",
       [] { return suites({"pipeline_equivalence", "solver_equivalence"}, 600.0); }},
      {10, "uptimal option bounds, chain, star and uniqueness",
       [] {
         return suites({"uptimal_option", "uptimal_chain", "uptimal_star", "uptimal_unique"},
                       600.0);
       }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << "criterion " << c.number << ": " << (v.pass ? "PASS" : "FAIL") << " - "
              << c.title << " [" << v.detail << "]" << std::endl;
  }
  *static_cast<int*>(result) = failed;
  return nullptr;
}

}  // namespace

int main() {
  int failed = 0;
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run_all, &failed) != 0) return 1;
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  return failed == 0 ? 0 : 1;
}
