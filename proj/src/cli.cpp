#include "seqgame/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <optional>

#include "seqgame/errors.hpp"
#include "seqgame/expr.hpp"
#include "seqgame/oracle.hpp"
#include "seqgame/seq_eval.hpp"
#include "seqgame/solver.hpp"
#include "seqgame/uptimal.hpp"
#include "seqgame/value_search.hpp"

namespace seqgame {

namespace {

struct Settings {
  bool oracle = false;
  bool json = false;
  std::string pipeline = "prepend";
  std::size_t max_nodes = ArenaLimits{}.max_nodes;
};

Outcome outcome_of_sign(Comparison c) {
  switch (c) {
    case Comparison::gt:
      return Outcome::L;
    case Comparison::lt:
      return Outcome::R;
    case Comparison::eq:
      return Outcome::P;
    case Comparison::confused:
      break;
  }
  return Outcome::N;
}

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One parsed expression evaluated in a shared arena.
struct Evaluation {
  std::optional<UptimalValue> value;
  SumPosition position;
};

class Evaluator {
 public:
  explicit Evaluator(const Settings& s)
      : settings_(s), arena_(ArenaLimits{s.max_nodes, ArenaLimits{}.max_integer}), solver_(arena_) {}

  Evaluation evaluate(const Expr& e, bool want_value) {
    Evaluation ev;
    std::vector<CompSeq> seqs;
    for (const Expr* term : sum_terms(e)) {
      if (auto seq = as_compseq(*term)) {
        seqs.push_back(std::move(*seq));
      } else {
        seqs.clear();
        break;
      }
    }
    const bool closed_form = !seqs.empty() && settings_.pipeline != "solver";
    if (closed_form) {
      const Pipeline p = settings_.pipeline == "blocks" ? Pipeline::blocks : Pipeline::prepend;
      UptimalValue total;
      for (const CompSeq& seq : seqs) total = total + eval_seq(seq, p);
      ev.value = total;
      if (settings_.oracle) {
        const SumPosition direct = position_of(e, seqs);
        const Comparison c = solver_.compare(direct, uptimal_to_position(arena_, total));
        if (c != Comparison::eq) {
          throw Mismatch("solver finds " + std::string(comparison_symbol(c)) +
                         " against the closed-form value " + format_uptimal(total));
        }
      }
      ev.position = uptimal_to_position(arena_, total);
      return ev;
    }
    ev.position = position_of(e, seqs);
    if (want_value) {
      std::size_t size = 0;
      for (GameId g : ev.position) size += arena_.birthday(g);
      ev.value = identify_value(solver_, ev.position, bounds_for_units(size));
    }
    return ev;
  }

  Outcome outcome(const Evaluation& ev) {
    if (ev.value) return outcome_of_sign(uptimal_sign(solver_, *ev.value));
    return solver_.sum_outcome(ev.position);
  }

  Comparison compare(const Evaluation& a, const Evaluation& b) {
    if (a.value && b.value) return uptimal_sign(solver_, *a.value - *b.value);
    return solver_.compare(a.position, b.position);
  }

  std::size_t nodes() const { return arena_.size(); }

 private:
  SumPosition position_of(const Expr& e, const std::vector<CompSeq>& seqs) {
    SumPosition out;
    if (!seqs.empty()) {
      for (const CompSeq& seq : seqs) out.push_back(materialize_seq(arena_, seq));
    } else {
      for (const Expr* term : sum_terms(e)) out.push_back(build_game(arena_, *term));
    }
    return out;
  }

  const Settings& settings_;
  Arena arena_;
  Solver solver_;
};

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int run_eval(const Settings& s, const std::string& text, bool with_value, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Expr e = parse_expr(text);
  Evaluator ev(s);
  const Evaluation result = ev.evaluate(e, with_value);
  const Outcome o = ev.outcome(result);
  if (s.json) {
    nlohmann::json j{{"expr", text},
                     {"outcome", std::string(1, outcome_letter(o))},
                     {"pipeline", s.pipeline},
                     {"nodes_used", ev.nodes()},
                     {"elapsed_ms", millis_since(start)}};
    j["value"] = result.value ? nlohmann::json(format_uptimal(*result.value)) : nlohmann::json();
    out << j.dump() << '\n';
    return kOk;
  }
  if (with_value) out << format_uptimal(*result.value) << '\n';
  out << outcome_letter(o) << '\n';
  return kOk;
}

int run_compare(const Settings& s, const std::string& lhs, const std::string& rhs,
                std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Expr a = parse_expr(lhs);
  const Expr b = parse_expr(rhs);
  Evaluator ev(s);
  const Evaluation x = ev.evaluate(a, false);
  const Evaluation y = ev.evaluate(b, false);
  const Comparison c = ev.compare(x, y);
  if (s.json) {
    nlohmann::json j{{"expr", nlohmann::json::array({lhs, rhs})},
                     {"result", std::string(comparison_symbol(c))},
                     {"pipeline", s.pipeline},
                     {"nodes_used", ev.nodes()},
                     {"elapsed_ms", millis_since(start)}};
    out << j.dump() << '\n';
    return kOk;
  }
  out << comparison_symbol(c) << '\n';
  return kOk;
}

int run_verify(const std::string& id, std::uint64_t seed, const OracleBounds& bounds,
               bool json, std::ostream& out) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = property_ids();
  } else {
    ids.push_back(id);
  }
  bool all_passed = true;
  for (const std::string& p : ids) {
    const PropertyReport report = verify(p, bounds, seed);
    all_passed = all_passed && report.passed();
    if (json) {
      nlohmann::json failures = nlohmann::json::array();
      for (const Failure& f : report.failures) {
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
      }
      out << nlohmann::json{{"property", report.name},
                            {"instances", report.instances},
                            {"passed", report.passed()},
                            {"failures", failures},
                            {"notes", report.notes}}
                 .dump()
          << '\n';
    } else {
      out << report.to_lines();
    }
    out.flush();
  }
  return all_passed ? kOk : kMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential compounds of combinatorial games", "seqgame"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_flag("--oracle", s.oracle, "Cross-check closed-form results with the solver");
  app.add_flag("--json", s.json, "Print one JSON record");
  app.add_option("--pipeline", s.pipeline, "prepend, blocks or solver")
      ->check(CLI::IsMember({"prepend", "blocks", "solver"}));
  app.add_option("--max-nodes", s.max_nodes, "Arena node budget")->check(CLI::PositiveNumber);

  std::string first;
  std::string second;
  auto* eval = app.add_subcommand("eval", "Print the value and the outcome class");
  eval->add_option("expr", first)->required();
  auto* outcome = app.add_subcommand("outcome", "Print the outcome class");
  outcome->add_option("expr", first)->required();
  auto* compare = app.add_subcommand("compare", "Compare two expressions");
  compare->add_option("lhs", first)->required();
  compare->add_option("rhs", second)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  std::uint64_t seed = 1;
  OracleBounds bounds;
  verify_cmd->add_option("property", first, "Property id or 'all'")->required();
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--max-birthday", bounds.max_birthday)->check(CLI::Range(1, 3));
  verify_cmd->add_option("--samples", bounds.samples)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*eval) return run_eval(s, first, true, out);
    if (*outcome) return run_eval(s, first, false, out);
    if (*compare) return run_compare(s, first, second, out);
    return run_verify(first, seed, bounds, s.json, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const UnknownProperty& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kFormError;
  } catch (const FormError& e) {
    err << "form error: " << e.what() << '\n';
    return kFormError;
  } catch (const Mismatch& e) {
    err << "mismatch: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace seqgame
