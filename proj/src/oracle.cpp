#include "seqgame/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "seqgame/seq_eval.hpp"
#include "seqgame/solver.hpp"
#include "seqgame/uptimal.hpp"

namespace seqgame {

std::string PropertyReport::to_lines() const {
  std::ostringstream out;
  out << "property=" << name << " instances=" << instances << " failures=" << failures.size()
      << " status=" << (passed() ? "pass" : "fail") << '\n';
  for (const auto& note : notes) out << "note property=" << name << ' ' << note << '\n';
  for (const auto& f : failures) {
    out << "counterexample property=" << name << " input=\"" << f.input << "\" expected=\""
        << f.expected << "\" got=\"" << f.got << "\"\n";
  }
  return out.str();
}

namespace {

// All games whose option sets are subsets of `base`.
std::vector<GameId> all_subset_games(Arena& arena, const std::vector<GameId>& base) {
  const std::size_t n = base.size();
  std::vector<std::vector<GameId>> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<GameId> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(base[i]);
    }
    subsets.push_back(std::move(s));
  }
  std::vector<GameId> out;
  std::unordered_set<GameId> seen;
  for (const auto& l : subsets) {
    for (const auto& r : subsets) {
      const GameId g = arena.make(l, r);
      if (seen.insert(g).second) out.push_back(g);
    }
  }
  return out;
}

GameId random_game(Arena& arena, int birthday, std::mt19937_64& rng) {
  if (birthday <= 0) return arena.zero();
  std::vector<GameId> sides[2];
  for (auto& side : sides) {
    const auto count = rng() % 3;
    for (std::uint64_t i = 0; i < count; ++i) side.push_back(random_game(arena, birthday - 1, rng));
  }
  return arena.make(sides[0], sides[1]);
}

}  // namespace

std::vector<GameId> enumerate_games(Arena& arena, int max_birthday) {
  if (max_birthday < 0 || max_birthday > 3) {
    throw std::invalid_argument("enumerate_games supports birthdays 0 to 3");
  }
  std::vector<GameId> games{arena.zero()};
  for (int b = 1; b <= std::min(max_birthday, 2); ++b) games = all_subset_games(arena, games);
  if (max_birthday < 3) return games;
  std::unordered_set<GameId> seen(games.begin(), games.end());
  const std::vector<GameId> level2 = games;
  std::vector<std::vector<GameId>> choices{{}};
  for (GameId g : level2) choices.push_back({g});
  for (const auto& l : choices) {
    for (const auto& r : choices) {
      const GameId g = arena.make(l, r);
      if (seen.insert(g).second) games.push_back(g);
    }
  }
  return games;
}

std::vector<GameId> sample_games(Arena& arena, int max_birthday, std::size_t count,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GameId> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_game(arena, max_birthday, rng));
  return out;
}

namespace {

struct Context {
  Arena arena;
  Solver solver;
  OracleBounds bounds;
  std::uint64_t seed;
  std::mt19937_64 rng;
  PropertyReport report;

  Context(const OracleBounds& b, std::uint64_t s)
      : arena(ArenaLimits{40'000'000, 100'000}), solver(arena), bounds(b), seed(s), rng(s) {}

  std::string show(GameId g) const { return arena.to_string(g); }

  void check(bool ok, const std::string& input, const std::string& expected,
             const std::string& got) {
    ++report.instances;
    if (!ok) report.failures.push_back({input, expected, got});
  }

  std::vector<GameId> samples(int birthday, std::size_t count) {
    return sample_games(arena, birthday, count, rng());
  }

  // Samples satisfying `keep`, drawn in order from a deterministic stream.
  std::vector<GameId> samples_where(int birthday, std::size_t count,
                                    const std::function<bool(GameId)>& keep) {
    std::vector<GameId> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts < count * 200) {
      ++attempts;
      const GameId g = random_game(arena, birthday, rng);
      if (keep(g)) out.push_back(g);
    }
    return out;
  }

  std::string letter(Outcome o) const { return std::string(1, outcome_letter(o)); }
  std::string symbol(Comparison c) const { return std::string(comparison_symbol(c)); }
};

std::string join_ids(const Context& ctx, std::initializer_list<GameId> ids) {
  std::string out;
  for (GameId g : ids) {
    if (!out.empty()) out += " ; ";
    out += ctx.show(g);
  }
  return out;
}

int sampled_birthday(const Context& ctx, int offset) {
  return std::max(1, ctx.bounds.max_birthday + offset);
}

// ---------------------------------------------------------------- core_games

void interning_roundtrip(Context& ctx) {
  for (GameId g : ctx.samples(sampled_birthday(ctx, 1), ctx.bounds.samples)) {
    const std::string text = ctx.show(g);
    const GameId parsed = ctx.arena.parse(text);
    const std::vector<GameId> l(ctx.arena.left(g).begin(), ctx.arena.left(g).end());
    const std::vector<GameId> r(ctx.arena.right(g).begin(), ctx.arena.right(g).end());
    const GameId rebuilt = ctx.arena.make(l, r);
    ctx.check(parsed == g && rebuilt == g, text, "same id", parsed == g ? "rebuilt differs" : "parse differs");
  }
}

void negate_involution(Context& ctx) {
  for (GameId g : ctx.samples(sampled_birthday(ctx, 1), ctx.bounds.samples)) {
    const GameId back = ctx.arena.negate(ctx.arena.negate(g));
    ctx.check(back == g, ctx.show(g), ctx.show(g), ctx.show(back));
  }
}

void seq_associative(Context& ctx) {
  const int b = sampled_birthday(ctx, 0);
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const auto t = ctx.samples(b, 3);
    auto& a = ctx.arena;
    const GameId left = a.seq(a.seq(t[0], t[1]), t[2]);
    const GameId right = a.seq(t[0], a.seq(t[1], t[2]));
    ctx.check(left == right, join_ids(ctx, {t[0], t[1], t[2]}), "(G->H)->J == G->(H->J)",
              left == right ? "equal" : "different ids");
  }
}

void seq_identity(Context& ctx) {
  auto& a = ctx.arena;
  for (GameId g : ctx.samples(sampled_birthday(ctx, 1), ctx.bounds.samples)) {
    const bool ok = a.seq(g, a.zero()) == g && a.seq(a.zero(), g) == g;
    ctx.check(ok, ctx.show(g), "G->0 == 0->G == G", ok ? "equal" : "different ids");
  }
}

void seq_negation_distributes(Context& ctx) {
  auto& a = ctx.arena;
  const int b = sampled_birthday(ctx, 0);
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const auto p = ctx.samples(b, 2);
    const GameId lhs = a.negate(a.seq(p[0], p[1]));
    const GameId rhs = a.seq(a.negate(p[0]), a.negate(p[1]));
    ctx.check(lhs == rhs, join_ids(ctx, {p[0], p[1]}), ctx.show(lhs), ctx.show(rhs));
  }
}

void sum_negation(Context& ctx) {
  // Materialized sums, searched without expanding them, so the equality is
  // decided on the game trees themselves.
  Solver plain(ctx.arena, SolverOptions{.flatten_sums = false});
  auto& a = ctx.arena;
  const int b = sampled_birthday(ctx, -1);
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const auto p = ctx.samples(b, 2);
    const GameId lhs = a.negate(a.sum(p[0], p[1]));
    const GameId rhs = a.sum(a.negate(p[0]), a.negate(p[1]));
    const Comparison c = plain.compare(lhs, rhs);
    ctx.check(c == Comparison::eq, join_ids(ctx, {p[0], p[1]}), "=", ctx.symbol(c));
  }
}

void dicot_closure(Context& ctx) {
  auto& a = ctx.arena;
  const int b = sampled_birthday(ctx, 0);
  const auto hs = ctx.samples_where(b, ctx.bounds.samples,
                                    [&](GameId h) { return h != a.zero() && a.is_dicotic(h); });
  const auto gs = ctx.samples(b, hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const GameId s = a.seq(gs[i], hs[i]);
    const bool ok = a.is_dicotic(s) && s != a.zero();
    ctx.check(ok, join_ids(ctx, {gs[i], hs[i]}), "dicotic and nonzero", ok ? "yes" : "no");
  }
}

// -------------------------------------------------------------------- solver

void table1_correspondence(Context& ctx) {
  for (GameId g : ctx.samples(sampled_birthday(ctx, 0), ctx.bounds.samples)) {
    const Outcome o = ctx.solver.outcome(g);
    const Comparison c = ctx.solver.compare(g, ctx.arena.zero());
    ctx.check(outcome_to_sign(o) == c, ctx.show(g), ctx.symbol(outcome_to_sign(o)),
              ctx.symbol(c));
  }
}

void leq_preorder(Context& ctx) {
  auto& s = ctx.solver;
  const int b = sampled_birthday(ctx, -1);
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const auto t = ctx.samples(b, 3);
    const bool reflexive = s.leq(t[0], t[0]);
    const bool transitive = !(s.leq(t[0], t[1]) && s.leq(t[1], t[2])) || s.leq(t[0], t[2]);
    ctx.check(reflexive && transitive, join_ids(ctx, {t[0], t[1], t[2]}),
              "reflexive and transitive", reflexive ? "not transitive" : "not reflexive");
  }
}

void sum_preserves_order(Context& ctx) {
  auto& s = ctx.solver;
  auto& a = ctx.arena;
  const int b = sampled_birthday(ctx, -1);
  std::size_t premise = 0;
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const auto t = ctx.samples(b, 3);
    if (!s.leq(t[0], t[1])) {
      ctx.check(true, "", "", "");
      continue;
    }
    ++premise;
    const bool ok = s.leq(a.sum(t[0], t[2]), a.sum(t[1], t[2]));
    ctx.check(ok, join_ids(ctx, {t[0], t[1], t[2]}), "G+J <= H+J", "not <=");
  }
  ctx.report.notes.push_back("premise_held=" + std::to_string(premise));
}

void sum_inverse(Context& ctx) {
  for (GameId g : ctx.samples(sampled_birthday(ctx, 0), ctx.bounds.samples)) {
    const Outcome o = ctx.solver.sum_outcome({g, ctx.arena.negate(g)});
    ctx.check(o == Outcome::P, ctx.show(g), "P", ctx.letter(o));
  }
}

bool equals_some_number(Context& ctx, GameId g, int birthday) {
  // A game born by day b that equals a number equals one of these.
  const std::int64_t limit = static_cast<std::int64_t>(birthday) << birthday;
  for (std::int64_t k = -limit; k <= limit; ++k) {
    if (ctx.solver.equal(g, ctx.arena.dyadic(Dyadic(BigInt(k), static_cast<std::size_t>(birthday))))) {
      return true;
    }
  }
  return false;
}

void number_translation(Context& ctx) {
  auto& a = ctx.arena;
  const int b = std::min(2, sampled_birthday(ctx, -1));
  const auto gs = ctx.samples_where(b, ctx.bounds.samples / 5 + 1,
                                    [&](GameId g) { return !equals_some_number(ctx, g, b); });
  const Dyadic xs[] = {Dyadic(BigInt(1), 1), Dyadic(BigInt(-1), 1), Dyadic(1), Dyadic(-1),
                       Dyadic(BigInt(1), 2)};
  for (GameId g : gs) {
    for (const Dyadic& x : xs) {
      const GameId big_x = a.dyadic(x);
      std::vector<GameId> l;
      std::vector<GameId> r;
      for (GameId o : std::vector<GameId>(a.left(g).begin(), a.left(g).end())) l.push_back(a.sum(o, big_x));
      for (GameId o : std::vector<GameId>(a.right(g).begin(), a.right(g).end())) r.push_back(a.sum(o, big_x));
      const GameId shifted = a.make(l, r);
      const Comparison c = ctx.solver.compare(a.sum(g, big_x), shifted);
      ctx.check(c == Comparison::eq, ctx.show(g) + " x=" + x.to_string(), "=", ctx.symbol(c));
    }
  }
}

void lawnmower(Context& ctx) {
  auto& a = ctx.arena;
  const auto gs = ctx.samples_where(sampled_birthday(ctx, 0), ctx.bounds.samples / 3 + 1,
                                    [&](GameId g) { return a.is_dicotic(g); });
  const Dyadic xs[] = {Dyadic(BigInt(1), 2), Dyadic(BigInt(1), 1), Dyadic(1)};
  for (GameId g : gs) {
    for (const Dyadic& x : xs) {
      const Comparison lo = ctx.solver.compare(a.dyadic(-x), g);
      const Comparison hi = ctx.solver.compare(g, a.dyadic(x));
      ctx.check(lo == Comparison::lt && hi == Comparison::lt, ctx.show(g) + " x=" + x.to_string(),
                "< and <", ctx.symbol(lo) + " and " + ctx.symbol(hi));
    }
  }
}

void check_seq_outcome(Context& ctx, GameId g, GameId h) {
  auto& a = ctx.arena;
  auto& s = ctx.solver;
  const Outcome predicted =
      seq_outcome_formula(s.outcome(g), s.outcome(a.seq(g, a.star())), s.outcome(h));
  const Outcome direct = s.outcome(a.seq(g, h));
  ctx.check(predicted == direct, join_ids(ctx, {g, h}), ctx.letter(direct), ctx.letter(predicted));
}

void seq_outcome_formula_suite(Context& ctx) {
  const int exhaustive = std::min(ctx.bounds.max_birthday, 3);
  const auto small = enumerate_games(ctx.arena, std::min(exhaustive, 2));
  for (GameId g : small) {
    for (GameId h : small) check_seq_outcome(ctx, g, h);
  }
  if (exhaustive >= 3) {
    const auto tiny = enumerate_games(ctx.arena, 1);
    const auto all = enumerate_games(ctx.arena, 3);
    for (std::size_t i = small.size(); i < all.size(); ++i) {
      for (GameId t : tiny) {
        check_seq_outcome(ctx, all[i], t);
        check_seq_outcome(ctx, t, all[i]);
      }
    }
  }
  const int b = sampled_birthday(ctx, 1);
  for (std::size_t i = 0; i < 500; ++i) {
    const auto p = ctx.samples(b, 2);
    check_seq_outcome(ctx, p[0], p[1]);
  }
}

void misere_eq_seq_star(Context& ctx) {
  auto& a = ctx.arena;
  auto check = [&](GameId g) {
    const Outcome m = ctx.solver.misere_outcome(g);
    const Outcome o = ctx.solver.outcome(a.seq(g, a.star()));
    ctx.check(m == o, ctx.show(g), ctx.letter(o), ctx.letter(m));
  };
  for (GameId g : enumerate_games(a, std::min(ctx.bounds.max_birthday, 3))) check(g);
  for (GameId g : ctx.samples(sampled_birthday(ctx, 2), 500)) check(g);
}

void sum_outcome_matches_materialized(Context& ctx) {
  Solver plain(ctx.arena, SolverOptions{.flatten_sums = false});
  auto& a = ctx.arena;
  const int b = sampled_birthday(ctx, -1);
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const auto t = ctx.samples(b, 3);
    const Outcome by_position = ctx.solver.sum_outcome({t[0], t[1], t[2]});
    const Outcome by_tree = plain.outcome(a.sum(a.sum(t[0], t[1]), t[2]));
    ctx.check(by_position == by_tree, join_ids(ctx, {t[0], t[1], t[2]}), ctx.letter(by_tree),
              ctx.letter(by_position));
  }
}

// -------------------------------------------------------------------- values

std::vector<UptimalValue> small_uptimals() {
  std::vector<UptimalValue> out;
  const Dyadic xs[] = {Dyadic(0), Dyadic(BigInt(1), 1), Dyadic(BigInt(-1), 1)};
  for (const Dyadic& x : xs) {
    for (int c = 0; c <= 1; ++c) {
      for (int b1 = -1; b1 <= 1; ++b1) {
        for (int b2 = -1; b2 <= 1; ++b2) {
          UptimalValue u;
          u.x = x;
          u.star = c;
          u.b = {b1, b2};
          u.normalize();
          out.push_back(u);
        }
      }
    }
  }
  return out;
}

void uptimal_unique(Context& ctx) {
  const auto values = small_uptimals();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const Comparison c =
          ctx.solver.compare(uptimal_to_position(ctx.arena, values[i]),
                             uptimal_to_position(ctx.arena, values[j]));
      ctx.check(c != Comparison::eq,
                format_uptimal(values[i]) + " vs " + format_uptimal(values[j]), "not =",
                ctx.symbol(c));
    }
  }
}

void uptimal_chain(Context& ctx) {
  auto& a = ctx.arena;
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 3; ++n) {
      const SumPosition many(static_cast<std::size_t>(n), a.up(k + 1));
      const Comparison c = ctx.solver.compare(many, SumPosition{a.up(k)});
      ctx.check(c == Comparison::lt,
                std::to_string(n) + " * up^" + std::to_string(k + 1) + " vs up^" + std::to_string(k),
                "<", ctx.symbol(c));
    }
    const Comparison pos = ctx.solver.compare(a.up(k), a.zero());
    const Comparison below_one = ctx.solver.compare(a.up(k), a.integer(1));
    ctx.check(pos == Comparison::gt && below_one == Comparison::lt, "up^" + std::to_string(k),
              "> 0 and < 1", ctx.symbol(pos) + " 0 and " + ctx.symbol(below_one) + " 1");
  }
}

void uptimal_star(Context& ctx) {
  auto& a = ctx.arena;
  for (int k = 1; k <= 3; ++k) {
    SumPosition ups;
    for (int i = 1; i <= k; ++i) ups.push_back(a.up(i));
    SumPosition more = ups;
    more.push_back(a.up(k));
    const Comparison c1 = ctx.solver.compare(ups, SumPosition{a.star()});
    const Comparison c2 = ctx.solver.compare(SumPosition{a.star()}, more);
    ctx.check(c1 == Comparison::confused && c2 == Comparison::lt, "k=" + std::to_string(k),
              "|| and <", ctx.symbol(c1) + " and " + ctx.symbol(c2));
  }
}

void uptimal_option(Context& ctx) {
  auto& a = ctx.arena;
  auto& s = ctx.solver;
  for (int c = 0; c <= 1; ++c) {
    for (std::int64_t b1 = 0; b1 <= 2; ++b1) {
      for (std::int64_t b2 = 0; b2 <= 2; ++b2) {
        const UptimalValue v = UptimalValue::from_down(c, {b1, b2});
        const std::size_t d = deg_of(v);
        if (d == 0) continue;
        const GameId g = uptimal_to_game(a, v);
        // G - (down + ... + down^d) + *
        std::vector<std::int64_t> lowered = v.down();
        for (std::size_t i = 0; i < d; ++i) lowered[i] -= 1;
        const UptimalValue left_bound = UptimalValue::from_down(c + 1, lowered);
        std::vector<std::int64_t> single(d, 0);
        single[d - 1] = 1;
        const UptimalValue right_bound = v - UptimalValue::from_down(0, single);
        const UptimalValue plus_star = v + UptimalValue::of_star();
        const std::vector<GameId> lefts(a.left(g).begin(), a.left(g).end());
        const std::vector<GameId> rights(a.right(g).begin(), a.right(g).end());
        for (GameId gl : lefts) {
          const bool ok = s.leq(SumPosition{gl}, uptimal_to_position(a, left_bound));
          ctx.check(ok, format_uptimal(v) + " left option " + a.to_string(gl),
                    "<= " + format_uptimal(left_bound), ok ? "<=" : "not <=");
        }
        for (GameId gr : rights) {
          const bool is_star_shift =
              s.compare(SumPosition{gr}, uptimal_to_position(a, plus_star)) == Comparison::eq;
          const bool above = s.leq(uptimal_to_position(a, right_bound), SumPosition{gr});
          ctx.check(is_star_shift || above, format_uptimal(v) + " right option " + a.to_string(gr),
                    "= " + format_uptimal(plus_star) + " or >= " + format_uptimal(right_bound),
                    "neither");
        }
      }
    }
  }
}

UptimalValue random_uptimal(std::mt19937_64& rng, std::size_t length, int spread) {
  UptimalValue u;
  const std::int64_t xs[] = {0, 1, -1, 2};
  u.x = Dyadic(BigInt(xs[rng() % 4]), rng() % 3);
  u.star = static_cast<int>(rng() % 2);
  const std::size_t k = rng() % (length + 1);
  for (std::size_t i = 0; i < k; ++i) {
    u.b.push_back(static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread);
  }
  u.normalize();
  return u;
}

void uptimal_add_laws(Context& ctx) {
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const UptimalValue u = random_uptimal(ctx.rng, 4, 3);
    const UptimalValue v = random_uptimal(ctx.rng, 4, 3);
    const UptimalValue w = random_uptimal(ctx.rng, 4, 3);
    const bool ok = u + v == v + u && (u + v) + w == u + (v + w) && u - u == UptimalValue{};
    ctx.check(ok, format_uptimal(u) + " ; " + format_uptimal(v) + " ; " + format_uptimal(w),
              "commutative, associative, inverse", "law broken");
  }
  const std::size_t searched = std::min<std::size_t>(ctx.bounds.samples, 200);
  for (std::size_t i = 0; i < searched; ++i) {
    const UptimalValue u = random_uptimal(ctx.rng, 2, 1);
    const UptimalValue v = random_uptimal(ctx.rng, 2, 1);
    SumPosition both = uptimal_to_position(ctx.arena, u);
    for (GameId g : uptimal_to_position(ctx.arena, v)) both.push_back(g);
    const Comparison c =
        ctx.solver.compare(both, uptimal_to_position(ctx.arena, u + v));
    ctx.check(c == Comparison::eq, format_uptimal(u) + " ; " + format_uptimal(v),
              "= " + format_uptimal(u + v), ctx.symbol(c));
  }
}

// ------------------------------------------------------------------ seq_eval

UnitSeq random_units(std::mt19937_64& rng, std::size_t max_length) {
  const std::size_t length = 1 + rng() % max_length;
  UnitSeq units;
  for (std::size_t i = 0; i < length; ++i) {
    static constexpr Unit kUnits[] = {Unit::plus, Unit::minus, Unit::star};
    units.push_back(kUnits[rng() % 3]);
  }
  return units;
}

void pipeline_equivalence(Context& ctx) {
  for (std::size_t i = 0; i < ctx.bounds.samples; ++i) {
    const CompSeq seq = units_to_components(random_units(ctx.rng, 12));
    const UptimalValue p = eval_seq(seq, Pipeline::prepend);
    const UptimalValue b = eval_seq(seq, Pipeline::blocks);
    ctx.check(p == b, to_string(seq), format_uptimal(p), format_uptimal(b));
  }
}

// Every compound of nonzero integers |n| <= max_abs and stars expanding to at
// most max_units units.
void all_compseqs(std::size_t max_units, std::int64_t max_abs, CompSeq& current,
                  std::size_t used, const std::function<void(const CompSeq&)>& visit) {
  visit(current);
  for (std::int64_t n = -max_abs; n <= max_abs; ++n) {
    const bool star = n == 0;
    const std::size_t cost = star ? 1 : static_cast<std::size_t>(std::llabs(n));
    if (used + cost > max_units) continue;
    current.push_back(star ? Component::star() : Component::integer(n));
    all_compseqs(max_units, max_abs, current, used + cost, visit);
    current.pop_back();
  }
}

void solver_equivalence(Context& ctx) {
  std::map<std::uint32_t, std::pair<bool, std::string>> seen;
  CompSeq current;
  all_compseqs(6, 3, current, 0, [&](const CompSeq& seq) {
    const UptimalValue p = eval_seq(seq, Pipeline::prepend);
    const UptimalValue b = eval_seq(seq, Pipeline::blocks);
    const GameId g = materialize_seq(ctx.arena, seq);
    auto it = seen.find(g.value);
    if (it == seen.end()) {
      const Comparison c = ctx.solver.compare(SumPosition{g}, uptimal_to_position(ctx.arena, p));
      it = seen.emplace(g.value, std::make_pair(c == Comparison::eq, ctx.symbol(c))).first;
    }
    ctx.check(it->second.first && p == b, to_string(seq), "= " + format_uptimal(p),
              it->second.first ? "blocks gave " + format_uptimal(b) : it->second.second);
  });
}

void int_chain(Context& ctx) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> a{1, -1};
      for (std::size_t i = 2; i <= n; ++i) a.push_back(mask & (1u << (i - 2)) ? 1 : -1);
      for (std::int64_t m = 0; m <= 2; ++m) {
        CompSeq seq;
        for (std::size_t i = a.size(); i-- > 0;) seq.push_back(Component::integer(a[i]));
        if (m > 0) seq.push_back(Component::integer(m));
        const Dyadic v = int_chain_value(a, m);
        const GameId g = materialize_seq(ctx.arena, seq);
        const Comparison c = ctx.solver.compare(g, ctx.arena.dyadic(v));
        ctx.check(c == Comparison::eq && chain_to_dyadic(expand_units(seq)) == v, to_string(seq),
                  "= " + v.to_string(), ctx.symbol(c));
      }
    }
  }
}

std::vector<Block> small_blocks(std::size_t max_n, std::int64_t max_a) {
  std::vector<Block> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<std::int64_t> a(n + 1, 0);
    while (true) {
      out.push_back(Block{a});
      std::size_t i = 0;
      while (i < a.size() && a[i] == max_a) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
    }
  }
  return out;
}

bool case_applies(const Block& blk, JContext::Kind kind) {
  if (kind == JContext::Kind::zero) return blk.a.back() >= 1;
  return blk.a.size() >= 2 && blk.a.back() == 0;
}

GameId j_game(Arena& a, JContext::Kind kind) {
  return kind == JContext::Kind::zero ? a.zero() : a.star();
}

std::string j_name(JContext::Kind kind) { return kind == JContext::Kind::zero ? "0" : "*"; }

void int_star_blocks(Context& ctx) {
  for (const Block& blk : small_blocks(2, 2)) {
    for (auto kind : {JContext::Kind::zero, JContext::Kind::star}) {
      if (!case_applies(blk, kind)) continue;
      const JContext j = kind == JContext::Kind::zero ? JContext::zero() : JContext::star();
      const UptimalValue v = block_value(blk, j);
      const GameId g = ctx.arena.seq(materialize_block(ctx.arena, blk), j_game(ctx.arena, kind));
      const Comparison c = ctx.solver.compare(SumPosition{g}, uptimal_to_position(ctx.arena, v));
      ctx.check(c == Comparison::eq, to_string(blk) + " -> " + j_name(kind),
                "= " + format_uptimal(v), ctx.symbol(c));
    }
  }
}

void int_star_chained(Context& ctx) {
  const auto outer = small_blocks(1, 1);
  for (const Block& inner : small_blocks(1, 1)) {
    for (auto kind : {JContext::Kind::zero, JContext::Kind::star}) {
      if (!case_applies(inner, kind)) continue;
      const JContext seed = kind == JContext::Kind::zero ? JContext::zero() : JContext::star();
      const UptimalValue j = block_value(inner, seed);
      const GameId inner_game =
          ctx.arena.seq(materialize_block(ctx.arena, inner), j_game(ctx.arena, kind));
      for (const Block& blk : outer) {
        const UptimalValue v = block_value(blk, JContext::negative(j), &ctx.solver);
        const GameId g = ctx.arena.seq(materialize_block(ctx.arena, blk), inner_game);
        const Comparison c = ctx.solver.compare(SumPosition{g}, uptimal_to_position(ctx.arena, v));
        ctx.check(c == Comparison::eq,
                  to_string(blk) + " -> " + to_string(inner) + " -> " + j_name(kind),
                  "= " + format_uptimal(v), ctx.symbol(c));
      }
    }
  }
}

void seq_neg(Context& ctx) {
  for (const Block& blk : small_blocks(2, 2)) {
    for (auto kind : {JContext::Kind::zero, JContext::Kind::star}) {
      if (!case_applies(blk, kind)) continue;
      const JContext j = kind == JContext::Kind::zero ? JContext::zero() : JContext::star();
      const UptimalValue v = block_value(blk, j);
      const Comparison by_value = uptimal_sign(ctx.solver, v);
      const GameId g = ctx.arena.seq(materialize_block(ctx.arena, blk), j_game(ctx.arena, kind));
      const Comparison by_game = ctx.solver.compare(g, ctx.arena.zero());
      ctx.check(by_value == Comparison::lt && by_game == Comparison::lt,
                to_string(blk) + " -> " + j_name(kind), "< and <",
                ctx.symbol(by_value) + " and " + ctx.symbol(by_game));
    }
  }
}

void order_preserve(Context& ctx) {
  auto& a = ctx.arena;
  const auto gs = ctx.samples_where(sampled_birthday(ctx, 0), ctx.bounds.samples,
                                    [&](GameId g) { return a.is_dicotic(g); });
  const auto level2 = enumerate_games(a, std::min(2, ctx.bounds.max_birthday));
  std::size_t premise = 0;
  for (GameId g : gs) {
    const GameId h = level2[ctx.rng() % level2.size()];
    const GameId h2 = level2[ctx.rng() % level2.size()];
    if (!ctx.solver.leq(h2, h)) {
      ctx.check(true, "", "", "");
      continue;
    }
    ++premise;
    const bool ok = ctx.solver.leq(a.seq(g, h2), a.seq(g, h));
    ctx.check(ok, join_ids(ctx, {g, h, h2}), "G->H' <= G->H", "not <=");
  }
  ctx.report.notes.push_back("premise_held=" + std::to_string(premise));
}

void num_trans(Context& ctx) {
  auto& a = ctx.arena;
  const auto gs = ctx.samples_where(sampled_birthday(ctx, 0), ctx.bounds.samples / 4 + 1,
                                    [&](GameId g) { return a.is_dicotic(g); });
  const auto level2 = enumerate_games(a, std::min(2, ctx.bounds.max_birthday));
  const Dyadic xs[] = {Dyadic(1), Dyadic(-1), Dyadic(BigInt(1), 1), Dyadic(BigInt(-1), 1)};
  for (GameId g : gs) {
    GameId h = a.zero();
    for (int tries = 0; tries < 64; ++tries) {
      h = level2[ctx.rng() % level2.size()];
      if (a.is_dicotic(a.seq(g, h))) break;
    }
    if (!a.is_dicotic(a.seq(g, h))) continue;
    for (const Dyadic& x : xs) {
      const GameId big_x = a.dyadic(x);
      const GameId lhs = a.seq(g, a.sum(big_x, h));
      const Comparison c = ctx.solver.compare(SumPosition{lhs}, SumPosition{big_x, a.seq(g, h)});
      ctx.check(c == Comparison::eq, join_ids(ctx, {g, h}) + " x=" + x.to_string(), "=",
                ctx.symbol(c));
    }
  }
}

void star_cancel(Context& ctx) {
  auto& a = ctx.arena;
  const auto gs = ctx.samples_where(sampled_birthday(ctx, 1), ctx.bounds.samples,
                                    [&](GameId g) { return a.is_dicotic(g); });
  for (GameId g : gs) {
    const GameId twice = a.seq(a.seq(g, a.star()), a.star());
    const Comparison c = ctx.solver.compare(twice, g);
    ctx.check(c == Comparison::eq, ctx.show(g), "=", ctx.symbol(c));
  }
}

void star_reduce(Context& ctx) {
  auto& a = ctx.arena;
  const GameId s = a.star();
  for (GameId g : ctx.samples(sampled_birthday(ctx, 1), ctx.bounds.samples)) {
    const GameId three = a.seq(g, a.seq(s, a.seq(s, s)));
    const Comparison c = ctx.solver.compare(three, a.seq(g, s));
    ctx.check(c == Comparison::eq, ctx.show(g), "=", ctx.symbol(c));
  }
}

void block_deg_identity(Context& ctx) {
  std::vector<JContext> negatives;
  for (const auto& d : std::vector<std::vector<std::int64_t>>{{1}, {2, 1}, {3, 3, 1}}) {
    negatives.push_back(JContext::negative(UptimalValue::from_down(0, d)));
    negatives.push_back(JContext::negative(UptimalValue::from_down(1, d)));
  }
  for (const Block& blk : small_blocks(2, 2)) {
    if (blk.a.size() < 2) continue;
    std::vector<JContext> js = negatives;
    if (case_applies(blk, JContext::Kind::zero)) js.push_back(JContext::zero());
    if (case_applies(blk, JContext::Kind::star)) js.push_back(JContext::star());
    for (const JContext& j : js) {
      if (j.kind == JContext::Kind::negative && uptimal_sign(ctx.solver, j.value) != Comparison::lt) {
        continue;
      }
      const std::size_t d = deg_of(block_formula(blk, j));
      Block shorter{std::vector<std::int64_t>(blk.a.begin() + 1, blk.a.end())};
      Block zeroed = blk;
      zeroed.a.front() = 0;
      std::vector<std::int64_t> single(d, 0);
      if (d > 0) single[d - 1] = 1;
      const UptimalValue lhs = block_formula(shorter, j);
      const UptimalValue rhs = block_formula(zeroed, j) - UptimalValue::from_down(0, single);
      ctx.check(d > 0 && lhs == rhs,
                to_string(blk) + " J=" + format_uptimal(j.value) + " d=" + std::to_string(d),
                format_uptimal(rhs), format_uptimal(lhs));
    }
  }
}

}  // namespace

const std::vector<std::pair<CompSeq, std::string>>& example6_cases() {
  static const std::vector<std::pair<CompSeq, std::string>> cases = [] {
    auto I = Component::integer;
    auto S = Component::star();
    return std::vector<std::pair<CompSeq, std::string>>{
        {{I(-1), I(-3), I(-1)}, "-5"},
        {{I(-2), I(1), I(-1), I(4)}, "57/16"},
        {{S, S, S}, "*"},
        {{I(1), I(-1), S, I(3), I(-1), I(1), S, S, S, S, I(-2), I(1)}, "0.43331 + * + 1/4"},
        {{I(-1), I(1), I(-1), S, I(-1), I(1), S, I(4), I(-1)}, "-0.3321 - 1/16"},
        {{S, S, S, S, S, S, I(-2), I(2)}, "5/4"},
    };
  }();
  return cases;
}

namespace {

void example6(Context& ctx) {
  UptimalValue total;
  for (const auto& [seq, text] : example6_cases()) {
    const UptimalValue expected = parse_uptimal(text);
    for (Pipeline p : {Pipeline::prepend, Pipeline::blocks}) {
      const UptimalValue got = eval_seq(seq, p);
      ctx.check(got == expected, to_string(seq), text, format_uptimal(got));
    }
    total = total + expected;
  }
  const UptimalValue aggregate_expected = parse_uptimal("0.10121");
  ctx.check(total == aggregate_expected, "sum of the six values", "0.10121", format_uptimal(total));
  SumPosition compounds;
  for (const auto& [seq, text] : example6_cases()) {
    compounds.push_back(materialize_seq(ctx.arena, seq));
  }
  const Outcome direct = ctx.solver.sum_outcome(compounds);
  const Outcome by_value = ctx.solver.sum_outcome(uptimal_to_position(ctx.arena, total));
  ctx.check(direct == by_value, "outcome of the sum of the six compounds",
            ctx.letter(by_value), ctx.letter(direct));
  ctx.report.notes.push_back(std::string("aggregate=") + format_uptimal(total) +
                             " solver_outcome=" + outcome_letter(direct) +
                             " stated_outcome=N agrees=" + (direct == Outcome::N ? "yes" : "no"));
}

using Suite = void (*)(Context&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"interning_roundtrip", interning_roundtrip},
      {"negate_involution", negate_involution},
      {"seq_associative", seq_associative},
      {"seq_identity", seq_identity},
      {"seq_negation_distributes", seq_negation_distributes},
      {"sum_negation", sum_negation},
      {"dicot_closure", dicot_closure},
      {"table1_correspondence", table1_correspondence},
      {"leq_preorder", leq_preorder},
      {"sum_preserves_order", sum_preserves_order},
      {"sum_inverse", sum_inverse},
      {"number_translation", number_translation},
      {"lawnmower", lawnmower},
      {"seq_outcome_formula", seq_outcome_formula_suite},
      {"misere_eq_seq_star", misere_eq_seq_star},
      {"sum_outcome_matches_materialized", sum_outcome_matches_materialized},
      {"uptimal_unique", uptimal_unique},
      {"uptimal_chain", uptimal_chain},
      {"uptimal_star", uptimal_star},
      {"uptimal_option", uptimal_option},
      {"uptimal_add_laws", uptimal_add_laws},
      {"pipeline_equivalence", pipeline_equivalence},
      {"solver_equivalence", solver_equivalence},
      {"int_chain", int_chain},
      {"int_star_blocks", int_star_blocks},
      {"int_star_chained", int_star_chained},
      {"seq_neg", seq_neg},
      {"order_preserve", order_preserve},
      {"num_trans", num_trans},
      {"star_cancel", star_cancel},
      {"star_reduce", star_reduce},
      {"block_deg_identity", block_deg_identity},
      {"example6", example6},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, suite] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

PropertyReport verify(const std::string& property_id, const OracleBounds& bounds,
                      std::uint64_t seed) {
  for (const auto& [id, suite] : registry()) {
    if (id != property_id) continue;
    auto ctx = std::make_unique<Context>(bounds, seed);
    ctx->report.name = id;
    suite(*ctx);
    return std::move(ctx->report);
  }
  throw UnknownProperty(property_id);
}

}  // namespace seqgame
