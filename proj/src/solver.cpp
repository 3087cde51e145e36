#include "seqgame/solver.hpp"

#include <algorithm>

namespace seqgame {

char outcome_letter(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::R: return 'R';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
  }
  return '?';
}

std::string_view comparison_symbol(Comparison c) {
  switch (c) {
    case Comparison::lt: return "<";
    case Comparison::eq: return "=";
    case Comparison::gt: return ">";
    case Comparison::confused: return "||";
  }
  return "?";
}

Comparison outcome_to_sign(Outcome o) {
  switch (o) {
    case Outcome::L: return Comparison::gt;
    case Outcome::R: return Comparison::lt;
    case Outcome::P: return Comparison::eq;
    case Outcome::N: return Comparison::confused;
  }
  return Comparison::confused;
}

namespace {

Outcome from_bits(bool first, bool second) {
  if (first && second) return Outcome::L;
  if (!first && !second) return Outcome::R;
  return second ? Outcome::P : Outcome::N;
}

}  // namespace

std::size_t Solver::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ key.size();
  for (std::uint32_t v : key) {
    h ^= v;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

Solver::Solver(Arena& arena, SolverOptions options) : arena_(arena), options_(options) {}

void Solver::clear() {
  memo_.clear();
  misere_first_.clear();
  misere_second_.clear();
}

void Solver::append_atoms(GameId g, Key& out) const {
  if (g == arena_.zero()) return;
  if (!options_.flatten_sums) {
    out.push_back(g.value);
    return;
  }
  std::vector<GameId> atoms;
  arena_.flatten_into(g, atoms);
  for (GameId a : atoms) out.push_back(a.value);
}

Solver::Key Solver::normalize(const SumPosition& position) const {
  Key key;
  for (GameId g : position) append_atoms(g, key);
  std::sort(key.begin(), key.end());
  if (options_.cancel_inverses) {
    Key kept;
    std::vector<bool> used(key.size(), false);
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (used[i]) continue;
      auto negation = arena_.known_negation(GameId{key[i]});
      if (negation && negation->value != key[i]) {
        std::size_t j = i + 1;
        for (; j < key.size(); ++j) {
          if (!used[j] && key[j] == negation->value) break;
        }
        if (j < key.size()) {
          used[i] = used[j] = true;
          continue;
        }
      }
      kept.push_back(key[i]);
    }
    key = std::move(kept);
  }
  return key;
}

Solver::Key Solver::after_move(const Key& key, std::size_t index, GameId option) const {
  Key next;
  next.reserve(key.size() + 4);
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i != index) next.push_back(key[i]);
  }
  if (options_.cancel_inverses) {
    std::vector<GameId> position;
    for (auto v : next) position.push_back(GameId{v});
    position.push_back(option);
    return normalize(position);
  }
  append_atoms(option, next);
  std::sort(next.begin(), next.end());
  return next;
}

Solver::Entry& Solver::entry(const Key& key) {
  auto [it, inserted] = memo_.try_emplace(key);
  if (inserted && memo_.size() > options_.max_positions) {
    memo_.erase(it);
    throw BudgetExceeded("solver position budget of " + std::to_string(options_.max_positions) +
                         " exceeded");
  }
  return it->second;  // node-based map: the reference survives rehashing
}

bool Solver::first(const Key& key) {
  Entry& e = entry(key);
  if (e.first >= 0) return e.first == 1;
  bool wins = false;
  for (std::size_t i = 0; i < key.size() && !wins; ++i) {
    if (i > 0 && key[i] == key[i - 1]) continue;
    for (GameId option : arena_.left(GameId{key[i]})) {
      if (second(after_move(key, i, option))) {
        wins = true;
        break;
      }
    }
  }
  e.first = wins ? 1 : 0;
  return wins;
}

bool Solver::second(const Key& key) {
  Entry& e = entry(key);
  if (e.second >= 0) return e.second == 1;
  bool wins = true;
  for (std::size_t i = 0; i < key.size() && wins; ++i) {
    if (i > 0 && key[i] == key[i - 1]) continue;
    for (GameId option : arena_.right(GameId{key[i]})) {
      if (!first(after_move(key, i, option))) {
        wins = false;
        break;
      }
    }
  }
  e.second = wins ? 1 : 0;
  return wins;
}

bool Solver::left_wins_first(const SumPosition& position) { return first(normalize(position)); }

bool Solver::left_wins_second(const SumPosition& position) {
  return second(normalize(position));
}

Outcome Solver::sum_outcome(const SumPosition& position) {
  const Key key = normalize(position);
  const bool f = first(key);
  const bool s = second(key);
  return from_bits(f, s);
}

Outcome Solver::outcome(GameId g) { return sum_outcome(SumPosition{g}); }

bool Solver::leq(const SumPosition& g, const SumPosition& h) {
  SumPosition difference = g;
  for (GameId x : h) difference.push_back(arena_.negate(x));
  return !left_wins_first(difference);
}

Comparison Solver::compare(const SumPosition& g, const SumPosition& h) {
  const bool below = leq(g, h);
  const bool above = leq(h, g);
  if (below && above) return Comparison::eq;
  if (below) return Comparison::lt;
  if (above) return Comparison::gt;
  return Comparison::confused;
}

bool Solver::leq(GameId g, GameId h) { return leq(SumPosition{g}, SumPosition{h}); }

Comparison Solver::compare(GameId g, GameId h) {
  return compare(SumPosition{g}, SumPosition{h});
}

bool Solver::misere_first(GameId g) {
  if (misere_first_.size() < arena_.size()) {
    misere_first_.resize(arena_.size(), -1);
    misere_second_.resize(arena_.size(), -1);
  }
  if (misere_first_[g.value] >= 0) return misere_first_[g.value] == 1;
  const auto options = arena_.left(g);
  bool wins = options.empty();
  for (GameId option : options) {
    if (misere_second(option)) {
      wins = true;
      break;
    }
  }
  misere_first_[g.value] = wins ? 1 : 0;
  return wins;
}

bool Solver::misere_second(GameId g) {
  if (misere_first_.size() < arena_.size()) {
    misere_first_.resize(arena_.size(), -1);
    misere_second_.resize(arena_.size(), -1);
  }
  if (misere_second_[g.value] >= 0) return misere_second_[g.value] == 1;
  const auto options = arena_.right(g);
  bool wins = !options.empty();
  for (GameId option : options) {
    if (!misere_first(option)) {
      wins = false;
      break;
    }
  }
  misere_second_[g.value] = wins ? 1 : 0;
  return wins;
}

Outcome Solver::misere_outcome(GameId g) {
  const bool f = misere_first(g);
  const bool s = misere_second(g);
  return from_bits(f, s);
}

Outcome seq_outcome_formula(Outcome o_g, Outcome o_g_star, Outcome o_h) {
  switch (o_h) {
    case Outcome::L: return Outcome::L;
    case Outcome::R: return Outcome::R;
    case Outcome::P: return o_g;
    case Outcome::N: return o_g_star;
  }
  return o_h;
}

}  // namespace seqgame
