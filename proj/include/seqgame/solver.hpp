#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seqgame/arena.hpp"

namespace seqgame {

enum class Outcome { L, R, N, P };
enum class Comparison { lt, eq, gt, confused };

char outcome_letter(Outcome o);
/// "<", "=", ">", "||".
std::string_view comparison_symbol(Comparison c);
/// Sign of a game against zero, read off its outcome class.
Comparison outcome_to_sign(Outcome o);

/// Multiset of components whose disjunctive sum is the position.
using SumPosition = std::vector<GameId>;

struct SolverOptions {
  /// Expand components that the arena recorded as sums into their summands.
  /// Exact (the recorded node is structurally the sum), and keeps positions small.
  bool flatten_sums = true;
  /// Drop a pair {G, -G} from a position before searching it. Sound because
  /// G + (-G) = 0, but it shortcuts the very identity some checks exercise.
  bool cancel_inverses = false;
  std::size_t max_positions = 30'000'000;
};

/// Memoized normal-play search over sum positions.
///
/// The arena must not be mutated from elsewhere while a search is running;
/// between calls it may grow freely.
class Solver {
 public:
  explicit Solver(Arena& arena, SolverOptions options = {});

  Outcome outcome(GameId g);
  Outcome sum_outcome(const SumPosition& position);

  /// Left, moving first, wins.
  bool left_wins_first(const SumPosition& position);
  /// Left wins when Right moves first.
  bool left_wins_second(const SumPosition& position);

  bool leq(GameId g, GameId h);
  Comparison compare(GameId g, GameId h);
  bool leq(const SumPosition& g, const SumPosition& h);
  Comparison compare(const SumPosition& g, const SumPosition& h);
  bool equal(GameId g, GameId h) { return compare(g, h) == Comparison::eq; }

  /// Outcome when the player unable to move wins.
  Outcome misere_outcome(GameId g);

  Arena& arena() { return arena_; }
  std::size_t memo_size() const { return memo_.size(); }
  void clear();

 private:
  struct Entry {
    std::int8_t first = -1;   // left_wins_first
    std::int8_t second = -1;  // left_wins_second
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };
  using Key = std::vector<std::uint32_t>;

  Key normalize(const SumPosition& position) const;
  void append_atoms(GameId g, Key& out) const;
  Key after_move(const Key& key, std::size_t index, GameId option) const;
  Entry& entry(const Key& key);
  bool first(const Key& key);
  bool second(const Key& key);
  bool misere_first(GameId g);
  bool misere_second(GameId g);

  Arena& arena_;
  SolverOptions options_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::vector<std::int8_t> misere_first_;
  std::vector<std::int8_t> misere_second_;
};

/// Outcome of G -> H from o(G), o(G -> *) and o(H).
Outcome seq_outcome_formula(Outcome o_g, Outcome o_g_star, Outcome o_h);

}  // namespace seqgame
