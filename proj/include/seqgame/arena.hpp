#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seqgame/dyadic.hpp"
#include "seqgame/errors.hpp"

namespace seqgame {

/// Handle to an interned game. Only meaningful together with the Arena that issued it.
struct GameId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(GameId, GameId) = default;
};

struct ArenaLimits {
  std::size_t max_nodes = 10'000'000;
  std::int64_t max_integer = 100'000;
};

/// Hash-consed storage of short games.
///
/// Every node is a pair of option sets, stored sorted by id and deduplicated, so
/// two ids are equal exactly when the games are structurally identical. No
/// simplification of any kind is applied: dominated or reversible options stay.
///
/// Operations recurse on the option DAG; recursion depth is bounded by the
/// birthday of the games involved. An Arena (and every cache hanging off it) is
/// meant to be used from one thread at a time.
class Arena {
 public:
  enum class Side { left, right };

  explicit Arena(ArenaLimits limits = {});

  Arena(const Arena&) = delete;
  Arena& operator=(const Arena&) = delete;

  /// Interns {left | right}. Ids must already belong to this arena. Duplicate
  /// entries collapse (option sets are sets).
  GameId make(std::span<const GameId> left, std::span<const GameId> right);

  GameId zero() const { return GameId{0}; }
  GameId star();
  GameId integer(std::int64_t n);
  GameId dyadic(const Dyadic& x);
  /// Up-kth, k >= 1: {0 | * + down(1) + ... + down(k-1)}.
  GameId up(int k);
  /// Down-kth, k >= 1: {* + up(1) + ... + up(k-1) | 0}.
  GameId down(int k);

  GameId negate(GameId g);
  /// The negation of g if it has already been interned.
  std::optional<GameId> known_negation(GameId g) const;
  GameId sum(GameId g, GameId h);
  GameId sum(std::span<const GameId> games);
  /// Sequential compound g -> h.
  GameId seq(GameId g, GameId h);
  /// Right-associated fold g1 -> g2 -> ... -> gn; empty input gives zero.
  GameId seq(std::span<const GameId> games);

  /// Least n with g in G~_n.
  int birthday(GameId g);
  bool is_dicotic(GameId g);

  std::span<const GameId> options(GameId g, Side side) const;
  std::span<const GameId> left(GameId g) const { return options(g, Side::left); }
  std::span<const GameId> right(GameId g) const { return options(g, Side::right); }

  /// If g was produced by sum(a, b) (or is the negation of such a node), the
  /// pair (a, b). The game g is structurally identical to a + b.
  std::optional<std::pair<GameId, GameId>> summands(GameId g) const;

  /// Appends the non-zero atoms of g, expanding recorded sums recursively.
  void flatten_into(GameId g, std::vector<GameId>& out) const;

  /// `{L1,L2|R1,R2}` with `{|}` for zero; children in id order.
  std::string to_string(GameId g) const;
  /// Inverse of to_string (whitespace allowed between tokens).
  GameId parse(std::string_view text);

  std::size_t size() const { return nodes_.size(); }
  const ArenaLimits& limits() const { return limits_; }
  bool contains(GameId g) const { return g.value < nodes_.size(); }

 private:
  struct Node {
    std::uint32_t offset;
    std::uint32_t left_count;
    std::uint32_t right_count;
  };

  std::vector<GameId> copy_options(GameId g, Side side) const;
  GameId intern(std::vector<GameId>& left, std::vector<GameId>& right);
  std::uint64_t node_hash(std::span<const GameId> left, std::span<const GameId> right) const;
  bool node_equals(std::uint32_t index, std::span<const GameId> left,
                   std::span<const GameId> right) const;
  void grow_table();
  GameId natural(std::int64_t n);
  GameId build_dyadic(const Dyadic& x);

  ArenaLimits limits_;
  std::vector<Node> nodes_;
  std::vector<GameId> pool_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> table_;

  std::vector<std::uint32_t> negation_;
  std::vector<std::int32_t> birthday_;
  std::vector<std::int8_t> dicotic_;
  std::unordered_map<std::uint64_t, GameId> sum_memo_;
  std::unordered_map<std::uint64_t, GameId> seq_memo_;
  std::unordered_map<std::uint32_t, std::pair<GameId, GameId>> summands_;
  std::map<std::pair<BigInt, std::size_t>, GameId> dyadic_memo_;
  std::vector<GameId> naturals_;
  std::vector<GameId> ups_;
  std::vector<GameId> downs_;
};

}  // namespace seqgame

template <>
struct std::hash<seqgame::GameId> {
  std::size_t operator()(seqgame::GameId g) const noexcept { return g.value; }
};
