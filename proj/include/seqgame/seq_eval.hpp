#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqgame/arena.hpp"
#include "seqgame/dyadic.hpp"
#include "seqgame/solver.hpp"
#include "seqgame/uptimal.hpp"

namespace seqgame {

/// One component of a sequential compound of integers and stars.
struct Component {
  bool is_star = false;
  std::int64_t value = 0;

  static Component integer(std::int64_t n) { return {false, n}; }
  static Component star() { return {true, 0}; }
  friend bool operator==(const Component&, const Component&) = default;
};
using CompSeq = std::vector<Component>;

enum class Unit : std::int8_t { minus = -1, star = 0, plus = 1 };
using UnitSeq = std::vector<Unit>;

/// [a_n, ..., a_0] stored in that order (a.front() is a_n, a.back() is a_0).
struct Block {
  std::vector<std::int64_t> a;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Where the block is played into: 0, *, or a negative value in down-view.
struct JContext {
  enum class Kind { zero, star, negative };
  Kind kind = Kind::zero;
  UptimalValue value;

  static JContext zero() { return {Kind::zero, {}}; }
  static JContext star() { return {Kind::star, UptimalValue::of_star()}; }
  static JContext negative(UptimalValue v) { return {Kind::negative, std::move(v)}; }
};

enum class Pipeline { prepend, blocks };

constexpr std::size_t kDefaultUnitBudget = 100'000;

/// Each integer n becomes |n| copies of its sign; zeros vanish.
UnitSeq expand_units(const CompSeq& seq, std::size_t max_units = kDefaultUnitBudget);
CompSeq units_to_components(const UnitSeq& units);
UnitSeq negate_units(UnitSeq units);

/// m + sum a_i / 2^i with a given as (a_0, a_1, ..., a_n); needs a_0 = 1, a_1 = -1.
Dyadic int_chain_value(const std::vector<int>& a, std::int64_t m);
/// Value of a star-free unit chain.
Dyadic chain_to_dyadic(const UnitSeq& units);

struct StrippedSeq {
  CompSeq prefix;
  Dyadic x;
};
/// Splits off everything after the rightmost star as a number.
/// Throws FormError if there is no star.
StrippedSeq strip_trailing_number(const CompSeq& seq,
                                  std::size_t max_units = kDefaultUnitBudget);
/// Shortens the trailing star run to length 1 (odd) or 2 (even).
CompSeq reduce_trailing_stars(const CompSeq& prefix);

/// Value of u -> G given the value v of G in down-view with last coefficient >= 1.
UptimalValue prepend(Unit u, const UptimalValue& v);
/// Reduced prefix ending in one or two stars, not all stars.
UptimalValue eval_prefix_prepend(const UnitSeq& prefix);

struct BlockDecomposition {
  std::vector<Block> blocks;  // leftmost block first
  bool tail_star = false;
};
/// Needs ... -> 1 -> * or ... -> (-1) -> * -> *.
BlockDecomposition block_decompose(const UnitSeq& prefix);
/// The units a_n -> (-1) -> ... -> (-1) -> a_0 -> *.
UnitSeq block_units(const Block& block);
/// The closed form for [block] -> J, applied as written without checking the
/// hypotheses under which it was derived.
UptimalValue block_formula(const Block& block, const JContext& j);
/// block_formula after checking which case applies. The sign of a negative J is
/// decided from its coefficients, or by `solver` if that is not enough.
UptimalValue block_value(const Block& block, const JContext& j, Solver* solver = nullptr);
/// True if v is c* + sum d_i down^i with d_1 >= ... >= d_k >= 1, k >= 1.
bool is_monotone_down(const UptimalValue& v);
UptimalValue eval_prefix_blocks(const UnitSeq& prefix, Solver* solver = nullptr);

/// Full closed-form evaluation of a compound of integers and stars.
UptimalValue eval_seq(const CompSeq& seq, Pipeline pipeline = Pipeline::prepend,
                      std::size_t max_units = kDefaultUnitBudget);

GameId materialize_seq(Arena& arena, const CompSeq& seq);
GameId materialize_block(Arena& arena, const Block& block);

std::string to_string(const CompSeq& seq);
std::string to_string(const Block& block);

}  // namespace seqgame
