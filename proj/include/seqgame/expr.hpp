#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqgame/arena.hpp"
#include "seqgame/seq_eval.hpp"

namespace seqgame {

struct Expr {
  enum class Kind { integer, star, seq, sum };
  Kind kind = Kind::integer;
  std::int64_t value = 0;
  /// Operands of seq and sum, left to right. Chains are kept flat.
  std::vector<Expr> children;
  /// Byte offset of the first token.
  std::size_t offset = 0;
};

/// expr := sumterm ('+' sumterm)*; sumterm := atom ('->' atom)*;
/// atom := int | '*' | '(' expr ')'.
Expr parse_expr(std::string_view text);

/// Summands of a top-level sum, or the expression itself.
std::vector<const Expr*> sum_terms(const Expr& e);

/// The integer/star components of an expression that uses only `->`, with
/// parentheses dropped. Empty if a sum occurs anywhere inside.
std::optional<CompSeq> as_compseq(const Expr& e);

GameId build_game(Arena& arena, const Expr& e);

std::string to_string(const Expr& e);

}  // namespace seqgame
