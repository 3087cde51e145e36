#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqgame/arena.hpp"
#include "seqgame/dyadic.hpp"
#include "seqgame/solver.hpp"

namespace seqgame {

/// x + c* + sum_i b_i up^i, with b[0] the coefficient of up^1.
///
/// Coefficients are stored against the ups. The evaluator mostly reasons about
/// c* + sum d_i down^i with d_i >= 0; `down()` / `from_down()` give that view.
struct UptimalValue {
  Dyadic x;
  int star = 0;
  std::vector<std::int64_t> b;

  static UptimalValue from_down(int star, std::vector<std::int64_t> d, Dyadic x = 0);
  static UptimalValue of_dyadic(Dyadic x);
  static UptimalValue of_star() { return from_down(1, {}); }

  /// Negated coefficients, i.e. the multiplicities of the downs.
  std::vector<std::int64_t> down() const;
  /// Coefficient of up^i, i >= 1 (zero past the end).
  std::int64_t up_coefficient(std::size_t i) const;
  /// Highest index with a nonzero coefficient (0 if none).
  std::size_t length() const { return b.size(); }
  bool is_zero() const { return x.is_zero() && star == 0 && b.empty(); }
  bool infinitesimal_is_zero() const { return star == 0 && b.empty(); }

  /// Drops trailing zero coefficients and reduces the star parity mod 2.
  void normalize();

  friend bool operator==(const UptimalValue&, const UptimalValue&) = default;
};

UptimalValue uptimal_add(const UptimalValue& u, const UptimalValue& v);
UptimalValue uptimal_negate(const UptimalValue& u);
inline UptimalValue operator+(const UptimalValue& u, const UptimalValue& v) {
  return uptimal_add(u, v);
}
inline UptimalValue operator-(const UptimalValue& u) { return uptimal_negate(u); }
inline UptimalValue operator-(const UptimalValue& u, const UptimalValue& v) {
  return uptimal_add(u, uptimal_negate(v));
}

/// Components whose disjunctive sum has value u: the number x, the star if
/// present, and |b_i| copies of up^i (or down^i for negative b_i).
SumPosition uptimal_to_position(Arena& arena, const UptimalValue& u);
/// The same sum materialized as a single game. Fine for small values; large
/// ones should go through uptimal_to_position.
GameId uptimal_to_game(Arena& arena, const UptimalValue& u);

/// Sign decided from the value alone when an ordering argument settles it.
std::optional<Comparison> uptimal_sign_fast(const UptimalValue& u);
/// Sign against zero; falls back to searching the sum position.
Comparison uptimal_sign(Solver& solver, const UptimalValue& u);

/// Max i with a nonzero down-coefficient. Only defined for c* + sum d_i down^i
/// with every d_i >= 0.
std::size_t deg_of(const UptimalValue& u);

UptimalValue parse_uptimal(std::string_view text);
std::string format_uptimal(const UptimalValue& u);

}  // namespace seqgame
