#pragma once

#include <cstddef>
#include <cstdint>

#include "seqgame/solver.hpp"
#include "seqgame/uptimal.hpp"

namespace seqgame {

/// Search window for identify_value.
struct ValueBounds {
  /// The number part is looked for among multiples of 2^-max_exponent.
  std::size_t max_exponent = 8;
  std::int64_t max_integer = 16;
  /// Largest |b_i| tried, and the largest index i.
  std::int64_t max_coefficient = 12;
  std::size_t max_length = 12;
};

/// Bounds large enough for a compound that expands to `units` units.
ValueBounds bounds_for_units(std::size_t units);

/// Finds the uptimal value of the position by comparisons alone, with no use of
/// the closed forms. The answer is confirmed by an equality check against the
/// materialized candidate. Throws FormError if no value inside the bounds fits.
UptimalValue identify_value(Solver& solver, const SumPosition& position,
                            const ValueBounds& bounds);

}  // namespace seqgame
