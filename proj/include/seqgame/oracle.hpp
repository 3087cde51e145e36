#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqgame/arena.hpp"
#include "seqgame/seq_eval.hpp"

namespace seqgame {

class UnknownProperty : public std::invalid_argument {
 public:
  explicit UnknownProperty(const std::string& id)
      : std::invalid_argument("unknown property: " + id) {}
};

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
};

struct PropertyReport {
  std::string name;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  /// Free-form key=value facts a suite wants on record (e.g. an observed verdict).
  std::vector<std::string> notes;

  bool passed() const { return failures.empty() && instances > 0; }
  /// One summary line, then one line per note and per counterexample.
  std::string to_lines() const;
};

struct OracleBounds {
  /// Exhaustive suites cover this birthday; sampled suites go one or two past it.
  int max_birthday = 3;
  /// Instances per sampled suite.
  std::size_t samples = 1000;
};

/// Every game of birthday <= 2, and for bound 3 additionally the games with at
/// most one option per side drawn from birthday <= 2. Each game appears once.
std::vector<GameId> enumerate_games(Arena& arena, int max_birthday);

/// Deterministic top-down random games with birthday <= max_birthday.
std::vector<GameId> sample_games(Arena& arena, int max_birthday, std::size_t count,
                                 std::uint64_t seed);

/// The six worked compounds with their values written in uptimal notation.
const std::vector<std::pair<CompSeq, std::string>>& example6_cases();

/// Registered property ids, in a fixed order.
const std::vector<std::string>& property_ids();

/// Runs one suite in a fresh arena. Failing instances are collected, not thrown.
PropertyReport verify(const std::string& property_id, const OracleBounds& bounds = {},
                      std::uint64_t seed = 1);

}  // namespace seqgame
