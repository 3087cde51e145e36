#include "seqgame/value_search.hpp"

#include <optional>

namespace seqgame {

ValueBounds bounds_for_units(std::size_t units) {
  ValueBounds b;
  b.max_exponent = units + 1;
  b.max_integer = static_cast<std::int64_t>(units) + 1;
  b.max_coefficient = static_cast<std::int64_t>(units) + 2;
  b.max_length = units + 1;
  return b;
}

namespace {

class ValueSearch {
 public:
  ValueSearch(Solver& solver, const SumPosition& position, const ValueBounds& bounds)
      : solver_(solver), arena_(solver.arena()), position_(position), bounds_(bounds) {}

  UptimalValue run() {
    const Dyadic x = number_part();
    for (int c = 0; c <= 1; ++c) {
      UptimalValue candidate;
      candidate.x = x;
      candidate.star = c;
      if (auto found = digits(candidate, 1)) {
        if (solver_.compare(position_, uptimal_to_position(arena_, *found)) == Comparison::eq) {
          return *found;
        }
      }
    }
    throw FormError("no uptimal value within the search bounds equals the position");
  }

 private:
  // Sign of position - u.
  Comparison sign_minus(const UptimalValue& u) {
    SumPosition p = position_;
    for (GameId g : uptimal_to_position(arena_, -u)) p.push_back(g);
    return outcome_to_sign(solver_.sum_outcome(p));
  }

  bool below(const Dyadic& y) {
    return solver_.compare(SumPosition{arena_.dyadic(y)}, position_) == Comparison::lt;
  }

  Dyadic number_part() {
    const Dyadic step(BigInt(1), bounds_.max_exponent);
    const BigInt scale = BigInt(1) << bounds_.max_exponent;
    // Grid indices i stand for i * step.
    BigInt lo = -(bounds_.max_integer + 1) * scale;
    BigInt hi = (bounds_.max_integer + 1) * scale;
    auto at = [&](const BigInt& i) { return Dyadic(i, bounds_.max_exponent); };
    if (!below(at(lo)) || below(at(hi))) {
      throw FormError("number part lies outside the search bounds");
    }
    // Smallest grid point z that is not below the position.
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (below(at(mid))) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const Dyadic z = at(hi);
    return below(z - step.half()) ? z : z - step;
  }

  // Once the first `index` coefficients are right, what is left is a
  // combination of higher ups and so lies strictly between -up^index and up^index.
  bool remainder_below(const UptimalValue& u, std::size_t index) {
    std::vector<std::int64_t> single(index, 0);
    single[index - 1] = 1;
    UptimalValue up;
    up.b = single;
    return sign_minus(u + up) == Comparison::lt && sign_minus(u - up) == Comparison::gt;
  }

  std::optional<UptimalValue> digits(UptimalValue u, std::size_t index) {
    const Comparison now = sign_minus(u);
    if (now == Comparison::eq) return u;
    if (index > bounds_.max_length) return std::nullopt;
    auto with = [&](std::int64_t t) {
      UptimalValue v = u;
      if (v.b.size() < index) v.b.resize(index, 0);
      v.b[index - 1] = t;
      v.normalize();
      return v;
    };
    // Sign of (position - u - t up^index) is gt for t below the true coefficient
    // and lt above it.
    std::int64_t lo = -bounds_.max_coefficient - 1;
    std::int64_t hi = bounds_.max_coefficient + 1;
    if (sign_minus(with(lo)) != Comparison::gt) return std::nullopt;
    if (sign_minus(with(hi)) == Comparison::gt) return std::nullopt;
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (sign_minus(with(mid)) == Comparison::gt) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    for (std::int64_t t : {hi, hi - 1}) {
      if (t < -bounds_.max_coefficient || t > bounds_.max_coefficient) continue;
      const UptimalValue next = with(t);
      if (!remainder_below(next, index)) continue;
      if (auto found = digits(next, index + 1)) return found;
    }
    return std::nullopt;
  }

  Solver& solver_;
  Arena& arena_;
  SumPosition position_;
  ValueBounds bounds_;
};

}  // namespace

UptimalValue identify_value(Solver& solver, const SumPosition& position,
                            const ValueBounds& bounds) {
  return ValueSearch(solver, position, bounds).run();
}

}  // namespace seqgame
