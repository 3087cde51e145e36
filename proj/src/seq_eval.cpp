#include "seqgame/seq_eval.hpp"

#include <algorithm>
#include <cstdlib>

namespace seqgame {

UnitSeq expand_units(const CompSeq& seq, std::size_t max_units) {
  std::size_t total = 0;
  for (const Component& c : seq) {
    const std::size_t add = c.is_star ? 1 : static_cast<std::size_t>(std::llabs(c.value));
    if (add > max_units || total + add > max_units) {
      throw BudgetExceeded("sequence expands to more than " + std::to_string(max_units) +
                           " units");
    }
    total += add;
  }
  UnitSeq units;
  units.reserve(total);
  for (const Component& c : seq) {
    if (c.is_star) {
      units.push_back(Unit::star);
      continue;
    }
    const Unit u = c.value > 0 ? Unit::plus : Unit::minus;
    for (std::int64_t i = 0; i < std::llabs(c.value); ++i) units.push_back(u);
  }
  return units;
}

CompSeq units_to_components(const UnitSeq& units) {
  CompSeq seq;
  for (Unit u : units) {
    seq.push_back(u == Unit::star ? Component::star()
                                  : Component::integer(static_cast<std::int64_t>(u)));
  }
  return seq;
}

UnitSeq negate_units(UnitSeq units) {
  for (Unit& u : units) u = static_cast<Unit>(-static_cast<int>(u));
  return units;
}

Dyadic int_chain_value(const std::vector<int>& a, std::int64_t m) {
  if (a.size() < 2 || a[0] != 1 || a[1] != -1) {
    throw FormError("integer chain needs a_0 = 1 and a_1 = -1");
  }
  if (m < 0) throw FormError("integer chain needs m >= 0");
  const std::size_t n = a.size() - 1;
  BigInt numerator = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != 1 && a[i] != -1) throw FormError("integer chain entries must be +1 or -1");
    numerator += BigInt(a[i]) << (n - i);
  }
  return Dyadic(numerator, n) + Dyadic(m);
}

Dyadic chain_to_dyadic(const UnitSeq& units) {
  if (units.empty()) return 0;
  if (std::find(units.begin(), units.end(), Unit::star) != units.end()) {
    throw FormError("chain_to_dyadic needs a star-free chain");
  }
  const bool all_plus = std::all_of(units.begin(), units.end(), [](Unit u) { return u == Unit::plus; });
  const bool all_minus =
      std::all_of(units.begin(), units.end(), [](Unit u) { return u == Unit::minus; });
  const auto length = static_cast<std::int64_t>(units.size());
  if (all_plus) return length;
  if (all_minus) return -length;

  const bool negated = units.back() == Unit::minus;
  const UnitSeq chain = negated ? negate_units(units) : units;
  std::size_t run = 0;
  while (run < chain.size() && chain[chain.size() - 1 - run] == Unit::plus) ++run;
  std::vector<int> a{1};
  for (std::size_t i = chain.size() - run; i-- > 0;) a.push_back(static_cast<int>(chain[i]));
  const Dyadic value = int_chain_value(a, static_cast<std::int64_t>(run) - 1);
  return negated ? -value : value;
}

StrippedSeq strip_trailing_number(const CompSeq& seq, std::size_t max_units) {
  std::size_t last_star = seq.size();
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (seq[i].is_star) {
      last_star = i;
      break;
    }
  }
  if (last_star == seq.size()) throw FormError("no star in sequence");
  StrippedSeq out;
  out.prefix.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(last_star) + 1);
  const CompSeq rest(seq.begin() + static_cast<std::ptrdiff_t>(last_star) + 1, seq.end());
  out.x = chain_to_dyadic(expand_units(rest, max_units));
  return out;
}

CompSeq reduce_trailing_stars(const CompSeq& prefix) {
  std::size_t run = 0;
  while (run < prefix.size() && prefix[prefix.size() - 1 - run].is_star) ++run;
  if (run <= 2) return prefix;
  const std::size_t keep = run % 2 == 1 ? 1 : 2;
  return CompSeq(prefix.begin(), prefix.end() - static_cast<std::ptrdiff_t>(run - keep));
}

UptimalValue prepend(Unit u, const UptimalValue& v) {
  std::vector<std::int64_t> d = v.down();
  if (!v.x.is_zero() || d.empty() || d.back() <= 0) {
    throw FormError("prepend needs c* + sum d_i down^i with d_k >= 1, got " +
                    format_uptimal(v));
  }
  if (u == Unit::minus) {
    d.push_back(1);
    return UptimalValue::from_down(v.star, std::move(d));
  }
  for (auto& c : d) c += 1;
  return UptimalValue::from_down(v.star + 1, std::move(d));
}

namespace {

std::size_t trailing_stars(const UnitSeq& units) {
  std::size_t run = 0;
  while (run < units.size() && units[units.size() - 1 - run] == Unit::star) ++run;
  return run;
}

// Checks the reduced shape and reports whether the base pattern is met as is
// (otherwise the negated prefix meets it).
bool base_pattern(const UnitSeq& prefix) {
  const std::size_t stars = trailing_stars(prefix);
  if (stars == 0 || stars > 2) {
    throw FormError("prefix must end in one or two stars");
  }
  if (stars == prefix.size()) throw FormError("prefix must not consist of stars only");
  const Unit before = prefix[prefix.size() - stars - 1];
  return (before == Unit::plus && stars == 1) || (before == Unit::minus && stars == 2);
}

UptimalValue single_down() { return UptimalValue::from_down(0, {1}); }

}  // namespace

UptimalValue eval_prefix_prepend(const UnitSeq& prefix) {
  if (!base_pattern(prefix)) return -eval_prefix_prepend(negate_units(prefix));
  const std::size_t base_length = trailing_stars(prefix) + 1;
  UptimalValue v = single_down();
  for (std::size_t i = prefix.size() - base_length; i-- > 0;) v = prepend(prefix[i], v);
  return v;
}

BlockDecomposition block_decompose(const UnitSeq& prefix) {
  const std::size_t stars = trailing_stars(prefix);
  const std::size_t n = prefix.size();
  BlockDecomposition out;
  std::size_t end = n;
  if (stars == 1 && n >= 2 && prefix[n - 2] == Unit::plus) {
    out.tail_star = false;
  } else if (stars == 2 && n >= 3 && prefix[n - 3] == Unit::minus) {
    out.tail_star = true;
    end = n - 1;
  } else {
    throw FormError("prefix must end in 1 -> * or (-1) -> * -> *");
  }
  Block current;
  std::int64_t run = 0;
  for (std::size_t i = 0; i < end; ++i) {
    switch (prefix[i]) {
      case Unit::plus:
        ++run;
        break;
      case Unit::minus:
        current.a.push_back(run);
        run = 0;
        break;
      case Unit::star:
        current.a.push_back(run);
        out.blocks.push_back(std::move(current));
        current = Block{};
        run = 0;
        break;
    }
  }
  return out;
}

UnitSeq block_units(const Block& block) {
  UnitSeq units;
  for (std::size_t i = 0; i < block.a.size(); ++i) {
    if (i > 0) units.push_back(Unit::minus);
    units.insert(units.end(), static_cast<std::size_t>(block.a[i]), Unit::plus);
  }
  units.push_back(Unit::star);
  return units;
}

UptimalValue block_formula(const Block& block, const JContext& j) {
  if (block.a.empty()) throw FormError("empty block");
  const std::size_t n = block.a.size() - 1;
  // a(i) is a_i; tail(i) is a_i + ... + a_n.
  auto a = [&](std::size_t i) { return block.a[n - i]; };
  std::vector<std::int64_t> tail(n + 2, 0);
  for (std::size_t i = n + 1; i-- > 0;) tail[i] = tail[i + 1] + a(i);
  const std::int64_t total = tail[0];

  switch (j.kind) {
    case JContext::Kind::zero: {
      std::vector<std::int64_t> d(n + 1);
      for (std::size_t i = 0; i <= n; ++i) d[i] = 1 + tail[i];
      d[0] -= 1;
      return UptimalValue::from_down(static_cast<int>((1 + total) % 2), std::move(d));
    }
    case JContext::Kind::star: {
      std::vector<std::int64_t> d(n);
      for (std::size_t i = 1; i <= n; ++i) d[i - 1] = 1 + tail[i];
      return UptimalValue::from_down(static_cast<int>(tail[1] % 2), std::move(d));
    }
    case JContext::Kind::negative: {
      std::vector<std::int64_t> d = j.value.down();
      for (auto& c : d) c += 1 + total;
      for (std::size_t i = 1; i <= n; ++i) d.push_back(1 + tail[i]);
      UptimalValue out =
          UptimalValue::from_down(static_cast<int>((j.value.star + 1 + total) % 2), std::move(d));
      out.x = j.value.x;
      return out;
    }
  }
  return {};
}

bool is_monotone_down(const UptimalValue& v) {
  if (!v.x.is_zero()) return false;
  const auto d = v.down();
  if (d.empty() || d.back() < 1) return false;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i - 1] < d[i]) return false;
  }
  return true;
}

UptimalValue block_value(const Block& block, const JContext& j, Solver* solver) {
  if (block.a.empty()) throw FormError("empty block");
  for (auto v : block.a) {
    if (v < 0) throw FormError("block entries must be non-negative");
  }
  const std::size_t n = block.a.size() - 1;
  const std::int64_t a0 = block.a.back();
  switch (j.kind) {
    case JContext::Kind::zero:
      if (a0 < 1) throw FormError(to_string(block) + " -> 0 needs a_0 >= 1");
      break;
    case JContext::Kind::star:
      if (n < 1 || a0 != 0) throw FormError(to_string(block) + " -> * needs n >= 1 and a_0 = 0");
      break;
    case JContext::Kind::negative: {
      if (!is_monotone_down(j.value)) {
        throw FormError("J = " + format_uptimal(j.value) +
                        " is not c* + sum d_i down^i with d_1 >= ... >= d_k >= 1");
      }
      std::optional<Comparison> sign = uptimal_sign_fast(j.value);
      if (!sign && solver != nullptr) sign = uptimal_sign(*solver, j.value);
      if (!sign) throw FormError("sign of J = " + format_uptimal(j.value) + " is undecided");
      if (*sign != Comparison::lt) {
        throw FormError("J = " + format_uptimal(j.value) + " is not negative");
      }
      break;
    }
  }
  return block_formula(block, j);
}

UptimalValue eval_prefix_blocks(const UnitSeq& prefix, Solver* solver) {
  if (!base_pattern(prefix)) return -eval_prefix_blocks(negate_units(prefix), solver);
  const BlockDecomposition parts = block_decompose(prefix);
  const JContext seed = parts.tail_star ? JContext::star() : JContext::zero();
  UptimalValue j = block_value(parts.blocks.back(), seed, solver);
  for (std::size_t i = parts.blocks.size() - 1; i-- > 0;) {
    j = block_value(parts.blocks[i], JContext::negative(j), solver);
  }
  return j;
}

UptimalValue eval_seq(const CompSeq& seq, Pipeline pipeline, std::size_t max_units) {
  CompSeq cleaned;
  for (const Component& c : seq) {
    if (c.is_star || c.value != 0) cleaned.push_back(c);
  }
  const UnitSeq all_units = expand_units(cleaned, max_units);
  if (all_units.empty()) return {};
  const bool has_star = std::any_of(cleaned.begin(), cleaned.end(),
                                    [](const Component& c) { return c.is_star; });
  if (!has_star) return UptimalValue::of_dyadic(chain_to_dyadic(all_units));

  StrippedSeq stripped = strip_trailing_number(cleaned, max_units);
  const UnitSeq prefix = expand_units(reduce_trailing_stars(stripped.prefix), max_units);
  UptimalValue value;
  if (trailing_stars(prefix) == prefix.size()) {
    value.star = prefix.size() == 1 ? 1 : 0;
  } else if (pipeline == Pipeline::blocks) {
    value = eval_prefix_blocks(prefix);
  } else {
    value = eval_prefix_prepend(prefix);
  }
  return value + UptimalValue::of_dyadic(stripped.x);
}

GameId materialize_seq(Arena& arena, const CompSeq& seq) {
  std::vector<GameId> parts;
  parts.reserve(seq.size());
  for (const Component& c : seq) parts.push_back(c.is_star ? arena.star() : arena.integer(c.value));
  return arena.seq(parts);
}

GameId materialize_block(Arena& arena, const Block& block) {
  return materialize_seq(arena, units_to_components(block_units(block)));
}

std::string to_string(const CompSeq& seq) {
  std::string out;
  for (const Component& c : seq) {
    if (!out.empty()) out += " -> ";
    if (c.is_star) {
      out += '*';
    } else if (c.value < 0) {
      out += "(" + std::to_string(c.value) + ")";
    } else {
      out += std::to_string(c.value);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const Block& block) {
  std::string out = "[";
  for (std::size_t i = 0; i < block.a.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(block.a[i]);
  }
  return out + "]";
}

}  // namespace seqgame
