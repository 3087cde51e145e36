#include "seqgame/arena.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace seqgame {
namespace {

constexpr std::uint32_t kEmptySlot = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kUnknown = std::numeric_limits<std::uint32_t>::max();

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t pair_key(GameId a, GameId b) {
  return (static_cast<std::uint64_t>(a.value) << 32) | b.value;
}

void canonicalize(std::vector<GameId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

}  // namespace

Arena::Arena(ArenaLimits limits) : limits_(limits) {
  table_.assign(1u << 12, kEmptySlot);
  std::vector<GameId> none;
  std::vector<GameId> none2;
  intern(none, none2);  // id 0 is the zero game
  negation_[0] = 0;
}

std::span<const GameId> Arena::options(GameId g, Side side) const {
  const Node& node = nodes_[g.value];
  if (side == Side::left) return {pool_.data() + node.offset, node.left_count};
  return {pool_.data() + node.offset + node.left_count, node.right_count};
}

std::vector<GameId> Arena::copy_options(GameId g, Side side) const {
  auto span = options(g, side);
  return {span.begin(), span.end()};
}

std::uint64_t Arena::node_hash(std::span<const GameId> left,
                               std::span<const GameId> right) const {
  std::uint64_t h = mix(left.size() * 0x100000001ULL + right.size());
  for (GameId g : left) h = mix(h ^ g.value);
  h = mix(h ^ 0xabcdef12345ULL);
  for (GameId g : right) h = mix(h ^ g.value);
  return h;
}

bool Arena::node_equals(std::uint32_t index, std::span<const GameId> left,
                        std::span<const GameId> right) const {
  GameId id{index};
  auto l = options(id, Side::left);
  auto r = options(id, Side::right);
  return std::equal(l.begin(), l.end(), left.begin(), left.end()) &&
         std::equal(r.begin(), r.end(), right.begin(), right.end());
}

void Arena::grow_table() {
  std::vector<std::uint32_t> bigger(table_.size() * 2, kEmptySlot);
  const std::size_t mask = bigger.size() - 1;
  for (std::uint32_t index = 0; index < nodes_.size(); ++index) {
    std::size_t slot = hashes_[index] & mask;
    while (bigger[slot] != kEmptySlot) slot = (slot + 1) & mask;
    bigger[slot] = index;
  }
  table_ = std::move(bigger);
}

GameId Arena::intern(std::vector<GameId>& left, std::vector<GameId>& right) {
  canonicalize(left);
  canonicalize(right);
  const std::uint64_t h = node_hash(left, right);
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = h & mask;
  while (table_[slot] != kEmptySlot) {
    const std::uint32_t index = table_[slot];
    if (hashes_[index] == h && node_equals(index, left, right)) return GameId{index};
    slot = (slot + 1) & mask;
  }
  if (nodes_.size() >= limits_.max_nodes) {
    throw BudgetExceeded("arena node budget of " + std::to_string(limits_.max_nodes) +
                         " exceeded");
  }
  const auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{static_cast<std::uint32_t>(pool_.size()),
                        static_cast<std::uint32_t>(left.size()),
                        static_cast<std::uint32_t>(right.size())});
  pool_.insert(pool_.end(), left.begin(), left.end());
  pool_.insert(pool_.end(), right.begin(), right.end());
  hashes_.push_back(h);
  negation_.push_back(kUnknown);
  birthday_.push_back(-1);
  dicotic_.push_back(-1);
  table_[slot] = index;
  if (nodes_.size() * 2 > table_.size()) grow_table();
  return GameId{index};
}

GameId Arena::make(std::span<const GameId> left, std::span<const GameId> right) {
  std::vector<GameId> l(left.begin(), left.end());
  std::vector<GameId> r(right.begin(), right.end());
  return intern(l, r);
}

GameId Arena::star() {
  const GameId z[] = {zero()};
  return make(z, z);
}

GameId Arena::natural(std::int64_t n) {
  if (n > limits_.max_integer) {
    throw BudgetExceeded("integer " + std::to_string(n) + " exceeds the configured cap of " +
                         std::to_string(limits_.max_integer));
  }
  if (naturals_.empty()) naturals_.push_back(zero());
  // Build n and -n together as chains so that large integers never recurse.
  while (static_cast<std::int64_t>(naturals_.size()) <= n) {
    const GameId previous = naturals_.back();
    const GameId previous_negative{negation_[previous.value] == kUnknown
                                       ? previous.value
                                       : negation_[previous.value]};
    std::vector<GameId> one{previous};
    std::vector<GameId> none;
    const GameId positive = intern(one, none);
    std::vector<GameId> one_negative{previous_negative};
    std::vector<GameId> none2;
    const GameId negative = intern(none2, one_negative);
    negation_[positive.value] = negative.value;
    negation_[negative.value] = positive.value;
    naturals_.push_back(positive);
  }
  return naturals_[static_cast<std::size_t>(n)];
}

GameId Arena::integer(std::int64_t n) {
  if (n >= 0) return natural(n);
  if (n == std::numeric_limits<std::int64_t>::min()) {
    throw BudgetExceeded("integer out of range");
  }
  return GameId{negation_[natural(-n).value]};
}

GameId Arena::dyadic(const Dyadic& x) {
  if (x.is_integer()) {
    if (abs(x.numerator()) > limits_.max_integer) {
      throw BudgetExceeded("integer " + x.to_string() + " exceeds the configured cap");
    }
    return integer(static_cast<std::int64_t>(x.numerator()));
  }
  if (x.sign() < 0) return negate(dyadic(-x));
  return build_dyadic(x);
}

GameId Arena::build_dyadic(const Dyadic& x) {
  auto key = std::make_pair(x.numerator(), x.exponent());
  if (auto it = dyadic_memo_.find(key); it != dyadic_memo_.end()) return it->second;
  // {(m-1)/2^n | (m+1)/2^n} for odd m, n >= 1.
  const GameId lower = dyadic(Dyadic(x.numerator() - 1, x.exponent()));
  const GameId upper = dyadic(Dyadic(x.numerator() + 1, x.exponent()));
  const GameId l[] = {lower};
  const GameId r[] = {upper};
  const GameId result = make(l, r);
  dyadic_memo_.emplace(std::move(key), result);
  return result;
}

GameId Arena::up(int k) {
  if (k < 1) throw FormError("up-kth needs k >= 1");
  if (ups_.size() > static_cast<std::size_t>(k) && ups_[k] != GameId{0}) return ups_[k];
  std::vector<GameId> parts{star()};
  for (int i = 1; i < k; ++i) parts.push_back(down(i));
  const GameId l[] = {zero()};
  const GameId r[] = {sum(parts)};
  const GameId result = make(l, r);
  if (ups_.size() <= static_cast<std::size_t>(k)) ups_.resize(k + 1, GameId{0});
  ups_[k] = result;
  return result;
}

GameId Arena::down(int k) {
  if (k < 1) throw FormError("down-kth needs k >= 1");
  if (downs_.size() > static_cast<std::size_t>(k) && downs_[k] != GameId{0}) return downs_[k];
  std::vector<GameId> parts{star()};
  for (int i = 1; i < k; ++i) parts.push_back(up(i));
  const GameId l[] = {sum(parts)};
  const GameId r[] = {zero()};
  const GameId result = make(l, r);
  if (downs_.size() <= static_cast<std::size_t>(k)) downs_.resize(k + 1, GameId{0});
  downs_[k] = result;
  return result;
}

GameId Arena::negate(GameId g) {
  if (negation_[g.value] != kUnknown) return GameId{negation_[g.value]};
  std::vector<GameId> left;
  std::vector<GameId> right;
  for (GameId x : copy_options(g, Side::right)) left.push_back(negate(x));
  for (GameId x : copy_options(g, Side::left)) right.push_back(negate(x));
  const GameId result = intern(left, right);
  negation_[g.value] = result.value;
  negation_[result.value] = g.value;
  if (auto parts = summands(g); parts && !summands_.contains(result.value)) {
    const GameId a = negate(parts->first);
    const GameId b = negate(parts->second);
    summands_.emplace(result.value, std::make_pair(a, b));
  }
  return result;
}

std::optional<GameId> Arena::known_negation(GameId g) const {
  if (negation_[g.value] == kUnknown) return std::nullopt;
  return GameId{negation_[g.value]};
}

GameId Arena::sum(GameId g, GameId h) {
  if (h < g) std::swap(g, h);
  const std::uint64_t key = pair_key(g, h);
  if (auto it = sum_memo_.find(key); it != sum_memo_.end()) return it->second;
  std::vector<GameId> left;
  std::vector<GameId> right;
  const auto gl = copy_options(g, Side::left);
  const auto gr = copy_options(g, Side::right);
  const auto hl = copy_options(h, Side::left);
  const auto hr = copy_options(h, Side::right);
  for (GameId x : gl) left.push_back(sum(x, h));
  for (GameId y : hl) left.push_back(sum(g, y));
  for (GameId x : gr) right.push_back(sum(x, h));
  for (GameId y : hr) right.push_back(sum(g, y));
  const GameId result = intern(left, right);
  sum_memo_.emplace(key, result);
  if (g != zero() && h != zero() && !summands_.contains(result.value)) {
    summands_.emplace(result.value, std::make_pair(g, h));
  }
  return result;
}

GameId Arena::sum(std::span<const GameId> games) {
  GameId acc = zero();
  for (GameId g : games) acc = sum(acc, g);
  return acc;
}

GameId Arena::seq(GameId g, GameId h) {
  const std::uint64_t key = pair_key(g, h);
  if (auto it = seq_memo_.find(key); it != seq_memo_.end()) return it->second;
  std::vector<GameId> left;
  std::vector<GameId> right;
  const auto gl = copy_options(g, Side::left);
  const auto gr = copy_options(g, Side::right);
  if (gl.empty()) {
    left = copy_options(h, Side::left);
  } else {
    for (GameId x : gl) left.push_back(seq(x, h));
  }
  if (gr.empty()) {
    right = copy_options(h, Side::right);
  } else {
    for (GameId x : gr) right.push_back(seq(x, h));
  }
  const GameId result = intern(left, right);
  seq_memo_.emplace(key, result);
  return result;
}

GameId Arena::seq(std::span<const GameId> games) {
  GameId acc = zero();
  for (auto it = games.rbegin(); it != games.rend(); ++it) acc = seq(*it, acc);
  return acc;
}

int Arena::birthday(GameId g) {
  if (birthday_[g.value] >= 0) return birthday_[g.value];
  int best = -1;
  for (GameId x : copy_options(g, Side::left)) best = std::max(best, birthday(x));
  for (GameId x : copy_options(g, Side::right)) best = std::max(best, birthday(x));
  birthday_[g.value] = best + 1;
  return best + 1;
}

bool Arena::is_dicotic(GameId g) {
  if (dicotic_[g.value] >= 0) return dicotic_[g.value] == 1;
  bool result = true;
  if (g != zero()) {
    const auto l = copy_options(g, Side::left);
    const auto r = copy_options(g, Side::right);
    result = !l.empty() && !r.empty();
    for (GameId x : l) result = result && is_dicotic(x);
    for (GameId x : r) result = result && is_dicotic(x);
  }
  dicotic_[g.value] = result ? 1 : 0;
  return result;
}

std::optional<std::pair<GameId, GameId>> Arena::summands(GameId g) const {
  if (auto it = summands_.find(g.value); it != summands_.end()) return it->second;
  return std::nullopt;
}

void Arena::flatten_into(GameId g, std::vector<GameId>& out) const {
  if (g == zero()) return;
  if (auto it = summands_.find(g.value); it != summands_.end()) {
    flatten_into(it->second.first, out);
    flatten_into(it->second.second, out);
    return;
  }
  out.push_back(g);
}

std::string Arena::to_string(GameId g) const {
  std::unordered_map<std::uint32_t, std::string> memo;
  std::function<const std::string&(GameId)> render = [&](GameId x) -> const std::string& {
    if (auto it = memo.find(x.value); it != memo.end()) return it->second;
    std::string out = "{";
    bool first = true;
    for (GameId o : options(x, Side::left)) {
      if (!first) out += ',';
      out += render(o);
      first = false;
    }
    out += '|';
    first = true;
    for (GameId o : options(x, Side::right)) {
      if (!first) out += ',';
      out += render(o);
      first = false;
    }
    out += '}';
    return memo.emplace(x.value, std::move(out)).first->second;
  };
  return render(g);
}

GameId Arena::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "'");
    }
    ++pos;
  };
  std::function<GameId()> game = [&]() -> GameId {
    expect('{');
    std::vector<GameId> sides[2];
    for (int side = 0; side < 2; ++side) {
      skip();
      const char close = side == 0 ? '|' : '}';
      if (pos < text.size() && text[pos] == close) {
        ++pos;
        continue;
      }
      while (true) {
        sides[side].push_back(game());
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        expect(close);
        break;
      }
    }
    return intern(sides[0], sides[1]);
  };
  const GameId result = game();
  skip();
  if (pos != text.size()) throw ParseError(pos, "trailing input");
  return result;
}

}  // namespace seqgame
