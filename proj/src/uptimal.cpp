#include "seqgame/uptimal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace seqgame {

UptimalValue UptimalValue::from_down(int star, std::vector<std::int64_t> d, Dyadic x) {
  UptimalValue u;
  u.x = std::move(x);
  u.star = star;
  u.b = std::move(d);
  for (auto& v : u.b) v = -v;
  u.normalize();
  return u;
}

UptimalValue UptimalValue::of_dyadic(Dyadic x) {
  UptimalValue u;
  u.x = std::move(x);
  return u;
}

std::vector<std::int64_t> UptimalValue::down() const {
  std::vector<std::int64_t> d(b);
  for (auto& v : d) v = -v;
  return d;
}

std::int64_t UptimalValue::up_coefficient(std::size_t i) const {
  return i >= 1 && i <= b.size() ? b[i - 1] : 0;
}

void UptimalValue::normalize() {
  star = ((star % 2) + 2) % 2;
  while (!b.empty() && b.back() == 0) b.pop_back();
}

UptimalValue uptimal_add(const UptimalValue& u, const UptimalValue& v) {
  UptimalValue w;
  w.x = u.x + v.x;
  w.star = u.star + v.star;
  w.b.assign(std::max(u.b.size(), v.b.size()), 0);
  for (std::size_t i = 0; i < u.b.size(); ++i) w.b[i] += u.b[i];
  for (std::size_t i = 0; i < v.b.size(); ++i) w.b[i] += v.b[i];
  w.normalize();
  return w;
}

UptimalValue uptimal_negate(const UptimalValue& u) {
  UptimalValue w = u;
  w.x = -u.x;
  for (auto& v : w.b) v = -v;
  return w;
}

SumPosition uptimal_to_position(Arena& arena, const UptimalValue& u) {
  SumPosition position;
  if (!u.x.is_zero()) position.push_back(arena.dyadic(u.x));
  if (u.star != 0) position.push_back(arena.star());
  for (std::size_t i = 0; i < u.b.size(); ++i) {
    const int k = static_cast<int>(i + 1);
    const GameId atom = u.b[i] > 0 ? arena.up(k) : arena.down(k);
    for (std::int64_t n = 0; n < std::abs(u.b[i]); ++n) position.push_back(atom);
  }
  return position;
}

GameId uptimal_to_game(Arena& arena, const UptimalValue& u) {
  return arena.sum(uptimal_to_position(arena, u));
}

std::optional<Comparison> uptimal_sign_fast(const UptimalValue& u) {
  if (!u.x.is_zero()) return u.x.sign() > 0 ? Comparison::gt : Comparison::lt;
  if (u.infinitesimal_is_zero()) return Comparison::eq;
  if (u.b.empty()) return Comparison::confused;  // lone star
  const bool all_up = std::all_of(u.b.begin(), u.b.end(), [](auto v) { return v >= 0; });
  const bool all_down = std::all_of(u.b.begin(), u.b.end(), [](auto v) { return v <= 0; });
  if (!all_up && !all_down) return std::nullopt;
  const Comparison sign = all_up ? Comparison::gt : Comparison::lt;
  if (u.star == 0) return sign;
  // up + up + * > 0, and every further term only pushes the same way.
  if (std::abs(u.b[0]) >= 2) return sign;
  return std::nullopt;
}

Comparison uptimal_sign(Solver& solver, const UptimalValue& u) {
  if (auto fast = uptimal_sign_fast(u)) return *fast;
  return outcome_to_sign(solver.sum_outcome(uptimal_to_position(solver.arena(), u)));
}

std::size_t deg_of(const UptimalValue& u) {
  if (!u.x.is_zero()) throw FormError("deg is only defined on infinitesimal values");
  for (auto v : u.b) {
    if (v > 0) throw FormError("deg needs every down-coefficient to be non-negative");
  }
  return u.b.size();
}

namespace {

class ValueParser {
 public:
  explicit ValueParser(std::string_view text) : text_(text) {}

  UptimalValue parse() {
    UptimalValue total;
    skip();
    total = term();
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') throw ParseError(pos_, "expected '+' or '-'");
      ++pos_;
      skip();
      UptimalValue next = term();
      total = op == '+' ? total + next : total - next;
    }
    return total;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  UptimalValue term() {
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return UptimalValue::of_star();
    }
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t number_start = pos_;
    const std::string whole = digits();
    if (whole.empty()) throw ParseError(start, "expected a number, an uptimal or '*'");
    UptimalValue u;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      if (whole != "0") throw ParseError(number_start, "uptimal digits must follow '0.'");
      ++pos_;
      const std::size_t digit_start = pos_;
      const std::string d = digits();
      if (d.empty()) throw ParseError(digit_start, "expected a digit after '0.'");
      for (char c : d) u.b.push_back(c - '0');
    } else {
      BigInt numerator(whole);
      std::size_t exponent = 0;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t denominator_start = pos_;
        const std::string den = digits();
        if (den.empty()) throw ParseError(denominator_start, "expected a denominator");
        BigInt denominator(den);
        if (denominator == 0 || (denominator & (denominator - 1)) != 0) {
          throw ParseError(denominator_start, "denominator must be a power of two");
        }
        exponent = static_cast<std::size_t>(boost::multiprecision::lsb(denominator));
      }
      u.x = Dyadic(numerator, exponent);
    }
    u.normalize();
    return negative ? -u : u;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Splits non-negative coefficients into compact terms with digits 0-9.
std::vector<std::string> digit_terms(std::vector<std::int64_t> rest) {
  std::vector<std::string> terms;
  while (true) {
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    if (rest.empty()) break;
    std::string term = "0.";
    for (auto& v : rest) {
      const std::int64_t digit = std::min<std::int64_t>(v, 9);
      term += static_cast<char>('0' + digit);
      v -= digit;
    }
    terms.push_back(term);
  }
  return terms;
}

}  // namespace

UptimalValue parse_uptimal(std::string_view text) { return ValueParser(text).parse(); }

std::string format_uptimal(const UptimalValue& u) {
  std::vector<std::int64_t> positive;
  std::vector<std::int64_t> negative;
  for (auto v : u.b) {
    positive.push_back(std::max<std::int64_t>(v, 0));
    negative.push_back(std::max<std::int64_t>(-v, 0));
  }
  std::string out;
  auto emit = [&out](bool minus, const std::string& term) {
    if (out.empty()) {
      out = minus ? "-" + term : term;
    } else {
      out += minus ? " - " : " + ";
      out += term;
    }
  };
  for (const auto& t : digit_terms(positive)) emit(false, t);
  for (const auto& t : digit_terms(negative)) emit(true, t);
  if (u.star != 0) emit(false, "*");
  if (!u.x.is_zero()) {
    if (out.empty()) {
      out = u.x.to_string();
    } else {
      emit(u.x.sign() < 0, (u.x.sign() < 0 ? -u.x : u.x).to_string());
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace seqgame
