#include "seqgame/expr.hpp"

#include <cctype>
#include <charconv>

#include "seqgame/errors.hpp"

namespace seqgame {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("expected one of: '+', '->', end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  static Expr chain(Expr::Kind kind, std::vector<Expr> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    Expr e;
    e.kind = kind;
    e.offset = parts.front().offset;
    // Flatten nested chains of the same operator; both are associative.
    for (Expr& p : parts) {
      if (p.kind == kind) {
        for (Expr& c : p.children) e.children.push_back(std::move(c));
      } else {
        e.children.push_back(std::move(p));
      }
    }
    return e;
  }

  Expr expr() {
    std::vector<Expr> terms{sumterm()};
    while (accept("+")) terms.push_back(sumterm());
    return chain(Expr::Kind::sum, std::move(terms));
  }

  Expr sumterm() {
    std::vector<Expr> atoms{atom()};
    while (accept("->")) atoms.push_back(atom());
    return chain(Expr::Kind::seq, std::move(atoms));
  }

  Expr atom() {
    skip_space();
    const std::size_t start = pos_;
    if (accept("*")) {
      Expr e;
      e.kind = Expr::Kind::star;
      e.offset = start;
      return e;
    }
    if (accept("(")) {
      Expr inner = expr();
      if (!accept(")")) fail("expected one of: ')', '+', '->'");
      inner.offset = start;
      return inner;
    }
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == digits) fail("expected one of: INT, '*', '('");
    Expr e;
    e.kind = Expr::Kind::integer;
    e.offset = start;
    const char* first = text_.data() + start;
    if (*first == '-') ++first;
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, e.value);
    if (ec != std::errc()) fail("integer out of range");
    (void)ptr;
    if (text_[start] == '-') e.value = -e.value;
    pos_ = end;
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool collect(const Expr& e, CompSeq& out) {
  switch (e.kind) {
    case Expr::Kind::integer:
      out.push_back(Component::integer(e.value));
      return true;
    case Expr::Kind::star:
      out.push_back(Component::star());
      return true;
    case Expr::Kind::seq:
      for (const Expr& c : e.children) {
        if (!collect(c, out)) return false;
      }
      return true;
    case Expr::Kind::sum:
      return false;
  }
  return false;
}

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::vector<const Expr*> sum_terms(const Expr& e) {
  std::vector<const Expr*> out;
  if (e.kind == Expr::Kind::sum) {
    for (const Expr& c : e.children) out.push_back(&c);
  } else {
    out.push_back(&e);
  }
  return out;
}

std::optional<CompSeq> as_compseq(const Expr& e) {
  CompSeq out;
  if (!collect(e, out)) return std::nullopt;
  return out;
}

GameId build_game(Arena& arena, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer:
      return arena.integer(e.value);
    case Expr::Kind::star:
      return arena.star();
    case Expr::Kind::seq:
    case Expr::Kind::sum: {
      std::vector<GameId> parts;
      for (const Expr& c : e.children) parts.push_back(build_game(arena, c));
      return e.kind == Expr::Kind::seq ? arena.seq(parts) : arena.sum(parts);
    }
  }
  return arena.zero();
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer:
      return e.value < 0 ? "(" + std::to_string(e.value) + ")" : std::to_string(e.value);
    case Expr::Kind::star:
      return "*";
    case Expr::Kind::seq:
    case Expr::Kind::sum: {
      const char* op = e.kind == Expr::Kind::seq ? " -> " : " + ";
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        if (i > 0) out += op;
        const bool wrap = c.kind == Expr::Kind::sum ||
                          (c.kind == Expr::Kind::seq && e.kind == Expr::Kind::seq);
        out += wrap ? "(" + to_string(c) + ")" : to_string(c);
      }
      return out;
    }
  }
  return {};
}

}  // namespace seqgame
