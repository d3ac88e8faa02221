#include "ratwitt/expr.hpp"

#include <cctype>

namespace ratwitt {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Expr> parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    auto e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> l,
                                    std::unique_ptr<Expr> r = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = pos;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept('+')) {
        lhs = node(Expr::Kind::Add, at, std::move(lhs), parse_product());
      } else if (accept('-')) {
        lhs = node(Expr::Kind::Sub, at, std::move(lhs), parse_product());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept('*')) {
        lhs = node(Expr::Kind::Mul, at, std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = node(Expr::Kind::Div, at, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> parse_unary() {
    skip_space();
    std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::Neg, at, parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  std::unique_ptr<Expr> parse_power() {
    auto base = parse_atom();
    skip_space();
    std::size_t at = pos_;
    if (accept('^')) {
      skip_space();
      bool negative = accept('-');
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      if (pos_ - start > 9) throw ParseError("exponent too large", start);
      auto e = node(Expr::Kind::Pow, at, std::move(base));
      e->exponent = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (negative) e->exponent = -e->exponent;
      return e;
    }
    return base;
  }

  std::unique_ptr<Expr> parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Number;
      e->text = std::string(text_.substr(start, pos_ - start));
      e->position = start;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Symbol;
      e->text = std::string(text_.substr(start, pos_ - start));
      e->position = start;
      return e;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

std::unique_ptr<Expr> parse_expr(std::string_view text) { return Parser(text).parse(); }

bool expr_mentions(const Expr& e, std::string_view symbol) {
  if (e.kind == Expr::Kind::Symbol) return e.text == symbol;
  return (e.lhs && expr_mentions(*e.lhs, symbol)) || (e.rhs && expr_mentions(*e.rhs, symbol));
}

Elem eval_in_ring(const Expr& e, const Ring& ring) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return ring.from_int(mpz_class(e.text));
    case Expr::Kind::Symbol: {
      auto g = ring.generator(e.text);
      if (!g) throw ParseError("unknown symbol '" + e.text + "' for ring " + ring.descriptor(), e.position);
      return *g;
    }
    case Expr::Kind::Add:
      return ring.add(eval_in_ring(*e.lhs, ring), eval_in_ring(*e.rhs, ring));
    case Expr::Kind::Sub:
      return ring.sub(eval_in_ring(*e.lhs, ring), eval_in_ring(*e.rhs, ring));
    case Expr::Kind::Mul:
      return ring.mul(eval_in_ring(*e.lhs, ring), eval_in_ring(*e.rhs, ring));
    case Expr::Kind::Neg:
      return ring.neg(eval_in_ring(*e.lhs, ring));
    case Expr::Kind::Div: {
      auto q = ring.divide_exact(eval_in_ring(*e.lhs, ring), eval_in_ring(*e.rhs, ring));
      if (!q) throw ParseError("division is not exact in " + ring.descriptor(), e.position);
      return *q;
    }
    case Expr::Kind::Pow: {
      Elem b = eval_in_ring(*e.lhs, ring);
      if (e.exponent >= 0) return ring.pow(b, static_cast<unsigned long>(e.exponent));
      auto inv = ring.inverse(b);
      if (!inv) throw ParseError("negative power of a non-unit", e.position);
      return ring.pow(*inv, static_cast<unsigned long>(-e.exponent));
    }
  }
  throw InternalError("unreachable expression kind");
}

}  // namespace ratwitt
