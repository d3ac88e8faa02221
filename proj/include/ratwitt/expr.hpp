#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "ratwitt/ring.hpp"

namespace ratwitt {

// Arithmetic expression over integer literals and named symbols, shared by
// the element, polynomial and rational-function literal grammars.
struct Expr {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  std::string text;  // Number digits or Symbol name
  long exponent = 0;  // Pow
  std::size_t position = 0;
  std::unique_ptr<Expr> lhs, rhs;
};

std::unique_ptr<Expr> parse_expr(std::string_view text);

// Evaluate inside `ring`. Division requires an exact quotient.
Elem eval_in_ring(const Expr& e, const Ring& ring);

bool expr_mentions(const Expr& e, std::string_view symbol);

}  // namespace ratwitt
