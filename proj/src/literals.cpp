#include "ratwitt/literals.hpp"

#include "ratwitt/expr.hpp"

namespace ratwitt {
namespace {

using Frac = std::pair<Poly, Poly>;

Frac eval_t(const Expr& e, const RingPtr& r) {
  auto constant = [&](Elem c) { return Frac{Poly::constant(r, std::move(c)), Poly::constant(r, r->one())}; };
  switch (e.kind) {
    case Expr::Kind::Number:
      return constant(r->from_int(mpz_class(e.text)));
    case Expr::Kind::Symbol: {
      if (e.text == "T") return {Poly::monomial(r, r->one(), 1), Poly::constant(r, r->one())};
      auto g = r->generator(e.text);
      if (!g) throw ParseError("unknown symbol '" + e.text + "' for ring " + r->descriptor(), e.position);
      return constant(*g);
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Frac a = eval_t(*e.lhs, r), b = eval_t(*e.rhs, r);
      bool add = e.kind == Expr::Kind::Add;
      if (a.second == b.second) return {add ? a.first + b.first : a.first - b.first, a.second};
      Poly x = a.first * b.second, y = b.first * a.second;
      return {add ? x + y : x - y, a.second * b.second};
    }
    case Expr::Kind::Mul: {
      Frac a = eval_t(*e.lhs, r), b = eval_t(*e.rhs, r);
      return {a.first * b.first, a.second * b.second};
    }
    case Expr::Kind::Div: {
      Frac a = eval_t(*e.lhs, r), b = eval_t(*e.rhs, r);
      if (b.first.is_zero()) throw ParseError("division by zero", e.position);
      return {a.first * b.second, a.second * b.first};
    }
    case Expr::Kind::Neg: {
      Frac a = eval_t(*e.lhs, r);
      return {-a.first, a.second};
    }
    case Expr::Kind::Pow: {
      Frac a = eval_t(*e.lhs, r);
      long n = e.exponent;
      if (n < 0) {
        if (a.first.is_zero()) throw ParseError("negative power of zero", e.position);
        std::swap(a.first, a.second);
        n = -n;
      }
      Frac out{Poly::constant(r, r->one()), Poly::constant(r, r->one())};
      for (long i = 0; i < n; ++i) out = {out.first * a.first, out.second * a.second};
      return out;
    }
  }
  throw InternalError("unreachable expression kind");
}

}  // namespace

std::pair<Poly, Poly> normalize_constant_terms(Poly p, Poly q) {
  const RingPtr& r = q.ring();
  auto inv = r->inverse(q.coeff(0));
  if (!inv) throw ParseError("denominator constant term " + r->format(q.coeff(0)) + " is not a unit", 0);
  if (!r->is_one(*inv)) {
    p = p.scaled(*inv);
    q = q.scaled(*inv);
  }
  if (!r->is_one(p.coeff(0))) throw ParseError("constant term must be 1, got " + r->format(p.coeff(0)), 0);
  return {std::move(p), std::move(q)};
}

std::pair<Poly, Poly> parse_t_fraction(const RingPtr& ring, std::string_view text) {
  auto expr = parse_expr(text);
  RingPtr lit = ring->literal_ring();
  auto [p, q] = eval_t(*expr, lit);
  auto [pn, qn] = normalize_constant_terms(std::move(p), std::move(q));
  for (const Poly* poly : {&pn, &qn})
    for (const auto& c : poly->coefficients())
      if (!ring->contains(c)) throw ParseError("coefficient " + lit->format(c) + " is not in " + ring->descriptor(), 0);
  return {Poly(ring, pn.coefficients()), Poly(ring, qn.coefficients())};
}

}  // namespace ratwitt
