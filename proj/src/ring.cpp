#include "ratwitt/ring.hpp"

#include "ratwitt/expr.hpp"

namespace ratwitt {

std::optional<Elem> Ring::divide_exact(const Elem& a, const Elem& b) const {
  if (auto inv = inverse(b)) return mul(a, *inv);
  if (is_zero(a) && !is_zero(b) && is_domain()) return zero();
  return std::nullopt;
}

Elem Ring::gcd(const Elem& a, const Elem& b) const {
  if (!is_field()) throw DomainError("no gcd available in " + descriptor());
  return is_zero(a) && is_zero(b) ? zero() : one();
}

Elem Ring::canonical_unit(const Elem& a) const {
  if (is_field() && !is_zero(a)) return a;
  return one();
}

std::vector<Elem> Ring::elements() const { throw DomainError(descriptor() + " is not finite"); }

std::optional<Elem> Ring::generator(std::string_view) const { return std::nullopt; }

Elem Ring::parse(std::string_view text) const {
  auto expr = parse_expr(text);
  if (expr_mentions(*expr, "T")) throw ParseError("ring element literal may not mention T", 0);
  RingPtr lit = literal_ring();
  Elem value = eval_in_ring(*expr, *lit);
  if (!contains(value)) throw ParseError("'" + std::string(text) + "' is not an element of " + descriptor(), 0);
  return value;
}

RingPtr Ring::fraction_field() const {
  if (is_field()) return self();
  return nullptr;
}

Elem Ring::to_fraction(const Elem& a) const {
  if (is_field()) return a;
  throw DomainError(descriptor() + " has no fraction field");
}

std::optional<Elem> Ring::from_fraction(const Elem& a) const {
  if (is_field()) return a;
  throw DomainError(descriptor() + " has no fraction field");
}

Elem Ring::pow(const Elem& a, const mpz_class& n) const {
  if (n < 0) throw DomainError("negative exponent");
  Elem result = one();
  Elem base = a;
  mpz_class e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("ring mismatch: " + a->descriptor() + " vs " + b->descriptor());
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

AxiomReport ring_axiom_suite(const Ring& r, const std::vector<Elem>& s) {
  if (s.size() < 3) throw DomainError("ring_axiom_suite needs at least three samples");
  AxiomReport rep;
  auto fail = [&](const char* law, std::initializer_list<const Elem*> xs) {
    rep.pass = false;
    rep.counterexample = law;
    for (const Elem* x : xs) rep.counterexample += " " + r.format(*x);
  };
  for (const auto& a : s) {
    if (!r.eq(r.add(a, r.zero()), a)) return fail("additive identity", {&a}), rep;
    if (!r.eq(r.mul(a, r.one()), a)) return fail("multiplicative identity", {&a}), rep;
    if (!r.is_zero(r.add(a, r.neg(a)))) return fail("additive inverse", {&a}), rep;
    for (const auto& b : s) {
      if (!r.eq(r.add(a, b), r.add(b, a))) return fail("additive commutativity", {&a, &b}), rep;
      if (!r.eq(r.mul(a, b), r.mul(b, a))) return fail("multiplicative commutativity", {&a, &b}), rep;
      for (const auto& c : s) {
        if (!r.eq(r.add(r.add(a, b), c), r.add(a, r.add(b, c))))
          return fail("additive associativity", {&a, &b, &c}), rep;
        if (!r.eq(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))))
          return fail("multiplicative associativity", {&a, &b, &c}), rep;
        if (!r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))))
          return fail("distributivity", {&a, &b, &c}), rep;
      }
    }
  }
  return rep;
}

mpz_class FiniteFieldRing::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), prime(), degree());
  return q;
}

const FiniteFieldRing* as_finite_field(const Ring& r) { return dynamic_cast<const FiniteFieldRing*>(&r); }
const DualRing* as_dual(const Ring& r) { return dynamic_cast<const DualRing*>(&r); }
const PolyRingBase* as_poly_ring(const Ring& r) { return dynamic_cast<const PolyRingBase*>(&r); }
const MonomialSubringBase* as_monomial_subring(const Ring& r) {
  return dynamic_cast<const MonomialSubringBase*>(&r);
}
const FractionFieldBase* as_fraction_field(const Ring& r) { return dynamic_cast<const FractionFieldBase*>(&r); }

}  // namespace ratwitt
