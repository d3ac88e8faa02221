#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratwitt/elem.hpp"
#include "ratwitt/error.hpp"

namespace ratwitt {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// An exact commutative unital ring with decidable equality. Elements are
// plain `Elem` values; every operation goes through the owning ring.
//
// Rings are immutable after construction and safe to share between threads.
// Two rings are the same ring iff their descriptors agree.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  // Canonical descriptor, e.g. "ZZ", "Zmod/6", "GF/4=x^2+x+1", "Dual(GF/2)".
  virtual std::string descriptor() const = 0;

  virtual Elem zero() const { return from_int(0); }
  virtual Elem one() const { return from_int(1); }
  virtual Elem from_int(const mpz_class& n) const = 0;
  Elem from_int(long n) const { return from_int(mpz_class(n)); }

  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem neg(const Elem& a) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  virtual Elem mul_int(const Elem& a, const mpz_class& n) const { return mul(a, from_int(n)); }
  // a <- a + b and a <- a - b without a fresh allocation where the ring allows it.
  virtual void add_assign(Elem& a, const Elem& b) const { a = add(a, b); }
  virtual void sub_assign(Elem& a, const Elem& b) const { a = sub(a, b); }
  // a <- a + n*b.
  virtual void addmul_int(Elem& a, const Elem& b, const mpz_class& n) const { add_assign(a, mul_int(b, n)); }

  virtual bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return eq(a, zero()); }
  bool is_one(const Elem& a) const { return eq(a, one()); }

  // Inverse of a unit, nullopt for non-units.
  virtual std::optional<Elem> inverse(const Elem& a) const = 0;
  // The c with b*c = a when it exists and is unique; nullopt otherwise.
  virtual std::optional<Elem> divide_exact(const Elem& a, const Elem& b) const;

  // Structure flags.
  virtual bool is_field() const { return false; }
  virtual bool is_domain() const { return is_field(); }
  virtual bool is_torsion_free() const { return false; }
  virtual bool has_gcd() const { return is_field(); }
  // Completely integrally closed domain: reduced representatives of rational
  // series with coefficients in the ring have coefficients in the ring.
  virtual bool is_strong_fatou() const { return false; }
  virtual mpz_class characteristic() const = 0;

  // gcd and canonical associates; only meaningful when has_gcd().
  virtual Elem gcd(const Elem& a, const Elem& b) const;
  // The unit u with a = u * (canonical associate of a). Returns one() for 0.
  virtual Elem canonical_unit(const Elem& a) const;

  // Finite rings enumerate their elements in a fixed order.
  virtual std::optional<mpz_class> cardinality() const { return std::nullopt; }
  virtual std::vector<Elem> elements() const;
  virtual Elem random(std::mt19937_64& rng, int size) const = 0;

  virtual std::string format(const Elem& a) const = 0;
  // Named generators usable in literals ("x", "e", ...).
  virtual std::optional<Elem> generator(std::string_view name) const;
  Elem parse(std::string_view text) const;

  // Literals for rings that are proper subrings are evaluated in an ambient
  // ring and then checked for membership.
  virtual RingPtr literal_ring() const { return self(); }
  virtual bool contains(const Elem&) const { return true; }

  // Certificates used for kernel witnesses of the monoid-algebra map.
  virtual std::vector<std::pair<Elem, Elem>> zero_divisor_pairs() const { return {}; }
  virtual std::vector<Elem> nilpotents() const { return {}; }

  // Quotient field for domains; nullptr otherwise. `to_fraction` embeds, and
  // `from_fraction` pulls back when the element lies in this ring.
  virtual RingPtr fraction_field() const;
  virtual Elem to_fraction(const Elem& a) const;
  virtual std::optional<Elem> from_fraction(const Elem& a) const;

  RingPtr self() const { return shared_from_this(); }
  bool same_as(const Ring& other) const { return this == &other || descriptor() == other.descriptor(); }

  Elem pow(const Elem& a, const mpz_class& n) const;
  Elem pow(const Elem& a, unsigned long n) const { return pow(a, mpz_class(n)); }
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a->same_as(*b); }
void require_same_ring(const RingPtr& a, const RingPtr& b);

// Factories. All rings are created through these and returned as shared
// handles.
RingPtr integers();
RingPtr rationals();
RingPtr integers_mod(const mpz_class& n);
// GF(p^k). `modulus` lists the coefficients of a monic irreducible polynomial
// of degree k over GF(p), lowest degree first. When absent a shipped default
// table entry (p <= 7, k <= 4) or the first irreducible found by search is used.
RingPtr finite_field(unsigned long p, unsigned k, std::optional<std::vector<unsigned long>> modulus = std::nullopt);
RingPtr dual_numbers(RingPtr base);
RingPtr poly_ring(RingPtr base, std::string variable);
// k + x*k[x,y] inside k[x,y]; k must be a field.
RingPtr monomial_subring(RingPtr field);
// Quot(base) for gcd domains. integers() maps to rationals().
RingPtr fraction_field_of(RingPtr base);

// Parse a ring descriptor: ZZ, QQ, Zmod/6, GF/2, GF/4, GF/4=x^2+x+1,
// Dual(R), MonSub(R), Frac(R), R[x].
RingPtr parse_ring(std::string_view text);

// Ring-specific extras.
class FiniteFieldRing;
const FiniteFieldRing* as_finite_field(const Ring& r);

class FiniteFieldRing : public Ring {
 public:
  virtual unsigned long prime() const = 0;
  virtual unsigned degree() const = 0;
  virtual const std::vector<unsigned long>& modulus() const = 0;
  // Coefficients mod p of an element, lowest first, length degree().
  virtual std::vector<unsigned long> coordinates(const Elem& a) const = 0;
  virtual Elem from_coordinates(const std::vector<unsigned long>& c) const = 0;
  // a -> a^p
  Elem frobenius(const Elem& a) const { return pow(a, prime()); }
  mpz_class order() const;
};

// Dual numbers expose the reduction A -> A/(e) and the base ring.
class DualRing;
const DualRing* as_dual(const Ring& r);
class DualRing : public Ring {
 public:
  virtual RingPtr base() const = 0;
  virtual Elem real_part(const Elem& a) const = 0;
  virtual Elem make(const Elem& a, const Elem& b) const = 0;
};

class PolyRingBase;
const PolyRingBase* as_poly_ring(const Ring& r);
class PolyRingBase : public Ring {
 public:
  virtual RingPtr base() const = 0;
  virtual const std::string& variable() const = 0;
};

class MonomialSubringBase;
const MonomialSubringBase* as_monomial_subring(const Ring& r);
class MonomialSubringBase : public Ring {
 public:
  virtual RingPtr field() const = 0;
  // The ambient k[x][y].
  virtual RingPtr ambient() const = 0;
  // True iff every non-constant monomial of p (an element of k[x][y]) is
  // divisible by x.
  virtual bool member(const Elem& p) const = 0;
};

class FractionFieldBase;
const FractionFieldBase* as_fraction_field(const Ring& r);
class FractionFieldBase : public Ring {
 public:
  virtual RingPtr base() const = 0;
  virtual Elem numerator(const Elem& a) const = 0;
  virtual Elem denominator(const Elem& a) const = 0;
  virtual Elem make_fraction(const Elem& num, const Elem& den) const = 0;
};

bool is_prime(unsigned long n);

// Checks associativity, commutativity, distributivity and the identities on
// all sample triples. Needs at least three samples.
struct AxiomReport {
  bool pass = true;
  std::string counterexample;  // first failing law with its operands
};
AxiomReport ring_axiom_suite(const Ring& ring, const std::vector<Elem>& samples);

}  // namespace ratwitt
