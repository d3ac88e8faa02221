#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ratwitt/poly.hpp"
#include "ratwitt/wittseries.hpp"

namespace ratwitt {

// Rational Witt vector P/Q with P(0) = Q(0) = 1.
//
// Over a domain A with fraction field K the value is reduced in K[T]. When A
// is strong Fatou the reduced form is cleared back into A[T] and becomes the
// stored presentation; otherwise the A[T] presentation is kept as given next
// to the reduced K[T] form. Over non-domains the presentation is stored
// unreduced.
class RatWitt {
 public:
  // Validates constant terms and canonicalizes.
  static RatWitt make(Poly p, Poly q);
  static RatWitt make(Poly p) { return make(p, Poly::constant(p.ring(), p.ring()->one())); }
  // From a reduced-or-not fraction over K = Frac(ring); the coefficients must
  // pull back to `ring` when it is strong Fatou. Non-strong-Fatou domains
  // need an explicit A[T] presentation, so this throws DomainError there.
  static RatWitt from_fraction_field(const RingPtr& ring, const Poly& pk, const Poly& qk);
  static RatWitt zero(const RingPtr& ring);
  static RatWitt one(const RingPtr& ring);
  static RatWitt teichmuller(const RingPtr& ring, const Elem& a);

  const RingPtr& ring() const { return p_.ring(); }
  // A[T] presentation.
  const Poly& numerator() const { return p_; }
  const Poly& denominator() const { return q_; }
  bool is_reduced() const { return reduced_; }
  // Reduced form in K[T] (domains only).
  const std::optional<std::pair<Poly, Poly>>& reduced_over_fraction_field() const { return reduced_k_; }
  // max(1 + deg P, deg Q) of the reduced form; of the presentation over
  // non-domains, where it is only an upper bound.
  std::size_t bound() const { return bound_; }

  WittSeries to_series(std::size_t n) const;

  // Cross-multiplication P1 Q2 = P2 Q1 in A[T].
  friend bool operator==(const RatWitt& a, const RatWitt& b);
  bool is_witt_zero() const;

 private:
  RatWitt(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {}
  Poly p_, q_;
  bool reduced_ = false;
  std::optional<std::pair<Poly, Poly>> reduced_k_;
  std::size_t bound_ = 1;
};

RatWitt rw_add(const RatWitt& f, const RatWitt& g);
RatWitt rw_neg(const RatWitt& f);
RatWitt rw_sub(const RatWitt& f, const RatWitt& g);
// max(1 + dP dR + dQ dS, dP dS + dQ dR) from the reduced degrees of P/Q
// and R/S. Exceeds n + m in general.
std::size_t rw_mul_bound(const RatWitt& f, const RatWitt& g);
// Series products above this precision are not attempted by rw_mul.
inline constexpr std::size_t kMulSeriesPrecision = 16;
// Domains only. With b = rw_mul_bound: series product at precision 2b,
// reconstruction with bound b, re-expansion check to 2b+2 terms, compared
// with the root pairing form. When 2b+2 exceeds kMulSeriesPrecision the
// root pairing form is returned after agreeing with the series product to
// kMulSeriesPrecision terms.
RatWitt rw_mul(const RatWitt& f, const RatWitt& g);
// Root pairing (P(x)R)(Q(x)S)/((P(x)S)(Q(x)R)) where (P(x)R)(T) is the
// product of (1 - a c T) over roots 1/a of P and 1/c of R, computed as a
// norm over A[T]. Division-free, any ring.
RatWitt rw_mul_root_pairing(const RatWitt& f, const RatWitt& g);
// Domains only: decimated series at precision 2n, reconstruction with bound n.
RatWitt rw_frobenius(const RatWitt& f, unsigned long n);
// F_N of a polynomial with constant term 1, exactly: F_N(P)(T^N) is the norm
// of P(Z) modulo Z^N - T^N. Any ring.
Poly poly_frobenius(const Poly& p, unsigned long n);
// T -> T^N in P and Q; any ring.
RatWitt rw_verschiebung(const RatWitt& f, unsigned long n);

// The product of (1 - a c T) over roots 1/a of p and 1/c of r.
Poly root_pairing(const Poly& p, const Poly& r);

// Localization of Z at the powers of m, with Z[1/m] realized inside QQ.
struct LocalizationWitness {
  RatWitt integral;  // f over ZZ
  unsigned long k;   // [m^k] (.) f~ equals the image of f
};
// Coefficient reinterpretation W_rat(Z) -> W_rat(Z[1/m]).
RatWitt localize(const RatWitt& f);
// Given f~ over QQ whose coefficients lie in Z[1/m], the least k with
// f~(m^k T) integral. Throws DomainError for coefficients outside Z[1/m].
LocalizationWitness localization_preimage(const RatWitt& f_tilde, const mpz_class& m);

// "P/Q" text; "(1-T)/(1-2*T)", or just "P" when Q = 1.
std::string format_ratwitt(const RatWitt& f);
RatWitt parse_ratwitt(const RingPtr& ring, std::string_view text);

}  // namespace ratwitt
