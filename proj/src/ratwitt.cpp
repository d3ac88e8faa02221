#include "ratwitt/ratwitt.hpp"

#include <algorithm>

#include "ratwitt/hankel.hpp"
#include "ratwitt/literals.hpp"

namespace ratwitt {

namespace {

RingPtr fraction_field_or_null(const Ring& r) { return r.is_domain() ? r.fraction_field() : nullptr; }

Poly to_field(const Poly& p, const RingPtr& k) {
  const Ring& a = *p.ring();
  return p.mapped(k, [&](const Elem& c) { return a.to_fraction(c); });
}

std::optional<Poly> pull_back(const Poly& pk, const RingPtr& a) {
  std::vector<Elem> out;
  for (const auto& c : pk.coefficients()) {
    auto e = a->from_fraction(c);
    if (!e) return std::nullopt;
    out.push_back(*e);
  }
  return Poly(a, std::move(out));
}

std::size_t bound_of(const Poly& p, const Poly& q) {
  return static_cast<std::size_t>(std::max(1 + p.degree(), q.degree()));
}

// Coprime P/Q over a field with Q(0) = 1.
std::pair<Poly, Poly> reduce_in_field(const Poly& p, const Poly& q) {
  Poly g = poly_gcd(p, q);
  Poly pr = poly_divmod(p, g).first;
  Poly qr = poly_divmod(q, g).first;
  const Ring& k = *p.ring();
  auto inv = k.inverse(qr.coeff(0));
  if (!inv) throw InternalError("reduced denominator lost its constant term");
  return {pr.scaled(*inv), qr.scaled(*inv)};
}

void require_domain(const RatWitt& f, const char* op) {
  if (!f.ring()->is_domain() || !fraction_field_or_null(*f.ring()))
    throw DomainError(std::string(op) + " needs an integral domain with a fraction field; use truncated series over " +
                      f.ring()->descriptor());
}

// Result over A from a verified K[T] form, using `presentation` when the
// ring cannot clear denominators.
RatWitt settle(const RingPtr& a, const std::pair<Poly, Poly>& k_form, const std::pair<Poly, Poly>& presentation) {
  if (a->is_field() || a->is_strong_fatou()) return RatWitt::from_fraction_field(a, k_form.first, k_form.second);
  RatWitt r = RatWitt::make(presentation.first, presentation.second);
  const auto& rk = *r.reduced_over_fraction_field();
  if (!(rk.first == k_form.first) || !(rk.second == k_form.second))
    throw InternalError("A[T] presentation disagrees with the reconstructed K[T] form");
  return r;
}

}  // namespace

RatWitt RatWitt::make(Poly p, Poly q) {
  require_same_ring(p, q);
  const RingPtr a = p.ring();
  if (!a->is_one(p.coeff(0)) || !a->is_one(q.coeff(0)))
    throw DomainError("rational Witt vector needs P(0) = Q(0) = 1");
  RingPtr k = fraction_field_or_null(*a);
  if (!k) {
    RatWitt r(std::move(p), std::move(q));
    r.bound_ = bound_of(r.p_, r.q_);
    return r;
  }
  auto reduced = reduce_in_field(to_field(p, k), to_field(q, k));
  std::size_t b = bound_of(reduced.first, reduced.second);
  if (a->is_field() || a->is_strong_fatou()) {
    auto pa = pull_back(reduced.first, a), qa = pull_back(reduced.second, a);
    if (!pa || !qa) throw InternalError("reduced form of an A[T] fraction left A[T] over " + a->descriptor());
    RatWitt r(std::move(*pa), std::move(*qa));
    r.reduced_ = true;
    r.reduced_k_ = std::move(reduced);
    r.bound_ = b;
    return r;
  }
  RatWitt r(std::move(p), std::move(q));
  r.reduced_k_ = std::move(reduced);
  r.bound_ = b;
  return r;
}

RatWitt RatWitt::from_fraction_field(const RingPtr& ring, const Poly& pk, const Poly& qk) {
  RingPtr k = fraction_field_or_null(*ring);
  if (!k) throw DomainError(ring->descriptor() + " has no fraction field");
  if (!ring->is_field() && !ring->is_strong_fatou())
    throw DomainError(ring->descriptor() + " is not strong Fatou; an A[T] presentation is required");
  require_same_ring(pk.ring(), k);
  require_same_ring(qk.ring(), k);
  auto [pn, qn] = normalize_constant_terms(pk, qk);
  auto reduced = reduce_in_field(pn, qn);
  auto pa = pull_back(reduced.first, ring), qa = pull_back(reduced.second, ring);
  if (!pa || !qa) throw DomainError("reduced form has coefficients outside " + ring->descriptor());
  return make(std::move(*pa), std::move(*qa));
}

RatWitt RatWitt::zero(const RingPtr& ring) { return make(Poly::constant(ring, ring->one())); }
RatWitt RatWitt::one(const RingPtr& ring) { return make(Poly::linear_one_minus(ring, ring->one())); }
RatWitt RatWitt::teichmuller(const RingPtr& ring, const Elem& a) { return make(Poly::linear_one_minus(ring, a)); }

WittSeries RatWitt::to_series(std::size_t n) const { return expand_fraction(p_, q_, n); }

bool operator==(const RatWitt& a, const RatWitt& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.p_ * b.q_ == b.p_ * a.q_;
}

bool RatWitt::is_witt_zero() const { return p_ == q_; }

RatWitt rw_add(const RatWitt& f, const RatWitt& g) {
  require_same_ring(f.ring(), g.ring());
  return RatWitt::make(f.numerator() * g.numerator(), f.denominator() * g.denominator());
}

RatWitt rw_neg(const RatWitt& f) { return RatWitt::make(f.denominator(), f.numerator()); }

RatWitt rw_sub(const RatWitt& f, const RatWitt& g) { return rw_add(f, rw_neg(g)); }

std::size_t rw_mul_bound(const RatWitt& f, const RatWitt& g) {
  auto degrees = [](const RatWitt& h) {
    const auto& k = h.reduced_over_fraction_field();
    const Poly &p = k ? k->first : h.numerator(), &q = k ? k->second : h.denominator();
    return std::pair<std::size_t, std::size_t>(std::max(p.degree(), 0L), std::max(q.degree(), 0L));
  };
  auto [dp, dq] = degrees(f);
  auto [dr, ds] = degrees(g);
  return std::max(1 + dp * dr + dq * ds, dp * ds + dq * dr);
}

RatWitt rw_mul(const RatWitt& f, const RatWitt& g) {
  require_same_ring(f.ring(), g.ring());
  require_domain(f, "rw_mul");
  const RingPtr& a = f.ring();
  RingPtr k = a->fraction_field();
  const std::size_t b = rw_mul_bound(f, g);
  auto to_k = [&](const WittSeries& s) { return s.mapped(k, [&](const Elem& c) { return a->to_fraction(c); }); };
  RatWitt pairing = rw_mul_root_pairing(f, g);
  if (2 * b + 2 > kMulSeriesPrecision) {
    // Pairing form, checked against the series product at the table limit.
    const std::size_t n = kMulSeriesPrecision;
    if (!(pairing.to_series(n) == witt_mul(f.to_series(n), g.to_series(n))))
      throw InternalError("root pairing product disagrees with the series product");
    return pairing;
  }
  WittSeries s = to_k(witt_mul(f.to_series(2 * b), g.to_series(2 * b)));
  auto k_form = kronecker_reconstruct_poly(s, b);
  WittSeries check = to_k(witt_mul(f.to_series(2 * b + 2), g.to_series(2 * b + 2)));
  if (!(expand_fraction(k_form.first, k_form.second, 2 * b + 2) == check))
    throw InternalError("rw_mul reconstruction does not re-expand to the series product");
  return settle(a, k_form, {pairing.numerator(), pairing.denominator()});
}

Poly root_pairing(const Poly& p, const Poly& r) {
  require_same_ring(p, r);
  const RingPtr& a = p.ring();
  if (p.degree() <= 0 || r.degree() <= 0) return Poly::constant(a, a->one());
  RingPtr at = poly_ring(a, "T_");
  // P*(Z) is monic of degree deg P since P(0) = 1.
  std::vector<Elem> mc;
  const Poly p_star = p.reversed();
  for (const auto& c : p_star.coefficients()) {
    Elem::Vec v{c};
    coeffs::trim(*a, v);
    mc.push_back(Elem(std::move(v)));
  }
  // R(ZT): coefficient of Z^i is r_i T^i.
  std::vector<Elem> hc;
  for (std::size_t i = 0; i < r.coefficients().size(); ++i) {
    Elem::Vec v(i + 1, a->zero());
    v[i] = r.coefficients()[i];
    coeffs::trim(*a, v);
    hc.push_back(Elem(std::move(v)));
  }
  Elem n = norm_monic(Poly(at, mc), Poly(at, hc));
  return Poly(a, n.vec());
}

RatWitt rw_mul_root_pairing(const RatWitt& f, const RatWitt& g) {
  require_same_ring(f.ring(), g.ring());
  const Poly &p = f.numerator(), &q = f.denominator(), &r = g.numerator(), &s = g.denominator();
  return RatWitt::make(root_pairing(p, r) * root_pairing(q, s), root_pairing(p, s) * root_pairing(q, r));
}

Poly poly_frobenius(const Poly& p, unsigned long n) {
  if (n == 0) throw DomainError("Frobenius index must be positive");
  const RingPtr& a = p.ring();
  if (!a->is_one(p.coeff(0))) throw DomainError("poly_frobenius needs P(0) = 1");
  if (n == 1 || p.degree() <= 0) return p;
  RingPtr at = poly_ring(a, "T_");
  // Z^N - T^N over A[T]
  std::vector<Elem> mc(n + 1, at->zero());
  {
    Elem::Vec tn(n + 1, a->zero());
    tn[n] = a->neg(a->one());
    mc[0] = Elem(std::move(tn));
  }
  mc[n] = at->one();
  std::vector<Elem> hc;
  for (const auto& c : p.coefficients()) {
    Elem::Vec v{c};
    coeffs::trim(*a, v);
    hc.push_back(Elem(std::move(v)));
  }
  Elem res = norm_monic(Poly(at, mc), Poly(at, hc));
  const auto& rc = res.vec();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < rc.size(); ++i) {
    if (i % n == 0)
      out.push_back(rc[i]);
    else if (!a->is_zero(rc[i]))
      throw InternalError("Frobenius norm produced a term off the T^N lattice");
  }
  return Poly(a, std::move(out));
}

RatWitt rw_frobenius(const RatWitt& f, unsigned long n) {
  require_domain(f, "rw_frobenius");
  if (n == 0) throw DomainError("Frobenius index must be positive");
  const RingPtr& a = f.ring();
  RingPtr k = a->fraction_field();
  std::size_t b = f.bound();
  WittSeries s = frobenius(f.to_series(n * 2 * b), n).mapped(k, [&](const Elem& c) { return a->to_fraction(c); });
  auto k_form = kronecker_reconstruct_poly(s, b);
  Poly pf = poly_frobenius(f.numerator(), n), qf = poly_frobenius(f.denominator(), n);
  if (!(to_field(pf, k) * k_form.second == k_form.first * to_field(qf, k)))
    throw InternalError("rw_frobenius reconstruction disagrees with the norm form");
  return settle(a, k_form, {pf, qf});
}

RatWitt rw_verschiebung(const RatWitt& f, unsigned long n) {
  if (n == 0) throw DomainError("Verschiebung index must be positive");
  return RatWitt::make(f.numerator().substitute_power(n), f.denominator().substitute_power(n));
}

RatWitt localize(const RatWitt& f) {
  if (f.ring()->descriptor() != "ZZ") throw DomainError("localization is shipped for ZZ only");
  RingPtr qq = rationals();
  auto lift = [&](const Poly& p) { return p.mapped(qq, [](const Elem& c) { return Elem(mpq_class(c.z())); }); };
  return RatWitt::make(lift(f.numerator()), lift(f.denominator()));
}

LocalizationWitness localization_preimage(const RatWitt& f_tilde, const mpz_class& m) {
  if (f_tilde.ring()->descriptor() != "QQ") throw DomainError("localization preimage expects a vector over QQ");
  if (m < 2) throw DomainError("localization needs m >= 2");
  // Least e with den | m^e, or nullopt when den has a prime factor not in m.
  auto exponent = [&](const mpz_class& den) -> std::optional<unsigned long> {
    mpz_class rest = den, g;
    while (rest != 1) {
      mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), m.get_mpz_t());
      if (g == 1) return std::nullopt;
      rest /= g;
    }
    unsigned long e = 0;
    for (mpz_class power = 1; !mpz_divisible_p(power.get_mpz_t(), den.get_mpz_t()); power *= m) ++e;
    return e;
  };
  unsigned long k = 0;
  auto scan = [&](const Poly& p) {
    const auto& c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); ++i) {
      mpz_class den = c[i].q().get_den();
      if (den == 1) continue;
      auto e = exponent(den);
      if (!e) throw DomainError("coefficient " + c[i].q().get_str() + " is not in Z[1/" + m.get_str() + "]");
      k = std::max<unsigned long>(k, (*e + i - 1) / i);
    }
  };
  scan(f_tilde.numerator());
  scan(f_tilde.denominator());
  mpz_class mk;
  mpz_pow_ui(mk.get_mpz_t(), m.get_mpz_t(), k);
  RingPtr zz = integers();
  auto clear = [&](const Poly& p) {
    std::vector<Elem> out;
    mpz_class scale = 1;
    for (const auto& c : p.coefficients()) {
      mpq_class v = c.q() * scale;
      if (v.get_den() != 1) throw InternalError("denominator survived clearing by m^k");
      out.push_back(Elem(mpz_class(v.get_num())));
      scale *= mk;
    }
    return Poly(zz, std::move(out));
  };
  return {RatWitt::make(clear(f_tilde.numerator()), clear(f_tilde.denominator())), k};
}

std::string format_ratwitt(const RatWitt& f) {
  std::string p = format_poly(f.numerator());
  if (f.denominator().is_one()) return p;
  std::string q = format_poly(f.denominator());
  auto wrap = [](const std::string& s) { return is_atomic_literal(s) ? s : "(" + s + ")"; };
  return wrap(p) + "/" + wrap(q);
}

RatWitt parse_ratwitt(const RingPtr& ring, std::string_view text) {
  auto [p, q] = parse_t_fraction(ring, text);
  return RatWitt::make(std::move(p), std::move(q));
}

}  // namespace ratwitt
