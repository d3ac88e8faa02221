#include "ratwitt/descent.hpp"

#include <algorithm>
#include <functional>

#include "ratwitt/matrix.hpp"

namespace ratwitt {

TensorSplit::TensorSplit(unsigned long p, unsigned m, unsigned n)
    : p_(p), m_(m), n_(n), k_(finite_field(p, m)), l_(finite_field(p, m * n)),
      embed_(embed_finite_field(k_, l_)) {
  if (n == 0 || m == 0) throw DomainError("extension degrees must be positive");
  mpz_ui_pow_ui(q_.get_mpz_t(), p, m);
  if (!verify()) throw InternalError("tensor split construction check failed for " + l_->descriptor());
}

Elem TensorSplit::sigma(const Elem& a, unsigned j) const {
  Elem r = a;
  for (unsigned i = 0; i < j % n_; ++i) r = l_->pow(r, q_);
  return r;
}

Elem TensorSplit::factor(const Elem& a, const Elem& b, unsigned j) const { return l_->mul(a, sigma(b, j)); }

bool TensorSplit::in_base(const Elem& a) const { return l_->eq(l_->pow(a, q_), a); }

bool TensorSplit::verify() const {
  const Ring& l = *l_;
  // s fixes K, so (k a) (x) b and a (x) (k b) agree in every factor.
  for (const auto& c : k_->elements()) {
    Elem img = embed_(c);
    if (!l.eq(l.pow(img, q_), img)) return false;
  }
  Elem x = l.one();
  if (as_finite_field(l)->degree() > 1) {
    std::vector<unsigned long> coords(as_finite_field(l)->degree(), 0);
    coords[1] = 1;
    x = as_finite_field(l)->from_coordinates(coords);
  }
  // s^n = id; s^0..s^{n-1} distinct on the generator.
  Elem y = x;
  for (unsigned i = 0; i < n_; ++i) y = l.pow(y, q_);
  if (!l.eq(y, x)) return false;
  std::vector<Elem> seen;
  for (unsigned j = 0; j < n_; ++j) {
    Elem s = sigma(x, j);
    for (const auto& t : seen)
      if (l.eq(s, t)) return false;
    seen.push_back(s);
  }
  // Moore matrix of 1, x, .., x^{n-1}.
  Matrix moore(l_, n_, n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) moore(i, j) = sigma(l.pow(x, static_cast<unsigned long>(i)), j);
  return !l.is_zero(det(moore));
}

EqualizerReport equalizer_check(const RatWitt& f, const TensorSplit& split) {
  if (!same_ring(f.ring(), split.extension()))
    throw RingMismatch("vector is over " + f.ring()->descriptor() + ", expected " + split.extension()->descriptor());
  const RingPtr& l = split.extension();
  EqualizerReport rep;
  rep.equal = true;
  for (unsigned j = 0; j < split.degree(); ++j) {
    auto s = [&](const Elem& c) { return split.sigma(c, j); };
    RatWitt moved = RatWitt::make(f.numerator().mapped(l, s), f.denominator().mapped(l, s));
    if (!(moved == f)) rep.equal = false;
  }
  rep.coefficients_in_base = true;
  for (const Poly* p : {&f.numerator(), &f.denominator()})
    for (const auto& c : p->coefficients())
      if (!split.in_base(c)) rep.coefficients_in_base = false;
  return rep;
}

GaloisInvariantsReport galois_invariants_check(const RatWitt& f, const TensorSplit& split) {
  if (!same_ring(f.ring(), split.base()))
    throw RingMismatch("vector is over " + f.ring()->descriptor() + ", expected " + split.base()->descriptor());
  GaloisInvariantsReport rep;
  auto u = roots_preimage(f, split.embedding());
  if (!u) return rep;
  rep.splits = true;
  rep.preimage = u;
  rep.fixed = u->mapped(split.extension(), [&](const Elem& a) { return split.sigma(a, 1); }) == *u;
  rep.omega_matches = omega(*u) == base_change(f, split.embedding());
  return rep;
}

std::vector<std::vector<Elem>> frobenius_orbits(const TensorSplit& split) {
  const Ring& l = *split.extension();
  std::vector<std::vector<Elem>> orbits;
  std::vector<std::string> done;
  auto seen = [&](const std::string& key) { return std::find(done.begin(), done.end(), key) != done.end(); };
  for (const auto& a : l.elements()) {
    if (l.is_zero(a) || seen(l.format(a))) continue;
    std::vector<Elem> orbit{a};
    done.push_back(l.format(a));
    for (Elem b = split.sigma(a, 1); !l.eq(b, a); b = split.sigma(b, 1)) {
      orbit.push_back(b);
      done.push_back(l.format(b));
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

FixedSumsReport fixed_sums_descend(const TensorSplit& split, std::size_t support_bound) {
  const RingPtr& l = split.extension();
  auto orbits = frobenius_orbits(split);
  FixedSumsReport rep;
  const long mults[] = {-2, -1, 1, 2};
  FormalSum current(l);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t used) {
    if (!current.is_zero()) {
      ++rep.checked;
      RatWitt w = omega(current);
      bool ok = true;
      for (const Poly* p : {&w.numerator(), &w.denominator()})
        for (const auto& c : p->coefficients()) ok = ok && split.in_base(c);
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.counterexample = format_formal_sum(current);
      }
    }
    for (std::size_t i = start; i < orbits.size(); ++i) {
      if (used + orbits[i].size() > support_bound) continue;
      FormalSum orbit_sum(l);
      for (const auto& a : orbits[i]) orbit_sum = orbit_sum + FormalSum::term(l, a);
      for (long n : mults) {
        FormalSum saved = current;
        current = current + orbit_sum.scaled(n);
        rec(i + 1, used + orbits[i].size());
        current = saved;
      }
    }
  };
  rec(0, 0);
  return rep;
}

}  // namespace ratwitt
