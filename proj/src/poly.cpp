#include "ratwitt/poly.hpp"

#include <cctype>

#include "ratwitt/matrix.hpp"

namespace ratwitt {

namespace coeffs {

void trim(const Ring& r, Vec& v) {
  while (!v.empty() && r.is_zero(v.back())) v.pop_back();
}

Vec add(const Ring& r, const Vec& a, const Vec& b) {
  Vec out(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) out[i] = r.add(a[i], b[i]);
    else out[i] = i < a.size() ? a[i] : b[i];
  }
  trim(r, out);
  return out;
}

Vec neg(const Ring& r, const Vec& a) {
  Vec out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(r.neg(c));
  return out;
}

Vec sub(const Ring& r, const Vec& a, const Vec& b) {
  Vec out(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) out[i] = r.sub(a[i], b[i]);
    else out[i] = i < a.size() ? a[i] : r.neg(b[i]);
  }
  trim(r, out);
  return out;
}

Vec mul(const Ring& r, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  return mul_trunc(r, a, b, a.size() + b.size() - 1);
}

Vec mul_trunc(const Ring& r, const Vec& a, const Vec& b, std::size_t n) {
  if (a.empty() || b.empty() || n == 0) return {};
  std::size_t len = std::min(n, a.size() + b.size() - 1);
  Vec out(len, r.zero());
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
  }
  trim(r, out);
  return out;
}

Vec scale(const Ring& r, const Vec& a, const Elem& c) {
  Vec out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(r.mul(x, c));
  trim(r, out);
  return out;
}

Elem eval(const Ring& r, const Vec& a, const Elem& x) {
  Elem acc = r.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = r.add(r.mul(acc, x), a[i]);
  return acc;
}

std::pair<Vec, Vec> divmod(const Ring& r, const Vec& a, const Vec& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  auto inv = r.inverse(b.back());
  if (!inv) throw DomainError("leading coefficient of the divisor is not a unit");
  Vec rem = a;
  trim(r, rem);
  if (rem.size() < b.size()) return {Vec{}, rem};
  Vec quo(rem.size() - b.size() + 1, r.zero());
  while (rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Elem c = r.mul(rem.back(), *inv);
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = r.sub(rem[shift + i], r.mul(c, b[i]));
    rem.pop_back();
    trim(r, rem);
  }
  trim(r, quo);
  return {quo, rem};
}

std::optional<Vec> divide_exact(const Ring& r, const Vec& a, const Vec& b) {
  if (b.empty()) return std::nullopt;
  Vec rem = a;
  trim(r, rem);
  if (rem.empty()) return Vec{};
  if (rem.size() < b.size()) return std::nullopt;
  Vec quo(rem.size() - b.size() + 1, r.zero());
  while (rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    auto c = r.divide_exact(rem.back(), b.back());
    if (!c) return std::nullopt;
    quo[shift] = *c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = r.sub(rem[shift + i], r.mul(*c, b[i]));
    if (!r.is_zero(rem.back())) return std::nullopt;
    rem.pop_back();
    trim(r, rem);
  }
  if (!rem.empty()) return std::nullopt;
  trim(r, quo);
  return quo;
}

namespace {
Vec make_monic(const Ring& r, const Vec& a) {
  if (a.empty()) return a;
  return scale(r, a, *r.inverse(a.back()));
}

Vec primitive_part(const Ring& r, const Vec& a) {
  if (a.empty()) return a;
  Elem c = content(r, a);
  Vec out;
  for (const auto& x : a) out.push_back(*r.divide_exact(x, c));
  return out;
}

// lc(b)^e * a mod b, never dividing.
Vec pseudo_rem(const Ring& r, Vec a, const Vec& b) {
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Elem la = a.back();
    a = scale(r, a, b.back());
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = r.sub(a[shift + i], r.mul(la, b[i]));
    trim(r, a);
  }
  return a;
}
}  // namespace

Vec gcd_field(const Ring& r, const Vec& a0, const Vec& b0) {
  Vec a = a0, b = b0;
  trim(r, a);
  trim(r, b);
  while (!b.empty()) {
    Vec rem = divmod(r, a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return make_monic(r, a);
}

Elem content(const Ring& r, const Vec& a) {
  Elem g = r.zero();
  for (const auto& c : a) g = r.gcd(g, c);
  return g;
}

Vec gcd_ufd(const Ring& r, const Vec& a0, const Vec& b0) {
  Vec a = a0, b = b0;
  trim(r, a);
  trim(r, b);
  auto normalize = [&](Vec v) {
    if (v.empty()) return v;
    Elem u = r.canonical_unit(v.back());
    if (r.is_one(u)) return v;
    return scale(r, v, *r.inverse(u));
  };
  if (a.empty()) return normalize(b);
  if (b.empty()) return normalize(a);
  Elem c = r.gcd(content(r, a), content(r, b));
  a = primitive_part(r, a);
  b = primitive_part(r, b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Vec rem = pseudo_rem(r, a, b);
    a = std::move(b);
    b = primitive_part(r, rem);
  }
  return normalize(scale(r, primitive_part(r, a), c));
}

}  // namespace coeffs

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly::Poly(RingPtr ring, std::vector<Elem> coefficients) : ring_(std::move(ring)), c_(std::move(coefficients)) {
  coeffs::trim(*ring_, c_);
}

Poly Poly::constant(RingPtr ring, Elem c) { return Poly(std::move(ring), {std::move(c)}); }

Poly Poly::monomial(RingPtr ring, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, ring->zero());
  v[degree] = std::move(c);
  return Poly(std::move(ring), std::move(v));
}

Poly Poly::linear_one_minus(RingPtr ring, const Elem& a) {
  Elem one = ring->one(), na = ring->neg(a);
  return Poly(std::move(ring), {one, na});
}

bool Poly::is_one() const { return c_.size() == 1 && ring_->is_one(c_[0]); }

Elem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }

const Elem& Poly::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

void require_same_ring(const Poly& a, const Poly& b) { require_same_ring(a.ring(), b.ring()); }

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(*this, o);
  return Poly(ring_, coeffs::add(*ring_, c_, o.c_));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_ring(*this, o);
  return Poly(ring_, coeffs::sub(*ring_, c_, o.c_));
}

Poly Poly::operator-() const { return Poly(ring_, coeffs::neg(*ring_, c_)); }

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(*this, o);
  return Poly(ring_, coeffs::mul(*ring_, c_, o.c_));
}

Poly Poly::scaled(const Elem& c) const { return Poly(ring_, coeffs::scale(*ring_, c_, c)); }

Poly Poly::truncated(std::size_t n) const {
  if (c_.size() <= n) return *this;
  return Poly(ring_, std::vector<Elem>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

Elem Poly::operator()(const Elem& x) const { return coeffs::eval(*ring_, c_, x); }

Poly Poly::substitute_power(std::size_t n) const {
  if (n == 0) throw DomainError("substitution power must be positive");
  if (c_.empty()) return *this;
  std::vector<Elem> v((c_.size() - 1) * n + 1, ring_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * n] = c_[i];
  return Poly(ring_, std::move(v));
}

Poly Poly::substitute_scaled(const Elem& c) const {
  std::vector<Elem> v;
  Elem p = ring_->one();
  for (const auto& x : c_) {
    v.push_back(ring_->mul(x, p));
    p = ring_->mul(p, c);
  }
  return Poly(ring_, std::move(v));
}

Poly Poly::reversed() const { return Poly(ring_, std::vector<Elem>(c_.rbegin(), c_.rend())); }

Poly Poly::derivative() const {
  std::vector<Elem> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(ring_->mul_int(c_[i], mpz_class(static_cast<unsigned long>(i))));
  return Poly(ring_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_) || a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!a.ring_->eq(a.c_[i], b.c_[i])) return false;
  return true;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  if (!f.ring()->is_field()) throw DomainError("poly_gcd needs a field, got " + f.ring()->descriptor());
  return Poly(f.ring(), coeffs::gcd_field(*f.ring(), f.coefficients(), g.coefficients()));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  auto [q, r] = coeffs::divmod(*f.ring(), f.coefficients(), g.coefficients());
  return {Poly(f.ring(), std::move(q)), Poly(f.ring(), std::move(r))};
}

Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  auto inv = f.ring()->inverse(f.leading());
  if (!inv) throw DomainError("leading coefficient is not a unit");
  return f.scaled(*inv);
}

Elem resultant(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  const Ring& r = *f.ring();
  std::size_t m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
  if (m == 0) return r.pow(f.leading(), static_cast<unsigned long>(n));
  if (n == 0) return r.pow(g.leading(), static_cast<unsigned long>(m));
  std::size_t s = m + n;
  Matrix syl(f.ring(), s, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) syl(i, i + j) = f.coefficients()[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) syl(n + i, i + j) = g.coefficients()[n - j];
  return det(syl);
}

Elem norm_monic(const Poly& m, const Poly& h) {
  require_same_ring(m, h);
  if (m.degree() < 1 || !m.ring()->is_one(m.leading())) throw DomainError("norm_monic needs a monic modulus");
  std::size_t n = static_cast<std::size_t>(m.degree());
  const Ring& r = *m.ring();
  Matrix mat(m.ring(), n, n);
  coeffs::Vec col = coeffs::divmod(r, h.coefficients(), m.coefficients()).second;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < col.size(); ++i) mat(i, j) = col[i];
    // col <- Z * col mod m
    coeffs::Vec shifted(col.size() + 1, r.zero());
    for (std::size_t i = 0; i < col.size(); ++i) shifted[i + 1] = col[i];
    coeffs::trim(r, shifted);
    col = coeffs::divmod(r, shifted, m.coefficients()).second;
  }
  return det(mat);
}

bool is_atomic_literal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '/')) return false;
  return true;
}

namespace {
std::string term(const Ring& base, const Elem& c, const std::string& mon) {
  if (mon.empty()) return base.format(c);
  if (base.is_one(c)) return mon;
  std::string s = base.format(c);
  if (s == "-1") return "-" + mon;
  bool atomic = is_atomic_literal(s) || (s[0] == '-' && is_atomic_literal(s.substr(1)));
  return (atomic ? s : "(" + s + ")") + "*" + mon;
}

std::string monomial_text(const std::string& var, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return var;
  return var + "^" + std::to_string(i);
}

void append_term(std::string& out, const std::string& t) {
  if (out.empty() || t[0] == '-') out += t;
  else out += "+" + t;
}
}  // namespace

std::string format_poly(const Poly& p, const std::string& var) {
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!p.ring()->is_zero(c[i])) append_term(out, term(*p.ring(), c[i], monomial_text(var, i)));
  return out.empty() ? "0" : out;
}

std::string format_poly_desc(const Ring& base, const std::vector<Elem>& c, const std::string& var) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;)
    if (!base.is_zero(c[i])) append_term(out, term(base, c[i], monomial_text(var, i)));
  return out.empty() ? "0" : out;
}

}  // namespace ratwitt
